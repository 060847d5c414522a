#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace drg {

// Thrown for malformed user input (bad specs, bad element words, bad files).
// Internal consistency failures use std::runtime_error instead.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A finite group as an explicit multiplication table. Element indices run
// 0..n-1; the table is immutable after construction and safe to share.
struct GroupTable {
    int n = 0;
    int identity = 0;
    std::vector<int> mul;  // row-major: mul[a*n+b] = a*b
    std::vector<int> inv;
    std::vector<std::string> labels;  // size n (constructors always fill it)
    std::string name;

    int op(int a, int b) const { return mul[static_cast<size_t>(a) * n + b]; }
    int inverse(int g) const { return inv[g]; }
    int power(int g, long long t) const;
    std::string label(int g) const;
    // index of the element with this exact label, or -1
    int find_label(const std::string& s) const;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

// ---------------------------------------------------------------- specs ----

struct GroupSpec;
using SpecPtr = std::shared_ptr<const GroupSpec>;

struct CyclicSpec { int n; };
struct DihedralSpec { int n; };              // order 2n
struct DicyclicSpec { int m; };              // Q_{4m}
struct SemidihedralSpec { int ell; };        // SD_{4m}, m = 2^(ell-1), order 2^(ell+1)
struct ElementaryAbelianSpec { int p, e; };  // order p^e
struct DirectProductSpec { SpecPtr left, right; };
struct GeneralizedDihedralSpec { SpecPtr base; };  // base must be abelian

// Either inversion (x -> x^-1, valid when the base group is abelian) or an
// explicit permutation of the base group, checked to be an automorphism
// whose square is the identity.
struct AutomorphismDescriptor {
    bool inversion = true;
    std::vector<int> perm;  // used when !inversion
};

struct SemidirectZ2Spec {
    SpecPtr base;
    AutomorphismDescriptor aut;
};

struct GroupSpec {
    std::variant<CyclicSpec, DihedralSpec, DicyclicSpec, SemidihedralSpec,
                 ElementaryAbelianSpec, DirectProductSpec,
                 GeneralizedDihedralSpec, SemidirectZ2Spec>
        v;
};

GroupSpec spec_cyclic(int n);
GroupSpec spec_dihedral(int n);
GroupSpec spec_dicyclic(int m);
GroupSpec spec_semidihedral(int ell);
GroupSpec spec_elementary_abelian(int p, int e);
GroupSpec spec_product(GroupSpec a, GroupSpec b);
GroupSpec spec_generalized_dihedral(GroupSpec base);
GroupSpec spec_semidirect_z2(GroupSpec base, AutomorphismDescriptor aut);

// Textual spec grammar used by the CLI, e.g.
//   cyclic(7)  dihedral(6)  dicyclic(3)  semidihedral(3)
//   elemabelian(2,5)  product(cyclic(2),product(cyclic(3),cyclic(6)))
//   gendihedral(elemabelian(3,4))
GroupSpec parse_group_spec(const std::string& text);

// Builds the multiplication table for a spec. Constructors reject orders
// above 5000 unless allow_large is set. The returned table always passes
// validate_group.
GroupPtr make_group(const GroupSpec& spec, bool allow_large = false);

// Wraps an externally supplied table (e.g. loaded from a file) after
// validating the group axioms.
GroupPtr make_group_from_table(GroupTable table);

// Adjoins an order-2 element c to an already-built group: elements of the
// base at 0..n-1, c*x at n+x, with c x c = aut(x). The default automorphism
// is inversion (base must be abelian), giving the generalized dihedral group
// Dih(base); an explicit order-<=2 automorphism may be supplied instead.
GroupPtr adjoin_z2(GroupPtr base, const AutomorphismDescriptor& aut = {});

// Full axiom check: closure, identity, inverses; associativity exhaustively
// for n <= 256 and on 100k random triples beyond. Throws on violation.
void validate_group(const GroupTable& g);

// ------------------------------------------------------------- subgroups ----

struct Subgroup {
    GroupPtr parent;
    std::vector<int> elements;  // sorted
    std::vector<char> member;   // size parent->n

    int order() const { return static_cast<int>(elements.size()); }
    bool contains(int g) const { return member[g] != 0; }
    long long index() const { return parent->n / order(); }
};

// Validates closure, identity, inverses (and Lagrange as a sanity check).
Subgroup make_subgroup(GroupPtr g, std::vector<int> elements);

// Smallest subgroup containing gens: closure under multiplication/inverse.
Subgroup generated_subgroup(GroupPtr g, const std::vector<int>& gens);

bool is_normal(const Subgroup& h);

// All subgroups of index exactly 2, via the quotient by the subgroup
// generated by squares and commutators (an elementary abelian 2-group whose
// hyperplanes pull back to exactly the index-2 subgroups). Deterministic
// order, sorted by element list.
std::vector<Subgroup> index2_subgroups(GroupPtr g);

// Right cosets Hg; the first cell is H itself, the rest ordered by their
// least element.
std::vector<std::vector<int>> cosets(const Subgroup& h);

// All g != e with g^2 = e; the second form restricts to parent \ h.
std::vector<int> involutions(const GroupTable& g);
std::vector<int> involutions_outside(const Subgroup& h);

// For a normal index-2 subgroup H of G: the smallest-index involution in
// G \ H, if any. Such a witness a certifies G = H x| <a>.
std::optional<int> semidirect_decomposition(const Subgroup& h);

int element_order(const GroupTable& g, int x);
bool is_abelian(const GroupTable& g);

// Re-index a subgroup as a standalone group. old_of_new[i] gives the parent
// index of the new element i (sorted order of h.elements).
GroupPtr subgroup_as_group(const Subgroup& h, std::vector<int>* old_of_new = nullptr);

// ----------------------------------------------------------------- labels ----

// Shortest-word labels over named generators, BFS order ("e", "a", "a^2*b", ...).
std::vector<std::string> word_labels(const GroupTable& g,
                                     const std::vector<std::pair<std::string, int>>& gens);

// Copy of the table with new labels.
GroupPtr with_labels(const GroupTable& g, std::vector<std::string> labels);

// Resolves one element token: exact label match first, then a decimal index,
// then a product word like "a^2*b" whose factors are labels.
int parse_element(const GroupTable& g, const std::string& token);

// Comma-separated list of tokens.
std::vector<int> parse_element_set(const GroupTable& g, const std::string& text);

}  // namespace drg
