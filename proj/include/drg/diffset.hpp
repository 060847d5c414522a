#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drg/cayley.hpp"
#include "drg/design.hpp"
#include "drg/group.hpp"

namespace drg {

// ---------------------------------------------------------------- profiles ----

// Exact representation counts for a subset D of a group H.
struct DifferenceProfile {
    GroupPtr group;
    std::vector<int> D;                     // sorted, deduplicated
    std::vector<long long> diff_counts;     // per h: #{(d1,d2) : h = d1 d2^-1}
    std::vector<long long> reverse_counts;  // per h: #{(d1,d2) : h = d1^-1 d2}
    std::vector<long long> triple_counts;   // per h: #{(d1,d2,d3) : h = d1 d2^-1 d3}

    int k() const { return (int)D.size(); }
    bool in_d(int h) const;
};

DifferenceProfile difference_profile(GroupPtr h, std::vector<int> d);

// ------------------------------------------------------- family recognizers ----

struct DSParams {
    int n = 0, k = 0;
    long long mu = 0;
    bool trivial = false;  // k in {0, 1, n-1, n}
    bool operator==(const DSParams&) const = default;
};

// Difference set: diff_counts constant off the identity.
std::optional<DSParams> is_difference_set(const DifferenceProfile& pr);
std::optional<DSParams> is_difference_set(GroupPtr h, const std::vector<int>& d);

struct PGDSParams {
    int n = 0, k = 0;
    long long alpha = 0, beta = 0;
    bool operator==(const PGDSParams&) const = default;
};

// Partial geometric difference set: every h is a product d1 d2^-1 d3 in
// exactly 2k-1+beta ways when h is in D and alpha ways when it is not.
std::optional<PGDSParams> is_partial_geometric_ds(const DifferenceProfile& pr);
std::optional<PGDSParams> is_partial_geometric_ds(GroupPtr h, const std::vector<int>& d);

// Two-sided 0-or-mu condition on the difference counts: both diff_counts and
// reverse_counts take only values {0, mu} off the identity.
bool is_partial_mu_geometric_ds(const DifferenceProfile& pr, long long mu);
bool is_partial_mu_geometric_ds(GroupPtr h, const std::vector<int>& d, long long mu);

struct RDSParams {
    int m = 0, r = 0, k = 0;  // m = [H:N], r = |N|
    long long mu = 0;
    bool operator==(const RDSParams&) const = default;
};

// Relative difference set with forbidden subgroup N: diff count 0 on N\{e}
// and a constant mu >= 1 off N. N must be a proper subgroup of H.
std::optional<RDSParams> is_relative_difference_set(const DifferenceProfile& pr,
                                                    const Subgroup& n);

struct ForbiddenSearch {
    std::optional<Subgroup> subgroup;  // zero-difference elements plus e, when closed
    std::vector<int> zero_set;         // the candidate set (always reported)
    bool degenerate = false;           // candidate == {e}: D is a plain difference set
    std::string witness;               // why the candidate is not a subgroup, when it isn't
};

// Candidate forbidden subgroup of D: the elements with difference count zero,
// together with the identity.
ForbiddenSearch find_forbidden_subgroup(const DifferenceProfile& pr);

struct SymmetryCheck {
    bool symmetric = false;
    std::optional<Subgroup> inverse_forbidden;  // forbidden subgroup of D^-1
    std::optional<RDSParams> inverse_params;
};

// Is D^-1 also a relative difference set (with whatever forbidden subgroup)?
// Precondition: (pr, n) passes is_relative_difference_set. When n is normal
// the answer is a theorem, asserted here.
SymmetryCheck is_symmetric_rds(const DifferenceProfile& pr, const Subgroup& n);

// -------------------------------------------------------------- extraction ----

enum class DiffsetFamily { difference_set, partial_mu_geometric_ds, symmetric_rds };

std::string family_name(DiffsetFamily f);

// Decoding of a bipartite distance-regular Cayley graph into difference-set
// data on the part H containing the identity.
struct BridgeWitness {
    GroupPtr G;
    Subgroup part;               // H as a subgroup of G
    GroupPtr H;                  // H re-indexed as a standalone group
    std::vector<int> parent_of;  // H index -> G index
    int a = -1;                  // chosen coset representative (smallest in G\H)
    std::vector<int> S;          // connection set, G indices
    std::vector<int> D;          // = S a^-1, H indices, sorted
    bool inverse_law = false;    // D^-1 == a D a, verified in G
    IntersectionArray array;
    bool antipodal = false;

    DiffsetFamily family{};
    std::optional<DSParams> ds;           // diameter 3
    std::optional<PGDSParams> pgds;       // diameter 4
    std::optional<RDSParams> rds;         // diameter 4, antipodal
    std::optional<Subgroup> forbidden;    // subgroup of H (standalone indices)
    std::vector<int> other_reps;          // further coset representatives re-tested
};

// Requires a connected bipartite distance-regular graph of diameter 3 or 4
// (certified here; other graphs are rejected with input_error). Verification
// failures beyond that point throw std::runtime_error: they would contradict
// the structure theorems this decoding rests on.
BridgeWitness bridge_extract(const CayleyGraph& cg);

// ------------------------------------------------------------ construction ----

// A Cayley graph together with a verified isomorphism from the incidence
// graph of development(H, D).
struct ConstructedBridge {
    CayleyGraph cayley;
    IncidenceStructure dev;
    std::vector<int> map;  // incidence-graph vertex -> Cayley vertex, verified edge by edge
    std::string description;
};

// G = Dih(H) for abelian H; S = Dc. Point h and block Dh land on vertices h
// and c*h of the Cayley graph.
ConstructedBridge bridge_construct_dih(GroupPtr h, const std::vector<int>& d);

// D lives inside an index-2 subgroup of a supplied ambient group g (in g's
// indices), with a in g minus that subgroup and D^-1 = aDa (rejected with a
// witness otherwise); S = Da. Point h maps to vertex h, block Dh to a^-1 h.
ConstructedBridge bridge_construct_embed(const Subgroup& h, const std::vector<int>& d_parent,
                                         int a);

// --------------------------------------------------------------- transport ----

struct TransportResult {
    CayleyGraph transported;  // Cay(H x| <c>, S a^-1 c)
    std::vector<int> map;     // old vertex -> new vertex, verified edge by edge
};

// Rebuilds Cay(G, S) on H x| Z2 where H is the identity's part: the map is
// h -> h, a^-1 h -> c h, and the new connection set is S a^-1 c. The
// automorphism defining the semidirect product defaults to inversion (H must
// then be abelian, and inverse-closure of the new set is automatic).
// Rejects with input_error when the transported set is not inverse-closed.
TransportResult transport_no_involutions(const CayleyGraph& cg, int a,
                                         const AutomorphismDescriptor& aut = {});

// -------------------------------------------------------------- guarantees ----

enum class GuaranteeVerdict {
    odd_n,                     // |H| odd
    odd_k,                     // |S| odd
    nonsingular_n_not_div_4,   // |H| = 2 mod 4 and det A != 0
    involution_found,          // no sufficient condition, but a witness exists
    exceptional,               // no involution outside H at all
};

std::string verdict_name(GuaranteeVerdict v);

struct GuaranteeReport {
    GuaranteeVerdict verdict{};
    Subgroup part;
    std::optional<int> involution;  // witness a in G\H with a^2 = e
    std::string detail;
};

// Which sufficient condition (if any) guarantees that Cay(G,S) lives on
// H x| Z2? Requires a connected bipartite graph. When a sufficient condition
// holds but no involution outside H exists, throws std::runtime_error (that
// would be a counterexample to a theorem).
GuaranteeReport semidirect_guarantee(const CayleyGraph& cg);

// -------------------------------------------------------- cyclic subanalysis ----

struct SubanalysisReport {
    int k1 = 0, k2 = 0;
    long long m = 0;                // points of the induced design
    long long k_minus_mu = 0;
    PartialGeometricParams pgd{};   // (m, k1, alpha, beta)
    bool square_identity = false;   // (k1-k2)^2 == k - mu
    bool product_identity = false;  // 4 k1 k2 == n mu
    bool quotient_ok = false;       // {C, G\C} equitable with matrix [[k1,k2],[k2,k1]]
    bool eigenvalue_ok = false;     // det(A - (k1-k2) I) == 0 on the full graph
    bool spectrum_ok = false;       // eigenvalues of Cay(C, S∩C) are exactly {±k1, ±sqrt(k-mu), 0}
    bool annihilation_ok = false;   // A(A²-k1²I)(A²-(k-mu)I) = 0 on Cay(C, S∩C)
    bool design_ok = false;         // induced structure is a PGD with (m, k1, alpha, beta)
    CayleyGraph gamma_c;            // Cay(C, S ∩ C), C re-indexed as Z_n
};

// For a bipartite distance-regular Cayley graph of diameter 3 with mu < k-1
// on a group with an index-2 cyclic subgroup C different from the identity's
// part: certifies that Cay(C, S∩C) is the incidence graph of a partial
// geometric design with parameters (m, k1, alpha, beta).
SubanalysisReport dihedral_subanalysis(const CayleyGraph& cg, const Subgroup& c);

// k - mu odd: necessary for a difference set in a dihedral group.
bool dihedral_ds_parity_ok(long long k, long long mu);

}  // namespace drg
