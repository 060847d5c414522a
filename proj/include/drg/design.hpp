#pragma once

#include <optional>
#include <string>
#include <vector>

#include "drg/cayley.hpp"
#include "drg/group.hpp"

namespace drg {

// Points 0..points-1; blocks are sorted point sets. Blocks are labeled, not
// deduplicated: a development always has exactly |H| blocks even when
// translates coincide.
struct IncidenceStructure {
    int points = 0;
    std::vector<std::vector<int>> blocks;
    std::string name;
};

IncidenceStructure make_incidence(int points, std::vector<std::vector<int>> blocks,
                                  std::string name = "");

// Development of D in H: points are the elements of H, block h is the right
// translate Dh.
IncidenceStructure development(const GroupTable& h, const std::vector<int>& d);

// ------------------------------------------------------------ recognizers ----

struct Sym2Design {
    long long n, k, mu;
    bool operator==(const Sym2Design&) const = default;
};

// Symmetric 2-design: equal block sizes k >= 2, block count = point count,
// every point pair in exactly mu blocks. The identity k(k-1) = (n-1)mu is
// asserted (it is a theorem at this point).
std::optional<Sym2Design> is_symmetric_2_design(const IncidenceStructure& inc,
                                                std::string* witness = nullptr);

struct PartialGeometricParams {
    long long n, k, alpha, beta;
    bool operator==(const PartialGeometricParams&) const = default;
};

// Symmetric partial geometric design: a 1-design with n points and n blocks
// of size k such that the number of incident pairs (p',B') with p' != p,
// B' != B, p' in B, p in B' is a constant beta when p in B and a constant
// alpha when p not in B.
std::optional<PartialGeometricParams> is_partial_geometric(const IncidenceStructure& inc,
                                                           std::string* witness = nullptr);

// Two-sided 0-or-mu condition: every point pair meets in 0 or mu blocks and
// every block pair shares 0 or mu points.
bool is_partial_mu_geometric(const IncidenceStructure& inc, long long mu);

struct TransversalParams {
    long long mu, r;
    bool operator==(const TransversalParams&) const = default;
};

// Symmetric transversal design STD_mu[r*mu; r]: the "meets in 0 blocks"
// relation (plus equality) partitions the points into classes of size r,
// all other point pairs meet in exactly mu blocks, the dual holds with the
// same (mu, r), every block is a transversal of the point classes, and
// k = r*mu, n = r*k. The class size r is inferred, not supplied.
std::optional<TransversalParams> is_symmetric_transversal(const IncidenceStructure& inc);

// --------------------------------------------------------------- operators ----

// Transpose: point p of the dual is original block p; dual block h collects
// the original blocks through point h. dual(dual(I)) == I exactly.
IncidenceStructure dual(const IncidenceStructure& inc);

// Each block replaced by its complement in the point set.
IncidenceStructure complement_design(const IncidenceStructure& inc);

// Bipartite graph on points 0..n_p-1 followed by blocks n_p..n_p+n_b-1.
Graph incidence_graph(const IncidenceStructure& inc);

}  // namespace drg
