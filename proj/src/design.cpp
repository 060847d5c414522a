#include "drg/design.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace drg {

IncidenceStructure make_incidence(int points, std::vector<std::vector<int>> blocks,
                                  std::string name) {
    if (points < 0) throw input_error("negative point count");
    IncidenceStructure inc;
    inc.points = points;
    inc.blocks = std::move(blocks);
    inc.name = std::move(name);
    for (auto& b : inc.blocks) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
        for (int p : b)
            if (p < 0 || p >= points) throw input_error("block point out of range");
    }
    return inc;
}

IncidenceStructure development(const GroupTable& h, const std::vector<int>& d) {
    for (int x : d)
        if (x < 0 || x >= h.n) throw input_error("development base set element out of range");
    std::vector<std::vector<int>> blocks(h.n);
    for (int g = 0; g < h.n; ++g) {
        blocks[g].reserve(d.size());
        for (int x : d) blocks[g].push_back(h.op(x, g));
    }
    return make_incidence(h.n, std::move(blocks), "dev(" + h.name + ")");
}

namespace {

// lambda[p][q] = number of blocks containing both points
std::vector<std::vector<int>> pair_counts(const IncidenceStructure& inc) {
    std::vector<std::vector<int>> lam(inc.points, std::vector<int>(inc.points, 0));
    for (const auto& b : inc.blocks)
        for (size_t i = 0; i < b.size(); ++i)
            for (size_t j = 0; j < b.size(); ++j) ++lam[b[i]][b[j]];
    return lam;  // diagonal holds the replication numbers
}

// uniform block size, or -1
long long uniform_block_size(const IncidenceStructure& inc) {
    if (inc.blocks.empty()) return -1;
    size_t k = inc.blocks[0].size();
    for (const auto& b : inc.blocks)
        if (b.size() != k) return -1;
    return (long long)k;
}

}  // namespace

std::optional<Sym2Design> is_symmetric_2_design(const IncidenceStructure& inc,
                                                std::string* witness) {
    long long n = inc.points;
    if ((long long)inc.blocks.size() != n) {
        if (witness) *witness = "block count differs from point count";
        return std::nullopt;
    }
    long long k = uniform_block_size(inc);
    if (k < 2) {
        if (witness) *witness = "blocks are not of a uniform size >= 2";
        return std::nullopt;
    }
    auto lam = pair_counts(inc);
    long long mu = n >= 2 ? lam[0][1] : 0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q)
            if (lam[p][q] != mu) {
                if (witness)
                    *witness = "points " + std::to_string(p) + "," + std::to_string(q) +
                               " lie in " + std::to_string(lam[p][q]) + " blocks, expected " +
                               std::to_string(mu);
                return std::nullopt;
            }
    if (k * (k - 1) != (n - 1) * mu)
        throw std::runtime_error("symmetric 2-design violates k(k-1) = (n-1)mu");
    return Sym2Design{n, k, mu};
}

std::optional<PartialGeometricParams> is_partial_geometric(const IncidenceStructure& inc,
                                                           std::string* witness) {
    long long n = inc.points;
    if ((long long)inc.blocks.size() != n) {
        if (witness) *witness = "block count differs from point count";
        return std::nullopt;
    }
    long long k = uniform_block_size(inc);
    if (k < 1) {
        if (witness) *witness = "blocks are not of a uniform positive size";
        return std::nullopt;
    }
    auto lam = pair_counts(inc);
    for (int p = 0; p < n; ++p)
        if (lam[p][p] != k) {
            if (witness)
                *witness = "not a 1-design: point " + std::to_string(p) + " lies in " +
                           std::to_string(lam[p][p]) + " blocks, expected " + std::to_string(k);
            return std::nullopt;
        }
    // For a pair (p, B):
    //   flag (p in B):      count = sum over p' in B\{p} of (lambda(p,p') - 1)
    //   anti-flag (p not in B): count = sum over p' in B of lambda(p,p')
    // (subtracting B itself, which contains both p and p' exactly when p in B)
    long long alpha = -1, beta = -1;
    for (int bi = 0; bi < n; ++bi) {
        const auto& b = inc.blocks[bi];
        std::vector<char> in_b(inc.points, 0);
        for (int p : b) in_b[p] = 1;
        for (int p = 0; p < n; ++p) {
            long long cnt = 0;
            if (in_b[p]) {
                for (int q : b)
                    if (q != p) cnt += lam[p][q] - 1;
                if (beta < 0) beta = cnt;
                if (cnt != beta) {
                    if (witness)
                        *witness = "flag (" + std::to_string(p) + ",B" + std::to_string(bi) +
                                   ") count " + std::to_string(cnt) + " != " + std::to_string(beta);
                    return std::nullopt;
                }
            } else {
                for (int q : b) cnt += lam[p][q];
                if (alpha < 0) alpha = cnt;
                if (cnt != alpha) {
                    if (witness)
                        *witness = "anti-flag (" + std::to_string(p) + ",B" + std::to_string(bi) +
                                   ") count " + std::to_string(cnt) + " != " + std::to_string(alpha);
                    return std::nullopt;
                }
            }
        }
    }
    if (alpha < 0) alpha = 0;  // complete blocks: no anti-flags exist
    return PartialGeometricParams{n, k, alpha, beta};
}

bool is_partial_mu_geometric(const IncidenceStructure& inc, long long mu) {
    if (mu < 1) throw input_error("mu must be positive");
    auto lam = pair_counts(inc);
    for (int p = 0; p < inc.points; ++p)
        for (int q = p + 1; q < inc.points; ++q)
            if (lam[p][q] != 0 && lam[p][q] != mu) return false;
    auto lamd = pair_counts(dual(inc));
    for (int p = 0; p < (int)inc.blocks.size(); ++p)
        for (int q = p + 1; q < (int)inc.blocks.size(); ++q)
            if (lamd[p][q] != 0 && lamd[p][q] != mu) return false;
    return true;
}

namespace {

// partition by the "disjoint or equal" relation; nullopt if not an
// equivalence or classes are unequal; also reports the off-class count
std::optional<std::pair<long long, long long>> zero_class_structure(
    const std::vector<std::vector<int>>& lam, int n) {
    std::vector<int> cls(n, -1);
    int nc = 0;
    for (int p = 0; p < n; ++p) {
        if (cls[p] >= 0) continue;
        cls[p] = nc;
        for (int q = p + 1; q < n; ++q)
            if (lam[p][q] == 0) {
                if (cls[q] >= 0) return std::nullopt;
                cls[q] = nc;
            }
        ++nc;
    }
    // uniform class size
    std::vector<long long> size(nc, 0);
    for (int p = 0; p < n; ++p) ++size[cls[p]];
    for (int c = 1; c < nc; ++c)
        if (size[c] != size[0]) return std::nullopt;
    // equivalence + constant off-class count
    long long mu = -1;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) {
            bool same = cls[p] == cls[q];
            if (same != (lam[p][q] == 0)) return std::nullopt;
            if (!same) {
                if (mu < 0) mu = lam[p][q];
                if (lam[p][q] != mu) return std::nullopt;
            }
        }
    return std::make_pair(mu, size[0]);
}

}  // namespace

std::optional<TransversalParams> is_symmetric_transversal(const IncidenceStructure& inc) {
    long long n = inc.points;
    if ((long long)inc.blocks.size() != n || n < 2) return std::nullopt;
    long long k = uniform_block_size(inc);
    if (k < 1) return std::nullopt;
    auto lam = pair_counts(inc);
    auto pt = zero_class_structure(lam, inc.points);
    if (!pt) return std::nullopt;
    auto [mu, r] = *pt;
    if (mu < 1) return std::nullopt;  // complete design: every pair disjoint-free
    auto du = dual(inc);
    auto bl = zero_class_structure(pair_counts(du), (int)du.points);
    if (!bl || *bl != *pt) return std::nullopt;
    if (k != r * mu || n != r * k) return std::nullopt;
    // every block is a transversal of the point classes
    std::vector<int> cls(inc.points, -1);
    {
        int nc = 0;
        for (int p = 0; p < inc.points; ++p) {
            if (cls[p] >= 0) continue;
            cls[p] = nc;
            for (int q = p + 1; q < inc.points; ++q)
                if (lam[p][q] == 0) cls[q] = nc;
            ++nc;
        }
    }
    for (const auto& b : inc.blocks) {
        std::set<int> seen;
        for (int p : b)
            if (!seen.insert(cls[p]).second) return std::nullopt;
        if ((long long)seen.size() != k) return std::nullopt;
    }
    return TransversalParams{mu, r};
}

IncidenceStructure dual(const IncidenceStructure& inc) {
    std::vector<std::vector<int>> blocks(inc.points);
    for (int b = 0; b < (int)inc.blocks.size(); ++b)
        for (int p : inc.blocks[b]) blocks[p].push_back(b);
    IncidenceStructure out;
    out.points = (int)inc.blocks.size();
    out.blocks = std::move(blocks);
    out.name = inc.name.empty() ? "dual" : "dual(" + inc.name + ")";
    return out;
}

IncidenceStructure complement_design(const IncidenceStructure& inc) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(inc.blocks.size());
    for (const auto& b : inc.blocks) {
        std::vector<char> in(inc.points, 0);
        for (int p : b) in[p] = 1;
        std::vector<int> comp;
        for (int p = 0; p < inc.points; ++p)
            if (!in[p]) comp.push_back(p);
        blocks.push_back(std::move(comp));
    }
    return make_incidence(inc.points, std::move(blocks),
                          inc.name.empty() ? "complement" : "compl(" + inc.name + ")");
}

Graph incidence_graph(const IncidenceStructure& inc) {
    int np = inc.points, nb = (int)inc.blocks.size();
    std::vector<std::vector<int>> adj(np + nb);
    for (int b = 0; b < nb; ++b)
        for (int p : inc.blocks[b]) {
            adj[p].push_back(np + b);
            adj[np + b].push_back(p);
        }
    return make_graph(np + nb, std::move(adj),
                      inc.name.empty() ? "incidence" : "inc(" + inc.name + ")");
}

}  // namespace drg
