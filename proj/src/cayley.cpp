#include "drg/cayley.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/multiprecision/cpp_int.hpp>

namespace drg {

using bigint = boost::multiprecision::cpp_int;

bool Graph::has_edge(int u, int v) const {
    return std::binary_search(adj[u].begin(), adj[u].end(), v);
}

long long Graph::edge_count() const {
    long long twice = 0;
    for (const auto& nb : adj) twice += (long long)nb.size();
    return twice / 2;
}

Graph make_graph(int n, std::vector<std::vector<int>> adj, std::string name) {
    if ((int)adj.size() != n) throw input_error("adjacency list size mismatch");
    Graph g;
    g.n = n;
    g.adj = std::move(adj);
    g.name = std::move(name);
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adj[v];
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
        for (int u : nb) {
            if (u < 0 || u >= n) throw input_error("neighbor index out of range");
            if (u == v) throw input_error("self loop at vertex " + std::to_string(v));
        }
    }
    for (int v = 0; v < n; ++v)
        for (int u : g.adj[v])
            if (!g.has_edge(u, v))
                throw input_error("asymmetric adjacency between " + std::to_string(v) + " and " +
                                  std::to_string(u));
    return g;
}

CayleyGraph build_cayley(GroupPtr g, std::vector<int> s) {
    const GroupTable& G = *g;
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int x : s) {
        if (x < 0 || x >= G.n) throw input_error("connection-set element out of range");
        if (x == G.identity) throw input_error("connection set contains the identity");
        if (!std::binary_search(s.begin(), s.end(), G.inv[x]))
            throw input_error("connection set is not inverse-closed: " + G.label(x) +
                              " is in but " + G.label(G.inv[x]) + " is not");
    }
    CayleyGraph cg;
    cg.group = std::move(g);
    cg.connection_set = std::move(s);
    std::vector<std::vector<int>> adj(G.n);
    // a ~ b iff a b^-1 in S, i.e. the neighbors of b are S b
    for (int b = 0; b < G.n; ++b) {
        adj[b].reserve(cg.connection_set.size());
        for (int x : cg.connection_set) adj[b].push_back(G.op(x, b));
    }
    cg.graph = make_graph(G.n, std::move(adj), "Cay(" + G.name + ")");
    cg.connected = is_connected(cg.graph);
    return cg;
}

// ------------------------------------------------------------- distances ----

std::vector<int> distances_from(const Graph& g, int v) {
    std::vector<int> dist(g.n, -1);
    std::deque<int> q{v};
    dist[v] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (int y : g.adj[x])
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                q.push_back(y);
            }
    }
    return dist;
}

std::vector<std::vector<int>> distance_partition(const Graph& g, int v) {
    auto dist = distances_from(g, v);
    int d = 0;
    for (int u = 0; u < g.n; ++u) {
        if (dist[u] < 0)
            throw input_error("graph is disconnected: vertex " + std::to_string(u) +
                              " is unreachable from " + std::to_string(v));
        d = std::max(d, dist[u]);
    }
    std::vector<std::vector<int>> shells(d + 1);
    for (int u = 0; u < g.n; ++u) shells[dist[u]].push_back(u);
    return shells;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    auto dist = distances_from(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

std::vector<std::vector<int>> all_distances(const Graph& g) {
    std::vector<std::vector<int>> d(g.n);
    for (int v = 0; v < g.n; ++v) d[v] = distances_from(g, v);
    return d;
}

// ----------------------------------------------------- distance-regularity ----

std::vector<long long> IntersectionArray::shell_sizes() const {
    std::vector<long long> ks{1};
    for (int i = 0; i < d; ++i) {
        long long num = ks.back() * b[i];
        if (num % c[i] != 0) throw std::runtime_error("non-integral shell size");
        ks.push_back(num / c[i]);
    }
    return ks;
}

std::string IntersectionArray::to_string() const {
    std::ostringstream os;
    os << "{";
    for (int i = 0; i < d; ++i) os << (i ? "," : "") << b[i];
    os << ";";
    for (int i = 0; i < d; ++i) os << (i ? "," : "") << c[i];
    os << "}";
    return os.str();
}

namespace {

// per-root constancy check; fills (b, c) on first success
bool root_counts(const Graph& g, int root, std::vector<long long>& b, std::vector<long long>& c,
                 int& diameter, std::string* witness) {
    auto dist = distances_from(g, root);
    int d = 0;
    for (int u = 0; u < g.n; ++u) {
        if (dist[u] < 0) {
            if (witness) *witness = "disconnected at vertex " + std::to_string(u);
            return false;
        }
        d = std::max(d, dist[u]);
    }
    std::vector<long long> bb(d + 1, -1), cc(d + 1, -1);
    for (int u = 0; u < g.n; ++u) {
        int i = dist[u];
        long long down = 0, up = 0;
        for (int w : g.adj[u]) {
            if (dist[w] == i - 1) ++down;
            else if (dist[w] == i + 1) ++up;
        }
        if (bb[i] < 0) {
            bb[i] = up;
            cc[i] = down;
        } else if (bb[i] != up || cc[i] != down) {
            if (witness)
                *witness = "counts differ at distance " + std::to_string(i) + ": vertex " +
                           std::to_string(u) + " from root " + std::to_string(root) + " sees (c,b)=(" +
                           std::to_string(down) + "," + std::to_string(up) + ") vs (" +
                           std::to_string(cc[i]) + "," + std::to_string(bb[i]) + ")";
            return false;
        }
    }
    diameter = d;
    b.assign(bb.begin(), bb.end() - 1);      // b_0..b_{d-1}
    c.assign(cc.begin() + 1, cc.end());      // c_1..c_d
    return true;
}

}  // namespace

std::optional<IntersectionArray> intersection_array(const Graph& g, bool all_pairs,
                                                    std::string* witness, int root) {
    if (g.n == 0) return std::nullopt;
    // regularity first: constant b_i, c_i forces constant a_i only then
    for (int v = 1; v < g.n; ++v)
        if (g.degree(v) != g.degree(0)) {
            if (witness)
                *witness = "not regular: deg(" + std::to_string(0) + ")=" +
                           std::to_string(g.degree(0)) + " but deg(" + std::to_string(v) + ")=" +
                           std::to_string(g.degree(v));
            return std::nullopt;
        }
    IntersectionArray ia;
    if (!root_counts(g, root, ia.b, ia.c, ia.d, witness)) return std::nullopt;
    if (all_pairs) {
        for (int v = 0; v < g.n; ++v) {
            if (v == root) continue;
            IntersectionArray other;
            if (!root_counts(g, v, other.b, other.c, other.d, witness)) return std::nullopt;
            if (other.b != ia.b || other.c != ia.c) {
                if (witness) *witness = "array differs between roots 0 and " + std::to_string(v);
                return std::nullopt;
            }
        }
    }
    // parameter monotonicity is a theorem for genuine distance-regular
    // graphs, but root-local constancy on a non-transitive graph can violate
    // it, so treat violations as "not distance-regular"
    if (ia.c[0] != 1) throw std::runtime_error("certified array has c_1 != 1");
    for (int i = 0; i + 1 < ia.d; ++i) {
        if (ia.c[i] > ia.c[i + 1] || ia.b[i] < ia.b[i + 1]) {
            if (witness) *witness = "root-local counts violate parameter monotonicity";
            return std::nullopt;
        }
    }
    long long total = 0;
    for (long long k : ia.shell_sizes()) total += k;
    if (total != g.n) throw std::runtime_error("shell sizes do not sum to the order");
    return ia;
}

// --------------------------------------------------------------- structure ----

std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(
    const Graph& g, int root, std::vector<int>* odd_cycle) {
    std::vector<int> color(g.n, -1), parent(g.n, -1), depth(g.n, 0);
    std::vector<int> order;
    for (int start = root, pass = 0; pass < g.n + 1; ++pass) {
        if (pass > 0) {
            start = -1;
            for (int v = 0; v < g.n; ++v)
                if (color[v] < 0) {
                    start = v;
                    break;
                }
            if (start < 0) break;
        }
        color[start] = 0;
        std::deque<int> q{start};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : g.adj[x]) {
                if (color[y] < 0) {
                    color[y] = color[x] ^ 1;
                    parent[y] = x;
                    depth[y] = depth[x] + 1;
                    q.push_back(y);
                } else if (color[y] == color[x]) {
                    if (odd_cycle) {
                        // climb to common ancestor; the two paths plus the
                        // edge (x,y) close an odd cycle
                        std::vector<int> px{x}, py{y};
                        int a = x, b = y;
                        while (depth[a] > depth[b]) px.push_back(a = parent[a]);
                        while (depth[b] > depth[a]) py.push_back(b = parent[b]);
                        while (a != b) {
                            px.push_back(a = parent[a]);
                            py.push_back(b = parent[b]);
                        }
                        odd_cycle->assign(px.begin(), px.end());
                        for (auto it = py.rbegin() + 1; it != py.rend(); ++it)
                            odd_cycle->push_back(*it);
                    }
                    return std::nullopt;
                }
            }
        }
    }
    std::pair<std::vector<int>, std::vector<int>> parts;
    for (int v = 0; v < g.n; ++v) (color[v] == color[root] ? parts.first : parts.second).push_back(v);
    return parts;
}

int girth(const Graph& g) {
    int best = girth_cap_sentinel;
    std::vector<int> dist(g.n), parent(g.n);
    for (int r = 0; r < g.n && best > 3; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        std::deque<int> q{r};
        dist[r] = 0;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            if (2 * dist[x] >= best) break;  // cannot improve
            for (int y : g.adj[x]) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    q.push_back(y);
                } else if (y != parent[x]) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
    }
    // full scan without early break for r >= 1 can miss shorter cycles only
    // when they avoid earlier roots entirely; every cycle is hit from each of
    // its own vertices, and we scan all vertices, so `best` is exact up to
    // the cap
    return std::min(best, girth_cap_sentinel);
}

Subgroup part_subgroup(const CayleyGraph& cg) {
    const GroupTable& G = *cg.group;
    if (!cg.connected) throw input_error("connection set does not generate the group");
    auto parts = bipartition(cg.graph, G.identity);
    if (!parts) throw input_error("Cayley graph is not bipartite");
    Subgroup h = make_subgroup(cg.group, parts->first);  // throws if not a subgroup
    if (2 * h.order() != G.n) throw std::runtime_error("identity part does not have index 2");
    if (!is_normal(h)) throw std::runtime_error("identity part is not normal");
    return h;
}

std::optional<std::vector<std::vector<int>>> antipodal_classes(const Graph& g, int d) {
    auto dm = all_distances(g);
    std::vector<int> cls(g.n, -1);
    std::vector<std::vector<int>> classes;
    for (int v = 0; v < g.n; ++v) {
        if (cls[v] >= 0) continue;
        int id = (int)classes.size();
        std::vector<int> cell{v};
        cls[v] = id;
        for (int u = v + 1; u < g.n; ++u)
            if (dm[v][u] == d) {
                if (cls[u] >= 0) return std::nullopt;
                cls[u] = id;
                cell.push_back(u);
            }
        classes.push_back(std::move(cell));
    }
    // equivalence check: within a class all pairs at distance d, across
    // classes never
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v) {
            bool same = cls[u] == cls[v];
            bool far = dm[u][v] == d;
            if (same != far) return std::nullopt;
        }
    return classes;
}

bool antipodal_subgroup_agrees(const CayleyGraph& cg, int d) {
    const GroupTable& G = *cg.group;
    auto shells = distance_partition(cg.graph, G.identity);
    if ((int)shells.size() != d + 1) return false;
    std::vector<int> nset = shells[d];
    nset.push_back(G.identity);
    Subgroup n = [&]() -> Subgroup {
        try {
            return make_subgroup(cg.group, nset);
        } catch (const input_error&) {
            throw std::runtime_error("S_d with the identity is not a subgroup");
        }
    }();
    auto classes = antipodal_classes(cg.graph, d);
    if (!classes) return false;
    auto cos = cosets(n);
    std::set<std::vector<int>> a(classes->begin(), classes->end());
    std::set<std::vector<int>> b(cos.begin(), cos.end());
    return a == b;
}

Graph distance_i_graph(const Graph& g, int i) {
    if (i <= 0) throw input_error("distance must be positive");
    auto dm = all_distances(g);
    std::vector<std::vector<int>> adj(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < g.n; ++v)
            if (u != v && dm[u][v] == i) adj[u].push_back(v);
    return make_graph(g.n, std::move(adj), g.name + "_dist" + std::to_string(i));
}

std::pair<InducedGraph, InducedGraph> halved_graphs(const Graph& g, int root) {
    auto parts = bipartition(g, root);
    if (!parts) throw input_error("halved graphs require a bipartite graph");
    Graph d2 = distance_i_graph(g, 2);
    auto induce = [&](const std::vector<int>& vs) {
        InducedGraph out;
        out.vertex_of = vs;
        std::vector<int> newid(g.n, -1);
        for (int i = 0; i < (int)vs.size(); ++i) newid[vs[i]] = i;
        std::vector<std::vector<int>> adj(vs.size());
        for (int i = 0; i < (int)vs.size(); ++i)
            for (int w : d2.adj[vs[i]])
                if (newid[w] >= 0) adj[i].push_back(newid[w]);
        out.graph = make_graph((int)vs.size(), std::move(adj), g.name + "_half");
        return out;
    };
    return {induce(parts->first), induce(parts->second)};
}

// -------------------------------------------------------------- quotients ----

long long QuotientMatrix::at(int i, int j) const {
    if (!equitable) throw std::runtime_error("quotient matrix is not equitable");
    return entry[i][j].first;
}

QuotientMatrix quotient_matrix(const Graph& g, const std::vector<std::vector<int>>& cells) {
    std::vector<int> cell_of(g.n, -1);
    for (int i = 0; i < (int)cells.size(); ++i)
        for (int v : cells[i]) {
            if (v < 0 || v >= g.n) throw input_error("partition cell contains a bad vertex");
            if (cell_of[v] >= 0) throw input_error("partition cells overlap at vertex " +
                                                   std::to_string(v));
            cell_of[v] = i;
        }
    for (int v = 0; v < g.n; ++v)
        if (cell_of[v] < 0)
            throw input_error("partition misses vertex " + std::to_string(v));

    int m = (int)cells.size();
    QuotientMatrix qm;
    qm.cells = cells;
    qm.equitable = true;
    qm.entry.assign(m, std::vector<std::pair<long long, long long>>(m, {0, 1}));
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            long long total = 0;
            bool constant = true;
            long long first = -1;
            for (int v : cells[i]) {
                long long cnt = 0;
                for (int w : g.adj[v])
                    if (cell_of[w] == j) ++cnt;
                total += cnt;
                if (first < 0) first = cnt;
                else if (cnt != first) constant = false;
            }
            long long den = (long long)cells[i].size();
            long long gden = std::gcd(total, den);
            qm.entry[i][j] = {total / gden, den / gden};
            if (!constant) qm.equitable = false;
        }
    }
    return qm;
}

// ---------------------------------------------------------- exact algebra ----

namespace {

using Mat = std::vector<std::vector<bigint>>;

Mat adjacency_bigint(const Graph& g) {
    Mat a(g.n, std::vector<bigint>(g.n, 0));
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u]) a[u][v] = 1;
    return a;
}

Mat mat_mul(const Mat& x, const Mat& y) {
    int n = (int)x.size();
    Mat z(n, std::vector<bigint>(n, 0));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < n; ++k) {
            if (x[i][k] == 0) continue;
            const bigint& f = x[i][k];
            for (int j = 0; j < n; ++j)
                if (y[k][j] != 0) z[i][j] += f * y[k][j];
        }
    return z;
}

bool mat_zero(const Mat& m) {
    for (const auto& row : m)
        for (const auto& v : row)
            if (v != 0) return false;
    return true;
}

}  // namespace

bool annihilation_check(const Graph& g, const std::vector<MatrixFactor>& factors) {
    if (factors.empty()) throw input_error("no factors given");
    Mat a = adjacency_bigint(g);
    Mat a2;
    bool need_a2 = std::any_of(factors.begin(), factors.end(),
                               [](const MatrixFactor& f) { return f.power == 2; });
    if (need_a2) a2 = mat_mul(a, a);
    Mat acc;
    bool first = true;
    for (const auto& f : factors) {
        if (f.power != 1 && f.power != 2) throw input_error("factor power must be 1 or 2");
        Mat term = (f.power == 2) ? a2 : a;
        for (int i = 0; i < g.n; ++i) term[i][i] -= f.c;
        acc = first ? std::move(term) : mat_mul(acc, term);
        first = false;
    }
    return mat_zero(acc);
}

namespace {

// Bareiss fraction-free elimination; determinant is zero iff some pivot
// search fails
bool det_nonzero(Mat a) {
    int n = (int)a.size();
    bigint prev = 1;
    for (int k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int i = k + 1; i < n; ++i)
                if (a[i][k] != 0) {
                    piv = i;
                    break;
                }
            if (piv < 0) return false;  // column annihilated: det = 0
            std::swap(a[k], a[piv]);
        }
        for (int i = k + 1; i < n; ++i) {
            for (int j = k + 1; j < n; ++j) {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return a[n - 1][n - 1] != 0;
}

}  // namespace

bool is_nonsingular(const Graph& g) { return det_nonzero(adjacency_bigint(g)); }

bool is_integer_eigenvalue(const Graph& g, long long c) {
    Mat a = adjacency_bigint(g);
    for (int i = 0; i < g.n; ++i) a[i][i] -= c;
    return !det_nonzero(std::move(a));
}

long long trace_a2(const Graph& g) { return 2 * g.edge_count(); }

// -------------------------------------------------------------- circulants ----

namespace {

struct Kahan {
    double sum = 0, comp = 0;
    void add(double x) {
        double y = x - comp;
        double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
};

}  // namespace

CirculantSpectrum circulant_eigenvalues(int n, const std::vector<int>& t,
                                        const std::vector<double>& targets) {
    if (n <= 0) throw input_error("modulus must be positive");
    for (int c : t)
        if (c < 0 || c >= n) throw input_error("symbol-set residue out of range");
    CirculantSpectrum out;
    out.lambda.resize(n);
    const double tau = 8.0 * std::atan(1.0);
    Kahan parseval;
    for (int j = 0; j < n; ++j) {
        Kahan re, im;
        for (int c : t) {
            double ang = tau * ((double)((long long)j * c % n)) / n;
            re.add(std::cos(ang));
            im.add(std::sin(ang));
        }
        out.lambda[j] = {re.sum, im.sum};
        parseval.add(re.sum * re.sum + im.sum * im.sum);
    }
    out.parseval_ok = std::llround(parseval.sum) == (long long)n * (long long)t.size() &&
                      std::abs(parseval.sum - (double)((long long)n * t.size())) < 1e-6 * n;
    const double tol = 1e-9;
    out.match.assign(n, -1);
    if (!targets.empty()) {
        out.all_matched = true;
        for (int j = 0; j < n; ++j) {
            if (std::abs(out.lambda[j].imag()) > tol) {
                out.all_matched = false;
                continue;
            }
            for (int k = 0; k < (int)targets.size(); ++k)
                if (std::abs(out.lambda[j].real() - targets[k]) < tol) {
                    out.match[j] = k;
                    break;
                }
            if (out.match[j] < 0) out.all_matched = false;
        }
    }
    return out;
}

// ------------------------------------------------------------------ twins ----

std::optional<std::pair<int, int>> has_twin_vertices(const Graph& g) {
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.adj[u] == g.adj[v]) return std::make_pair(u, v);
    return std::nullopt;
}

// ------------------------------------------------------------ isomorphism ----

namespace {

// invariant per vertex: (degree, sorted multiset of distances to all others)
std::vector<std::vector<int>> vertex_profiles(const Graph& g,
                                              const std::vector<std::vector<int>>& dm) {
    std::vector<std::vector<int>> prof(g.n);
    for (int v = 0; v < g.n; ++v) {
        prof[v] = dm[v];
        std::sort(prof[v].begin(), prof[v].end());
        prof[v].push_back(g.degree(v));
    }
    return prof;
}

struct IsoSearch {
    const Graph& g1;
    const Graph& g2;
    std::vector<std::vector<int>> d1, d2;
    std::vector<int> order;         // g1 vertices, BFS order
    std::vector<int> map;           // g1 -> g2 (-1 unset)
    std::vector<char> used;         // g2 vertex taken
    std::vector<std::vector<int>> prof1, prof2;

    bool extend(size_t pos) {
        if (pos == order.size()) return true;
        int v = order[pos];
        for (int w = 0; w < g2.n; ++w) {
            if (used[w] || prof1[v] != prof2[w]) continue;
            bool ok = true;
            for (size_t i = 0; i < pos && ok; ++i) {
                int u = order[i];
                ok = d1[v][u] == d2[w][map[u]];
            }
            if (!ok) continue;
            map[v] = w;
            used[w] = 1;
            if (extend(pos + 1)) return true;
            map[v] = -1;
            used[w] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> are_isomorphic_small(const Graph& g1, const Graph& g2) {
    if (g1.n > 128 || g2.n > 128) throw input_error("isomorphism search is guarded at 128 vertices");
    if (g1.n != g2.n || g1.edge_count() != g2.edge_count()) return std::nullopt;
    IsoSearch s{g1, g2, all_distances(g1), all_distances(g2), {}, {}, {}, {}, {}};
    s.prof1 = vertex_profiles(g1, s.d1);
    s.prof2 = vertex_profiles(g2, s.d2);
    {
        auto m1 = s.prof1, m2 = s.prof2;
        std::sort(m1.begin(), m1.end());
        std::sort(m2.begin(), m2.end());
        if (m1 != m2) return std::nullopt;
    }
    // BFS order over components
    std::vector<char> seen(g1.n, 0);
    for (int r = 0; r < g1.n; ++r) {
        if (seen[r]) continue;
        std::deque<int> q{r};
        seen[r] = 1;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            s.order.push_back(x);
            for (int y : g1.adj[x])
                if (!seen[y]) {
                    seen[y] = 1;
                    q.push_back(y);
                }
        }
    }
    s.map.assign(g1.n, -1);
    s.used.assign(g2.n, 0);
    if (s.extend(0)) return s.map;
    return std::nullopt;
}

bool verify_graph_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& map) {
    if (g1.n != g2.n || (int)map.size() != g1.n) return false;
    std::vector<char> hit(g2.n, 0);
    for (int v = 0; v < g1.n; ++v) {
        if (map[v] < 0 || map[v] >= g2.n || hit[map[v]]) return false;
        hit[map[v]] = 1;
    }
    for (int u = 0; u < g1.n; ++u)
        for (int v = 0; v < g1.n; ++v)
            if (u != v && g1.has_edge(u, v) != g2.has_edge(map[u], map[v])) return false;
    return true;
}

// --------------------------------------------------------------- export ----

std::string to_dot(const Graph& g, const std::vector<std::string>* labels) {
    std::ostringstream os;
    os << "graph g {\n";
    for (int v = 0; v < g.n; ++v) {
        os << "  v" << v;
        if (labels) os << " [label=\"" << (*labels)[v] << "\"]";
        os << ";\n";
    }
    for (int u = 0; u < g.n; ++u)
        for (int v : g.adj[u])
            if (u < v) os << "  v" << u << " -- v" << v << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace drg
