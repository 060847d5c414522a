#include "drg/group.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace drg {

namespace {

constexpr int kOrderGuard = 5000;

void check_order_guard(long long n, bool allow_large) {
    if (n <= 0) throw input_error("group order must be positive");
    if (n > kOrderGuard && !allow_large)
        throw input_error("group order " + std::to_string(n) +
                          " exceeds the guard of " + std::to_string(kOrderGuard) +
                          " (pass allow_large to override)");
}

bool is_prime(int p) {
    if (p < 2) return false;
    for (int d = 2; (long long)d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

void fill_inverses(GroupTable& g) {
    g.inv.assign(g.n, -1);
    for (int a = 0; a < g.n; ++a) {
        for (int b = 0; b < g.n; ++b) {
            if (g.op(a, b) == g.identity && g.op(b, a) == g.identity) {
                g.inv[a] = b;
                break;
            }
        }
        if (g.inv[a] < 0)
            throw std::runtime_error("element " + std::to_string(a) + " has no inverse");
    }
}

std::string pow_label(const std::string& base, int k) {
    if (k == 1) return base;
    return base + "^" + std::to_string(k);
}

}  // namespace

int GroupTable::power(int g, long long t) const {
    // orders are tiny, so repeated multiplication is fine
    if (t < 0) return power(inv[g], -t);
    int x = identity;
    for (long long i = 0; i < t; ++i) x = op(x, g);
    return x;
}

std::string GroupTable::label(int g) const {
    if (g >= 0 && g < (int)labels.size() && !labels[g].empty()) return labels[g];
    return std::to_string(g);
}

int GroupTable::find_label(const std::string& s) const {
    for (int i = 0; i < (int)labels.size(); ++i)
        if (labels[i] == s) return i;
    return -1;
}

// ------------------------------------------------------------------ specs ----

GroupSpec spec_cyclic(int n) { return GroupSpec{CyclicSpec{n}}; }
GroupSpec spec_dihedral(int n) { return GroupSpec{DihedralSpec{n}}; }
GroupSpec spec_dicyclic(int m) { return GroupSpec{DicyclicSpec{m}}; }
GroupSpec spec_semidihedral(int ell) { return GroupSpec{SemidihedralSpec{ell}}; }
GroupSpec spec_elementary_abelian(int p, int e) {
    return GroupSpec{ElementaryAbelianSpec{p, e}};
}
GroupSpec spec_product(GroupSpec a, GroupSpec b) {
    return GroupSpec{DirectProductSpec{std::make_shared<GroupSpec>(std::move(a)),
                                       std::make_shared<GroupSpec>(std::move(b))}};
}
GroupSpec spec_generalized_dihedral(GroupSpec base) {
    return GroupSpec{GeneralizedDihedralSpec{std::make_shared<GroupSpec>(std::move(base))}};
}
GroupSpec spec_semidirect_z2(GroupSpec base, AutomorphismDescriptor aut) {
    return GroupSpec{
        SemidirectZ2Spec{std::make_shared<GroupSpec>(std::move(base)), std::move(aut)}};
}

namespace {

GroupTable build_cyclic(int n, bool allow_large) {
    check_order_guard(n, allow_large);
    GroupTable g;
    g.n = n;
    g.identity = 0;
    g.mul.resize((size_t)n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) g.mul[(size_t)a * n + b] = (a + b) % n;
    g.labels.resize(n);
    for (int i = 0; i < n; ++i) g.labels[i] = std::to_string(i);
    g.name = "Z" + std::to_string(n);
    fill_inverses(g);
    return g;
}

// elements: r^0..r^(n-1), then s*r^0..s*r^(n-1)
GroupTable build_dihedral(int n, bool allow_large) {
    if (n < 1) throw input_error("dihedral parameter must be >= 1");
    check_order_guard(2LL * n, allow_large);
    GroupTable g;
    g.n = 2 * n;
    g.identity = 0;
    g.mul.resize((size_t)g.n * g.n);
    auto idx = [n](int eps, int i) { return eps * n + ((i % n + n) % n); };
    for (int e1 = 0; e1 < 2; ++e1)
        for (int i = 0; i < n; ++i)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int j = 0; j < n; ++j) {
                    // (s^e1 r^i)(s^e2 r^j) = s^(e1+e2) r^(j + (-1)^e2 i)
                    int eps = (e1 + e2) % 2;
                    int exp = e2 ? (j - i) : (j + i);
                    g.mul[(size_t)idx(e1, i) * g.n + idx(e2, j)] = idx(eps, exp);
                }
    g.labels.resize(g.n);
    g.labels[0] = "e";
    for (int i = 1; i < n; ++i) g.labels[i] = pow_label("r", i);
    g.labels[n] = "s";
    for (int i = 1; i < n; ++i) g.labels[n + i] = "s*" + pow_label("r", i);
    g.name = "D" + std::to_string(2 * n);
    fill_inverses(g);
    return g;
}

// Q_{4m}: a^0..a^(2m-1), then b*a^0..b*a^(2m-1); b^2 = a^m, a^b = a^-1
GroupTable build_dicyclic(int m, bool allow_large) {
    if (m < 1) throw input_error("dicyclic parameter must be >= 1");
    check_order_guard(4LL * m, allow_large);
    int nn = 2 * m;
    GroupTable g;
    g.n = 4 * m;
    g.identity = 0;
    g.mul.resize((size_t)g.n * g.n);
    auto idx = [nn](int eps, int i) { return eps * nn + ((i % nn + nn) % nn); };
    for (int e1 = 0; e1 < 2; ++e1)
        for (int i = 0; i < nn; ++i)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int j = 0; j < nn; ++j) {
                    // (b^e1 a^i)(b^e2 a^j) = b^(e1+e2) a^(j + (-1)^e2 i), b^2 = a^m
                    int exp = e2 ? (j - i) : (j + i);
                    int eps = e1 + e2;
                    if (eps == 2) {
                        eps = 0;
                        exp += m;
                    }
                    g.mul[(size_t)idx(e1, i) * g.n + idx(e2, j)] = idx(eps, exp);
                }
    g.labels.resize(g.n);
    g.labels[0] = "e";
    for (int i = 1; i < nn; ++i) g.labels[i] = pow_label("a", i);
    g.labels[nn] = "b";
    for (int i = 1; i < nn; ++i) g.labels[nn + i] = "b*" + pow_label("a", i);
    g.name = "Q" + std::to_string(4 * m);
    fill_inverses(g);
    return g;
}

// SD_{4m}, m = 2^(ell-1): a^0..a^(2m-1), b*a^0..b*a^(2m-1); b^2=e, bab = a^(m-1)
GroupTable build_semidihedral(int ell, bool allow_large) {
    if (ell < 2) throw input_error("semidihedral parameter must be >= 2");
    if (ell > 11) throw input_error("semidihedral parameter too large");
    int m = 1 << (ell - 1);
    check_order_guard(4LL * m, allow_large);
    int nn = 2 * m;
    GroupTable g;
    g.n = 4 * m;
    g.identity = 0;
    g.mul.resize((size_t)g.n * g.n);
    auto idx = [nn](int eps, int i) { return eps * nn + ((i % nn + nn) % nn); };
    int t = m - 1;  // conjugation exponent: a^b = a^(m-1)
    for (int e1 = 0; e1 < 2; ++e1)
        for (int i = 0; i < nn; ++i)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int j = 0; j < nn; ++j) {
                    // a^i b = b a^(i(m-1)); (b^e1 a^i)(b^e2 a^j) = b^(e1+e2) a^(i t^e2 + j)
                    long long moved = e2 ? ((long long)i * t) : i;
                    int eps = (e1 + e2) % 2;
                    int exp = (int)((moved + j) % nn);
                    g.mul[(size_t)idx(e1, i) * g.n + idx(e2, j)] = idx(eps, exp);
                }
    g.labels.resize(g.n);
    g.labels[0] = "e";
    for (int i = 1; i < nn; ++i) g.labels[i] = pow_label("a", i);
    g.labels[nn] = "b";
    for (int i = 1; i < nn; ++i) g.labels[nn + i] = "b*" + pow_label("a", i);
    g.name = "SD" + std::to_string(4 * m);
    fill_inverses(g);
    return g;
}

// index = sum of digit_i * p^i; labels are high-digit-first strings
GroupTable build_elementary_abelian(int p, int e, bool allow_large) {
    if (!is_prime(p)) throw input_error("elementary abelian base must be prime");
    if (e < 1) throw input_error("elementary abelian exponent must be >= 1");
    long long order = 1;
    for (int i = 0; i < e; ++i) {
        order *= p;
        if (order > 1000000) throw input_error("elementary abelian order too large");
    }
    check_order_guard(order, allow_large);
    int n = (int)order;
    GroupTable g;
    g.n = n;
    g.identity = 0;
    g.mul.resize((size_t)n * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int x = a, y = b, s = 0, pw = 1;
            for (int i = 0; i < e; ++i) {
                s += ((x % p + y % p) % p) * pw;
                x /= p;
                y /= p;
                pw *= p;
            }
            g.mul[(size_t)a * n + b] = s;
        }
    g.labels.resize(n);
    for (int a = 0; a < n; ++a) {
        std::string s(e, '0');
        int x = a;
        for (int i = 0; i < e; ++i) {
            s[e - 1 - i] = char('0' + x % p);
            x /= p;
        }
        g.labels[a] = s;
    }
    g.name = "Z" + std::to_string(p) + "^" + std::to_string(e);
    fill_inverses(g);
    return g;
}

GroupTable build_product(const GroupTable& a, const GroupTable& b, bool allow_large) {
    long long order = (long long)a.n * b.n;
    check_order_guard(order, allow_large);
    int n = (int)order;
    GroupTable g;
    g.n = n;
    g.mul.resize((size_t)n * n);
    auto idx = [&](int ia, int ib) { return ia * b.n + ib; };
    for (int xa = 0; xa < a.n; ++xa)
        for (int xb = 0; xb < b.n; ++xb)
            for (int ya = 0; ya < a.n; ++ya)
                for (int yb = 0; yb < b.n; ++yb)
                    g.mul[(size_t)idx(xa, xb) * n + idx(ya, yb)] =
                        idx(a.op(xa, ya), b.op(xb, yb));
    g.identity = idx(a.identity, b.identity);
    // digit-string concatenation when each factor has fixed-width all-digit
    // labels (keeps nested products like Z2 x Z3 x Z6 readable as "002"),
    // else explicit tuples
    auto fixed_digits = [](const std::vector<std::string>& ls) {
        if (ls.empty()) return false;
        size_t w = ls[0].size();
        for (const auto& s : ls) {
            if (s.size() != w || s.empty()) return false;
            for (char c : s)
                if (c < '0' || c > '9') return false;
        }
        return true;
    };
    bool digits = fixed_digits(a.labels) && fixed_digits(b.labels);
    g.labels.resize(n);
    for (int xa = 0; xa < a.n; ++xa)
        for (int xb = 0; xb < b.n; ++xb)
            g.labels[idx(xa, xb)] = digits ? a.labels[xa] + b.labels[xb]
                                           : "(" + a.label(xa) + "," + b.label(xb) + ")";
    g.name = a.name + "x" + b.name;
    fill_inverses(g);
    return g;
}

void validate_automorphism(const GroupTable& h, const std::vector<int>& perm) {
    if ((int)perm.size() != h.n) throw input_error("automorphism has wrong size");
    std::vector<char> seen(h.n, 0);
    for (int x : perm) {
        if (x < 0 || x >= h.n || seen[x]) throw input_error("automorphism is not a permutation");
        seen[x] = 1;
    }
    for (int x = 0; x < h.n; ++x)
        if (perm[perm[x]] != x)
            throw input_error("automorphism does not have order dividing 2");
    for (int x = 0; x < h.n; ++x)
        for (int y = 0; y < h.n; ++y)
            if (perm[h.op(x, y)] != h.op(perm[x], perm[y]))
                throw input_error("permutation is not an automorphism");
}

// elements of H at 0..n-1, then c*H at n..2n-1, with c x c^-1 = aut(x)
GroupTable build_semidirect_z2(const GroupTable& h, const AutomorphismDescriptor& aut,
                               bool allow_large, bool generalized_dihedral) {
    check_order_guard(2LL * h.n, allow_large);
    std::vector<int> phi(h.n);
    if (aut.inversion) {
        if (!is_abelian(h))
            throw input_error("inversion is an automorphism only of abelian groups");
        for (int x = 0; x < h.n; ++x) phi[x] = h.inv[x];
    } else {
        phi = aut.perm;
        validate_automorphism(h, phi);
    }
    int n = h.n;
    GroupTable g;
    g.n = 2 * n;
    g.identity = h.identity;
    g.mul.resize((size_t)g.n * g.n);
    // (c^e1 x)(c^e2 y) = c^(e1+e2) phi^e2(x) y
    for (int e1 = 0; e1 < 2; ++e1)
        for (int x = 0; x < n; ++x)
            for (int e2 = 0; e2 < 2; ++e2)
                for (int y = 0; y < n; ++y) {
                    int eps = (e1 + e2) % 2;
                    int moved = e2 ? phi[x] : x;
                    g.mul[(size_t)(e1 * n + x) * g.n + (e2 * n + y)] =
                        eps * n + h.op(moved, y);
                }
    g.labels.resize(g.n);
    for (int x = 0; x < n; ++x) {
        g.labels[x] = h.label(x);
        g.labels[n + x] = (x == h.identity) ? "c" : "c*" + h.label(x);
    }
    g.name = generalized_dihedral ? "Dih(" + h.name + ")" : "(" + h.name + "):2";
    fill_inverses(g);
    return g;
}

GroupTable build(const GroupSpec& spec, bool allow_large);

GroupTable build(const GroupSpec& spec, bool allow_large) {
    return std::visit(
        [&](const auto& s) -> GroupTable {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, CyclicSpec>) {
                return build_cyclic(s.n, allow_large);
            } else if constexpr (std::is_same_v<T, DihedralSpec>) {
                return build_dihedral(s.n, allow_large);
            } else if constexpr (std::is_same_v<T, DicyclicSpec>) {
                return build_dicyclic(s.m, allow_large);
            } else if constexpr (std::is_same_v<T, SemidihedralSpec>) {
                return build_semidihedral(s.ell, allow_large);
            } else if constexpr (std::is_same_v<T, ElementaryAbelianSpec>) {
                return build_elementary_abelian(s.p, s.e, allow_large);
            } else if constexpr (std::is_same_v<T, DirectProductSpec>) {
                GroupTable a = build(*s.left, allow_large);
                GroupTable b = build(*s.right, allow_large);
                return build_product(a, b, allow_large);
            } else if constexpr (std::is_same_v<T, GeneralizedDihedralSpec>) {
                GroupTable h = build(*s.base, allow_large);
                if (!is_abelian(h))
                    throw input_error("generalized dihedral base must be abelian");
                return build_semidirect_z2(h, AutomorphismDescriptor{}, allow_large, true);
            } else {
                static_assert(std::is_same_v<T, SemidirectZ2Spec>);
                GroupTable h = build(*s.base, allow_large);
                return build_semidirect_z2(h, s.aut, allow_large, false);
            }
        },
        spec.v);
}

}  // namespace

GroupPtr make_group(const GroupSpec& spec, bool allow_large) {
    GroupTable t = build(spec, allow_large);
    validate_group(t);
    return std::make_shared<GroupTable>(std::move(t));
}

GroupPtr adjoin_z2(GroupPtr base, const AutomorphismDescriptor& aut) {
    if (!base) throw input_error("adjoin_z2: null base group");
    GroupTable t = build_semidirect_z2(*base, aut, /*allow_large=*/true, aut.inversion);
    validate_group(t);
    return std::make_shared<GroupTable>(std::move(t));
}

GroupPtr make_group_from_table(GroupTable table) {
    if ((int)table.labels.size() != table.n) {
        table.labels.resize(table.n);
        for (int i = 0; i < table.n; ++i)
            if (table.labels[i].empty()) table.labels[i] = std::to_string(i);
    }
    if (table.inv.empty()) fill_inverses(table);
    validate_group(table);
    return std::make_shared<GroupTable>(std::move(table));
}

void validate_group(const GroupTable& g) {
    if (g.n <= 0) throw std::runtime_error("empty group table");
    if ((int)g.mul.size() != g.n * g.n) throw std::runtime_error("multiplication table size mismatch");
    for (int v : g.mul)
        if (v < 0 || v >= g.n) throw std::runtime_error("multiplication table not closed");
    if (g.identity < 0 || g.identity >= g.n) throw std::runtime_error("identity out of range");
    for (int x = 0; x < g.n; ++x)
        if (g.op(g.identity, x) != x || g.op(x, g.identity) != x)
            throw std::runtime_error("identity law fails at element " + std::to_string(x));
    if ((int)g.inv.size() != g.n) throw std::runtime_error("inverse table size mismatch");
    for (int x = 0; x < g.n; ++x) {
        int y = g.inv[x];
        if (y < 0 || y >= g.n || g.op(x, y) != g.identity || g.op(y, x) != g.identity)
            throw std::runtime_error("inverse law fails at element " + std::to_string(x));
    }
    if (g.n <= 256) {
        for (int a = 0; a < g.n; ++a)
            for (int b = 0; b < g.n; ++b)
                for (int c = 0; c < g.n; ++c)
                    if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
                        throw std::runtime_error("associativity fails at (" + std::to_string(a) +
                                                 "," + std::to_string(b) + "," + std::to_string(c) +
                                                 ")");
    } else {
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> pick(0, g.n - 1);
        for (int t = 0; t < 100000; ++t) {
            int a = pick(rng), b = pick(rng), c = pick(rng);
            if (g.op(g.op(a, b), c) != g.op(a, g.op(b, c)))
                throw std::runtime_error("associativity fails (sampled)");
        }
    }
}

// ------------------------------------------------------------- subgroups ----

Subgroup make_subgroup(GroupPtr g, std::vector<int> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    Subgroup h;
    h.parent = std::move(g);
    h.member.assign(h.parent->n, 0);
    for (int x : elements) {
        if (x < 0 || x >= h.parent->n) throw input_error("subgroup element out of range");
        h.member[x] = 1;
    }
    h.elements = std::move(elements);
    const GroupTable& G = *h.parent;
    if (!h.contains(G.identity)) throw input_error("subgroup does not contain the identity");
    for (int x : h.elements) {
        if (!h.contains(G.inv[x])) throw input_error("subgroup not closed under inverse");
        for (int y : h.elements)
            if (!h.contains(G.op(x, y))) throw input_error("subgroup not closed under product");
    }
    if (G.n % h.order() != 0)
        throw std::runtime_error("subgroup order does not divide group order");
    return h;
}

Subgroup generated_subgroup(GroupPtr g, const std::vector<int>& gens) {
    const GroupTable& G = *g;
    std::vector<char> in(G.n, 0);
    std::deque<int> todo;
    auto push = [&](int x) {
        if (!in[x]) {
            in[x] = 1;
            todo.push_back(x);
        }
    };
    push(G.identity);
    for (int x : gens) {
        if (x < 0 || x >= G.n) throw input_error("generator out of range");
        push(x);
        push(G.inv[x]);
    }
    std::vector<int> closed;
    while (!todo.empty()) {
        int x = todo.front();
        todo.pop_front();
        closed.push_back(x);
        for (int y : closed) {
            push(G.op(x, y));
            push(G.op(y, x));
        }
    }
    std::vector<int> elems;
    for (int i = 0; i < G.n; ++i)
        if (in[i]) elems.push_back(i);
    return make_subgroup(std::move(g), std::move(elems));
}

bool is_normal(const Subgroup& h) {
    const GroupTable& G = *h.parent;
    for (int g = 0; g < G.n; ++g)
        for (int x : h.elements)
            if (!h.contains(G.op(G.op(g, x), G.inv[g]))) return false;
    return true;
}

std::vector<Subgroup> index2_subgroups(GroupPtr g) {
    const GroupTable& G = *g;
    std::vector<Subgroup> result;
    if (G.n % 2 != 0) return result;

    // K = <squares, commutators>; G/K is elementary abelian of exponent 2
    std::set<int> genset;
    for (int x = 0; x < G.n; ++x) genset.insert(G.op(x, x));
    for (int x = 0; x < G.n; ++x)
        for (int y = 0; y < G.n; ++y)
            genset.insert(G.op(G.op(x, y), G.inv[G.op(y, x)]));
    Subgroup k = generated_subgroup(g, std::vector<int>(genset.begin(), genset.end()));
    if (G.n / k.order() < 2) return result;

    // coset id per element
    std::vector<int> coset_of(G.n, -1);
    std::vector<int> reps;
    for (int x = 0; x < G.n; ++x) {
        if (coset_of[x] >= 0) continue;
        int id = (int)reps.size();
        reps.push_back(x);
        for (int y : k.elements) coset_of[G.op(y, x)] = id;
    }
    int q = (int)reps.size();

    // GF(2) coordinates on the quotient: grow a basis greedily
    std::map<int, unsigned> coord;  // coset id -> bit vector
    coord[coset_of[G.identity]] = 0;
    int rank = 0;
    for (int c = 0; c < q; ++c) {
        if (coord.count(c)) continue;
        std::map<int, unsigned> next = coord;
        for (const auto& [cid, vec] : coord) {
            int prod = coset_of[G.op(reps[cid], reps[c])];
            next[prod] = vec | (1u << rank);
        }
        coord = std::move(next);
        ++rank;
    }
    if ((int)coord.size() != q) throw std::runtime_error("quotient coordinateization failed");

    for (unsigned lam = 1; lam < (1u << rank); ++lam) {
        std::vector<int> elems;
        for (int x = 0; x < G.n; ++x)
            if (__builtin_parity(coord[coset_of[x]] & lam) == 0) elems.push_back(x);
        result.push_back(make_subgroup(g, std::move(elems)));
    }
    std::sort(result.begin(), result.end(),
              [](const Subgroup& a, const Subgroup& b) { return a.elements < b.elements; });
    return result;
}

std::vector<std::vector<int>> cosets(const Subgroup& h) {
    const GroupTable& G = *h.parent;
    std::vector<char> seen(G.n, 0);
    std::vector<std::vector<int>> cells;
    cells.emplace_back(h.elements);
    for (int x : h.elements) seen[x] = 1;
    for (int x = 0; x < G.n; ++x) {
        if (seen[x]) continue;
        std::vector<int> cell;
        for (int y : h.elements) cell.push_back(G.op(y, x));
        std::sort(cell.begin(), cell.end());
        for (int z : cell) seen[z] = 1;
        cells.push_back(std::move(cell));
    }
    return cells;
}

std::vector<int> involutions(const GroupTable& g) {
    std::vector<int> out;
    for (int x = 0; x < g.n; ++x)
        if (x != g.identity && g.op(x, x) == g.identity) out.push_back(x);
    return out;
}

std::vector<int> involutions_outside(const Subgroup& h) {
    std::vector<int> out;
    const GroupTable& G = *h.parent;
    for (int x : involutions(G))
        if (!h.contains(x)) out.push_back(x);
    return out;
}

std::optional<int> semidirect_decomposition(const Subgroup& h) {
    const GroupTable& G = *h.parent;
    if (2 * h.order() != G.n) throw input_error("subgroup does not have index 2");
    for (int x = 0; x < G.n; ++x)
        if (!h.contains(x) && G.op(x, x) == G.identity) return x;
    return std::nullopt;
}

int element_order(const GroupTable& g, int x) {
    if (x < 0 || x >= g.n) throw input_error("element out of range");
    int t = 1, y = x;
    while (y != g.identity) {
        y = g.op(y, x);
        ++t;
    }
    return t;
}

bool is_abelian(const GroupTable& g) {
    for (int x = 0; x < g.n; ++x)
        for (int y = x + 1; y < g.n; ++y)
            if (g.op(x, y) != g.op(y, x)) return false;
    return true;
}

GroupPtr subgroup_as_group(const Subgroup& h, std::vector<int>* old_of_new) {
    const GroupTable& G = *h.parent;
    int m = h.order();
    std::vector<int> new_of_old(G.n, -1);
    for (int i = 0; i < m; ++i) new_of_old[h.elements[i]] = i;
    GroupTable t;
    t.n = m;
    t.identity = new_of_old[G.identity];
    t.mul.resize((size_t)m * m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            t.mul[(size_t)i * m + j] = new_of_old[G.op(h.elements[i], h.elements[j])];
    t.labels.resize(m);
    for (int i = 0; i < m; ++i) t.labels[i] = G.label(h.elements[i]);
    t.name = "sub" + std::to_string(m) + "(" + G.name + ")";
    fill_inverses(t);
    validate_group(t);
    if (old_of_new) *old_of_new = h.elements;
    return std::make_shared<GroupTable>(std::move(t));
}

// ------------------------------------------------------------------ labels ----

std::vector<std::string> word_labels(const GroupTable& g,
                                     const std::vector<std::pair<std::string, int>>& gens) {
    // BFS over right multiplication; words are stored as generator index
    // sequences and compressed to power notation at the end
    std::vector<std::vector<int>> word(g.n);
    std::vector<char> seen(g.n, 0);
    std::deque<int> todo;
    seen[g.identity] = 1;
    todo.push_back(g.identity);
    while (!todo.empty()) {
        int x = todo.front();
        todo.pop_front();
        for (int gi = 0; gi < (int)gens.size(); ++gi) {
            int y = g.op(x, gens[gi].second);
            if (!seen[y]) {
                seen[y] = 1;
                word[y] = word[x];
                word[y].push_back(gi);
                todo.push_back(y);
            }
        }
    }
    std::vector<std::string> out(g.n);
    for (int x = 0; x < g.n; ++x) {
        if (!seen[x]) {
            out[x] = "#" + std::to_string(x);  // not generated; keep a stable fallback
            continue;
        }
        if (word[x].empty()) {
            out[x] = "e";
            continue;
        }
        std::string s;
        size_t i = 0;
        while (i < word[x].size()) {
            size_t j = i;
            while (j < word[x].size() && word[x][j] == word[x][i]) ++j;
            if (!s.empty()) s += "*";
            s += pow_label(gens[word[x][i]].first, (int)(j - i));
            i = j;
        }
        out[x] = s;
    }
    return out;
}

GroupPtr with_labels(const GroupTable& g, std::vector<std::string> labels) {
    if ((int)labels.size() != g.n) throw input_error("label list has wrong size");
    GroupTable t = g;
    t.labels = std::move(labels);
    return std::make_shared<GroupTable>(std::move(t));
}

int parse_element(const GroupTable& g, const std::string& token) {
    if (token.empty()) throw input_error("empty element token");
    int hit = g.find_label(token);
    if (hit >= 0) return hit;
    if (std::all_of(token.begin(), token.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        long long v = std::stoll(token);
        if (v >= g.n) throw input_error("element index " + token + " out of range");
        return (int)v;
    }
    // product word: factors split on '*', each NAME or NAME^POWER
    int acc = g.identity;
    std::stringstream ss(token);
    std::string factor;
    while (std::getline(ss, factor, '*')) {
        if (factor.empty()) throw input_error("malformed element word '" + token + "'");
        std::string base = factor;
        long long power = 1;
        auto caret = factor.find('^');
        if (caret != std::string::npos) {
            base = factor.substr(0, caret);
            try {
                power = std::stoll(factor.substr(caret + 1));
            } catch (...) {
                throw input_error("malformed exponent in '" + token + "'");
            }
        }
        int b = g.find_label(base);
        if (b < 0) throw input_error("unknown element '" + base + "' in word '" + token + "'");
        acc = g.op(acc, g.power(b, power));
    }
    return acc;
}

std::vector<int> parse_element_set(const GroupTable& g, const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        // trim surrounding whitespace
        size_t a = tok.find_first_not_of(" \t");
        size_t b = tok.find_last_not_of(" \t");
        if (a == std::string::npos) continue;
        out.push_back(parse_element(g, tok.substr(a, b - a + 1)));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ------------------------------------------------------------- spec parser ----

namespace {

struct SpecParser {
    const std::string& s;
    size_t pos = 0;

    explicit SpecParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c))
            throw input_error("expected '" + std::string(1, c) + "' at position " +
                              std::to_string(pos) + " in group spec");
    }
    std::string ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && (isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
        if (start == pos) throw input_error("expected name in group spec at position " +
                                            std::to_string(pos));
        return s.substr(start, pos - start);
    }
    int number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && isdigit((unsigned char)s[pos])) ++pos;
        if (start == pos) throw input_error("expected number in group spec");
        return std::stoi(s.substr(start, pos - start));
    }

    GroupSpec parse() {
        std::string name = ident();
        for (auto& c : name) c = (char)tolower((unsigned char)c);
        expect('(');
        GroupSpec out = dispatch(name);
        expect(')');
        return out;
    }

    GroupSpec dispatch(const std::string& name) {
        if (name == "cyclic" || name == "z") return spec_cyclic(number());
        if (name == "dihedral") return spec_dihedral(number());
        if (name == "dicyclic") return spec_dicyclic(number());
        if (name == "semidihedral") return spec_semidihedral(number());
        if (name == "elemabelian") {
            int p = number();
            expect(',');
            int e = number();
            return spec_elementary_abelian(p, e);
        }
        if (name == "product") {
            GroupSpec a = parse();
            expect(',');
            GroupSpec b = parse();
            return spec_product(std::move(a), std::move(b));
        }
        if (name == "gendihedral") return spec_generalized_dihedral(parse());
        throw input_error("unknown group family '" + name + "'");
    }
};

}  // namespace

GroupSpec parse_group_spec(const std::string& text) {
    SpecParser p(text);
    GroupSpec out = p.parse();
    p.skip_ws();
    if (p.pos != text.size())
        throw input_error("trailing characters in group spec: '" + text.substr(p.pos) + "'");
    return out;
}

}  // namespace drg
