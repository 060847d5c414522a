#include "drg/catalog.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "drg/field.hpp"

namespace drg {

namespace {

void add(CatalogReport& r, std::string label, bool ok, std::string detail = "") {
    r.checks.push_back({std::move(label), ok, std::move(detail)});
}

std::string join(const std::vector<int>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

// q = p^e for prime p, or 0
int prime_power_base(int q, int* e_out = nullptr) {
    if (q < 2) return 0;
    int p = 2;
    while (p * p <= q && q % p != 0) ++p;
    if (q % p != 0) p = q;  // q itself prime
    int e = 0, t = q;
    while (t % p == 0) {
        t /= p;
        ++e;
    }
    if (t != 1) return 0;
    if (e_out) *e_out = e;
    return p;
}

int max_element_order(const GroupTable& g) {
    int m = 1;
    for (int x = 0; x < g.n; ++x) m = std::max(m, element_order(g, x));
    return m;
}

// coarse isomorphism-class fingerprint: order, commutativity, involution
// count, exponent-ish max order; enough to separate the classes named here
bool shape_is(const GroupTable& g, int order, bool abelian, int inv, int maxord) {
    return g.n == order && is_abelian(g) == abelian &&
           (int)involutions(g).size() == inv && max_element_order(g) == maxord;
}

std::vector<int> intersect_sorted(std::vector<int> s, const Subgroup& k) {
    std::vector<int> out;
    for (int x : s)
        if (k.contains(x)) out.push_back(x);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool CatalogReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return !checks.empty();
}

// -------------------------------------------------------------- constructions ----

SingerPlane singer(int q) {
    if (q < 2 || q > 16) throw input_error("singer: q must lie in [2, 16]");
    int e = 0;
    int p = prime_power_base(q, &e);
    if (p == 0) throw input_error("singer: " + std::to_string(q) + " is not a prime power");
    FieldTable f = gf_make(p, 3 * e);
    int n = q * q + q + 1;
    int beta = element_of_order(f, f.q - 1);
    std::vector<int> d;
    int x = 1;
    for (int i = 0; i < n; ++i) {
        if (relative_trace(f, e, x) == 0) d.push_back(i);
        x = f.mul(x, beta);
    }
    return {make_group(spec_cyclic(n)), d, q};
}

Order81Set vls() {
    FieldTable f = gf_make(3, 4);
    int gamma = element_of_order(f, 5);
    std::vector<int> d{0, 1};
    int x = gamma;
    for (int i = 0; i < 4; ++i) {
        d.push_back(x);
        x = f.mul(x, gamma);
    }
    std::sort(d.begin(), d.end());
    return {additive_group(f), d};
}

Order36Rds suetake() {
    auto g = make_group(
        spec_product(spec_cyclic(2), spec_product(spec_cyclic(3), spec_cyclic(6))));
    static const int digits[12][3] = {{0, 0, 0}, {0, 0, 2}, {0, 0, 4}, {0, 0, 5},
                                      {0, 1, 1}, {0, 2, 3}, {1, 0, 0}, {1, 0, 1},
                                      {1, 1, 4}, {1, 2, 2}, {1, 2, 3}, {1, 2, 5}};
    std::vector<int> d;
    for (const auto& t : digits) d.push_back(t[0] * 18 + t[1] * 6 + t[2]);
    std::sort(d.begin(), d.end());
    auto scan = find_forbidden_subgroup(difference_profile(g, d));
    if (!scan.subgroup)
        throw std::runtime_error("order-36 set: zero-difference scan did not close: " +
                                 scan.witness);
    return {g, d, *scan.subgroup};
}

AffineRds ag_minus_parallel(int q) {
    int e = 0;
    int p = prime_power_base(q, &e);
    if (p == 0) throw input_error("affine construction: " + std::to_string(q) +
                                  " is not a prime power");
    if (p == 2)
        throw input_error("affine construction: the squares collapse in characteristic 2");
    if (q > 13) throw input_error("affine construction: q must be <= 13");
    FieldTable f = gf_make(p, e);
    auto g = product_group(f, 2);  // (x, y) at index x + q*y
    std::vector<int> d, n_elems;
    for (int x = 0; x < q; ++x) d.push_back(x + q * f.mul(x, x));
    for (int y = 0; y < q; ++y) n_elems.push_back(q * y);
    std::sort(d.begin(), d.end());
    return {g, d, make_subgroup(g, n_elems), q};
}

namespace {

// generators of the order-32 semidihedral-times-Z2 presentation, located by
// a first-match scan over element tuples
struct Gens {
    int a, b, c, d;
};

Gens find_sd_presentation(GroupPtr gp) {
    const GroupTable& g = *gp;
    int e = g.identity;
    for (int a = 0; a < g.n; ++a) {
        if (g.power(a, 4) != e) continue;
        int a2 = g.op(a, a);
        for (int b = 0; b < g.n; ++b) {
            if (g.op(b, b) != a2) continue;
            for (int c = 0; c < g.n; ++c) {
                if (g.op(c, c) != e) continue;
                if (g.op(a, c) != g.op(c, a) || g.op(b, c) != g.op(c, b)) continue;
                for (int d = 0; d < g.n; ++d) {
                    if (g.op(d, d) != e) continue;
                    int da = g.op(d, a);
                    if (g.op(da, da) != e) continue;
                    int da2 = g.op(d, a2);
                    if (g.op(da2, da2) != e) continue;
                    int dabc = g.op(g.op(da, b), c);
                    if (dabc != g.inv[g.op(d, b)]) continue;
                    if (generated_subgroup(gp, {a, b, c, d}).order() != g.n) continue;
                    return {a, b, c, d};
                }
            }
        }
    }
    throw std::runtime_error("semidihedral cover: presentation scan found no generators");
}

}  // namespace

std::vector<Design16> designs16() {
    std::vector<Design16> out;
    {
        // bits: a=16, b=8, c=4, d=2, f=1
        auto g = make_group(spec_elementary_abelian(2, 5));
        std::vector<int> s{1, 3, 5, 9, 17, 31};  // f, df, cf, bf, af, abcdf
        auto k = generated_subgroup(g, {17, 9, 5, 3});
        out.push_back({"elementary-abelian", g, s, k, intersect_sorted(s, k)});
    }
    {
        // a = (1,0), b = (0,1) in the base, reflection c at offset 16
        auto g = make_group(
            spec_generalized_dihedral(spec_product(spec_cyclic(8), spec_cyclic(2))));
        // c, ca, cab, ca^2, ca^4, ca^6b
        std::vector<int> s{16, 18, 19, 20, 24, 29};
        auto k = generated_subgroup(g, {4, 1, 16});  // <a^2, b, c>
        out.push_back({"dihedral-cover", g, s, k, intersect_sorted(s, k)});
    }
    {
        auto g = make_group(spec_product(spec_semidihedral(3), spec_cyclic(2)));
        Gens w = find_sd_presentation(g);
        const GroupTable& t = *g;
        int a2 = t.op(w.a, w.a);
        int db = t.op(w.d, w.b);
        int da = t.op(w.d, w.a);
        std::vector<int> s{w.d,
                           t.op(w.d, a2),
                           t.op(t.power(db, 4), da),
                           t.op(t.power(db, 6), da),
                           db,
                           t.op(t.op(da, w.b), w.c)};
        std::sort(s.begin(), s.end());
        auto k = generated_subgroup(g, {db, da});
        out.push_back({"semidihedral-cover", g, s, k, intersect_sorted(s, k)});
    }
    return out;
}

// ------------------------------------------------------------------- entries ----

namespace {

void run_singer(int q, CatalogReport& r) {
    SingerPlane sp = singer(q);
    r.group_name = sp.group->name;
    r.set = sp.d;
    int n = q * q + q + 1;
    add(r, "set size q+1", (int)sp.d.size() == q + 1, join(sp.d));
    auto params = is_difference_set(sp.group, sp.d);
    add(r, "difference set (q^2+q+1, q+1, 1)",
        params.has_value() && *params == DSParams{n, q + 1, 1, false});
    auto graph = incidence_graph(development(*sp.group, sp.d));
    auto arr = intersection_array(graph, /*all_pairs=*/true);
    IntersectionArray want{3, {q + 1, q, q}, {1, 1, q + 1}};
    add(r, "incidence graph array {q+1,q,q;1,1,q+1}", arr.has_value() && *arr == want,
        arr ? arr->to_string() : "not distance-regular");
    add(r, "girth 6", girth(graph) == 6, std::to_string(girth(graph)));
}

void run_vls(CatalogReport& r) {
    Order81Set v = vls();
    r.group_name = v.group->name;
    r.set = v.d;
    auto pr = difference_profile(v.group, v.d);
    add(r, "contains 0 and 1",
        std::binary_search(v.d.begin(), v.d.end(), 0) &&
            std::binary_search(v.d.begin(), v.d.end(), 1),
        join(v.d));
    auto pg = is_partial_geometric_ds(pr);
    add(r, "partial geometric (81,6,2,0)", pg.has_value() && *pg == PGDSParams{81, 6, 2, 0});
    add(r, "all differences hit 0 or 1 times", is_partial_mu_geometric_ds(pr, 1));
    add(r, "not a plain difference set", !is_difference_set(pr).has_value());
    auto bridge = bridge_construct_dih(v.group, v.d);
    auto arr = intersection_array(bridge.cayley.graph, /*all_pairs=*/true);
    IntersectionArray want{4, {6, 5, 5, 4}, {1, 1, 2, 6}};
    add(r, "double cover array {6,5,5,4;1,1,2,6}", arr.has_value() && *arr == want,
        arr ? arr->to_string() : "not distance-regular");
    // c3 = k(k-1)(k-mu) / ((n-k) mu) with (n,k,mu) = (81,6,1)
    add(r, "c3 matches k(k-1)(k-mu)/((n-k)mu) = 2", arr.has_value() && arr->c[2] == 2);
}

void run_suetake(CatalogReport& r) {
    Order36Rds s = suetake();
    r.group_name = s.group->name;
    r.set = s.d;
    auto pr = difference_profile(s.group, s.d);
    add(r, "12 digit-triples decode to 12 elements", s.d.size() == 12, join(s.d));
    add(r, "forbidden subgroup from the zero-count scan",
        s.forbidden.elements == std::vector<int>{0, 6, 12}, join(s.forbidden.elements));
    auto rds = is_relative_difference_set(pr, s.forbidden);
    add(r, "relative difference set (12,3,12,4)",
        rds.has_value() && *rds == RDSParams{12, 3, 12, 4});
    add(r, "inverse set is relative too (symmetric)",
        rds.has_value() && is_symmetric_rds(pr, s.forbidden).symmetric);
    auto tr = is_symmetric_transversal(development(*s.group, s.d));
    add(r, "development is STD_4[12;3]", tr.has_value() && *tr == TransversalParams{4, 3});
    auto bridge = bridge_construct_dih(s.group, s.d);
    auto arr = intersection_array(bridge.cayley.graph, /*all_pairs=*/true);
    IntersectionArray want{4, {12, 11, 8, 1}, {1, 4, 11, 12}};
    add(r, "double cover array {12,11,8,1;1,4,11,12}", arr.has_value() && *arr == want,
        arr ? arr->to_string() : "not distance-regular");
    auto classes = antipodal_classes(bridge.cayley.graph, 4);
    bool sizes3 = classes.has_value();
    if (sizes3)
        for (const auto& cl : *classes) sizes3 = sizes3 && cl.size() == 3;
    add(r, "antipodal with classes of size 3", sizes3);
    add(r, "antipodal classes are subgroup cosets",
        antipodal_subgroup_agrees(bridge.cayley, 4));
}

void run_affine(int q, CatalogReport& r) {
    AffineRds a = ag_minus_parallel(q);
    r.group_name = a.group->name;
    r.set = a.d;
    auto pr = difference_profile(a.group, a.d);
    auto rds = is_relative_difference_set(pr, a.forbidden);
    add(r, "relative difference set (q,q,q,1)",
        rds.has_value() && *rds == RDSParams{q, q, q, 1});
    auto bridge = bridge_construct_dih(a.group, a.d);
    auto arr = intersection_array(bridge.cayley.graph, /*all_pairs=*/true);
    IntersectionArray want{4,
                           {q, q - 1, q - 1, 1},
                           {1, 1, q - 1, q}};
    add(r, "double cover array {q,q-1,q-1,1;1,1,q-1,q}", arr.has_value() && *arr == want,
        arr ? arr->to_string() : "not distance-regular");
    auto classes = antipodal_classes(bridge.cayley.graph, 4);
    add(r, "antipodal", classes.has_value());
    if (q == 3) {
        add(r, "18 vertices (the affine plane of order 3 minus a parallel class)",
            bridge.cayley.graph.n == 18);
        add(r, "girth 6", girth(bridge.cayley.graph) == 6);
    }
}

void run_designs16(CatalogReport& r) {
    auto entries = designs16();
    r.group_name = "three groups of order 32";
    add(r, "three constructions", entries.size() == 3);
    IntersectionArray biplane{3, {6, 5, 4}, {1, 2, 6}};
    IntersectionArray cube{4, {4, 3, 2, 1}, {1, 2, 3, 4}};
    std::vector<CayleyGraph> graphs;
    for (const auto& e : entries) {
        auto cg = build_cayley(e.group, e.s);
        auto arr = intersection_array(cg.graph, /*all_pairs=*/true);
        add(r, e.name + ": array {6,5,4;1,2,6}", arr.has_value() && *arr == biplane,
            arr ? arr->to_string() : "not distance-regular");
        add(r, e.name + ": involution witness outside the part",
            semidirect_guarantee(cg).verdict == GuaranteeVerdict::involution_found);
        add(r, e.name + ": S meets the cube subgroup in 4 elements",
            e.cube_part.order() == 16 && e.s_in_part.size() == 4, join(e.s_in_part));
        std::vector<int> old_of_new;
        auto kg = subgroup_as_group(e.cube_part, &old_of_new);
        std::vector<int> sk;
        for (int x : e.s_in_part) {
            auto it = std::find(old_of_new.begin(), old_of_new.end(), x);
            sk.push_back((int)(it - old_of_new.begin()));
        }
        std::sort(sk.begin(), sk.end());
        auto kcg = build_cayley(kg, sk);
        auto karr = intersection_array(kcg.graph, /*all_pairs=*/true);
        add(r, e.name + ": 4-cube on the index-2 subgroup",
            karr.has_value() && *karr == cube,
            karr ? karr->to_string() : "not distance-regular");
        graphs.push_back(std::move(cg));
    }
    // the advertised isomorphism classes of the parts and cube subgroups
    auto part_of = [](const CayleyGraph& cg) {
        return subgroup_as_group(part_subgroup(cg));
    };
    if (entries.size() == 3) {
        add(r, "elementary-abelian: part is Z2^4", shape_is(*part_of(graphs[0]), 16, true, 15, 2));
        add(r, "dihedral-cover: part is Z8 x Z2", shape_is(*part_of(graphs[1]), 16, true, 3, 8));
        add(r, "semidihedral-cover: part is Q8 x Z2",
            shape_is(*part_of(graphs[2]), 16, false, 3, 4));
        add(r, "dihedral-cover: cube subgroup is D8 x Z2",
            shape_is(*subgroup_as_group(entries[1].cube_part), 16, false, 11, 4));
        add(r, "semidihedral-cover: cube subgroup is SD16",
            shape_is(*subgroup_as_group(entries[2].cube_part), 16, false, 5, 8));
        for (int i = 0; i < 3; ++i)
            for (int j = i + 1; j < 3; ++j)
                add(r,
                    entries[i].name + " and " + entries[j].name + " are non-isomorphic",
                    !are_isomorphic_small(graphs[i].graph, graphs[j].graph).has_value());
    }
}

void run_cube4(CatalogReport& r) {
    auto g = make_group(spec_product(spec_cyclic(4), spec_cyclic(4)));
    auto cg = build_cayley(g, {1, 3, 4, 12});
    r.group_name = g->name;
    r.set = cg.connection_set;
    IntersectionArray cube{4, {4, 3, 2, 1}, {1, 2, 3, 4}};
    auto arr = intersection_array(cg.graph, /*all_pairs=*/true);
    add(r, "4-cube array {4,3,2,1;1,2,3,4}", arr.has_value() && *arr == cube);
    auto part = part_subgroup(cg);
    add(r, "no involutions outside the part", involutions_outside(part).empty());
    add(r, "guarantee verdict: exceptional",
        semidirect_guarantee(cg).verdict == GuaranteeVerdict::exceptional);
    auto tr = transport_no_involutions(cg, 1);
    auto tarr = intersection_array(tr.transported.graph, /*all_pairs=*/true);
    add(r, "transported graph is still the 4-cube", tarr.has_value() && *tarr == cube);
    add(r, "transport map verified edge by edge",
        verify_graph_isomorphism(cg.graph, tr.transported.graph, tr.map));
    auto h = make_subgroup(tr.transported.group,
                           std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
    add(r, "transport lands on the double cover of Z4 x Z2",
        shape_is(*subgroup_as_group(h), 8, true, 3, 4));
}

void run_paley9(CatalogReport& r) {
    auto ga = make_group(spec_product(spec_cyclic(6), spec_cyclic(3)));
    auto a_graph = build_cayley(ga, {3, 10, 11, 15});
    auto gb = make_group(
        spec_generalized_dihedral(spec_product(spec_cyclic(3), spec_cyclic(3))));
    auto b_graph = build_cayley(gb, {9, 11, 15, 17});
    r.group_name = ga->name + " / " + gb->name;
    r.set = a_graph.connection_set;
    add(r, "both graphs connected", a_graph.connected && b_graph.connected);
    auto iso = are_isomorphic_small(a_graph.graph, b_graph.graph);
    add(r, "isomorphic as graphs",
        iso.has_value() && verify_graph_isomorphism(a_graph.graph, b_graph.graph, *iso));
    auto part = part_subgroup(a_graph);
    int reps = 0, matches = 0;
    for (int x = 0; x < ga->n; ++x) {
        if (part.contains(x)) continue;
        ++reps;
        auto tr = transport_no_involutions(a_graph, x);
        if (tr.transported.connection_set == b_graph.connection_set) ++matches;
    }
    add(r, "nine coset representatives scanned", reps == 9, std::to_string(reps));
    add(r, "no transport reproduces the second connection set", matches == 0,
        std::to_string(matches) + " matches");
}

void run_knn(CatalogReport& r) {
    for (int n : {4, 7}) {
        auto g = make_group(spec_dihedral(n));
        std::vector<int> s;
        for (int i = n + 1; i < 2 * n; ++i) s.push_back(i);
        auto cg = build_cayley(g, s);
        auto arr = intersection_array(cg.graph, /*all_pairs=*/true);
        IntersectionArray want{3, {n - 1, n - 2, 1}, {1, n - 2, n - 1}};
        add(r, "n=" + std::to_string(n) + ": array {k,k-1,1;1,k-1,k}",
            arr.has_value() && *arr == want, arr ? arr->to_string() : "not distance-regular");
        auto bw = bridge_extract(cg);
        add(r, "n=" + std::to_string(n) + ": trivial difference set (n, n-1, n-2)",
            bw.family == DiffsetFamily::difference_set && bw.ds.has_value() &&
                *bw.ds == DSParams{n, n - 1, (long long)n - 2, true});
    }
    r.group_name = "dihedral groups";
}

struct Entry {
    std::string name;
    std::function<void(CatalogReport&)> run;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries = {
        {"projective-plane-2", [](CatalogReport& r) { run_singer(2, r); }},
        {"projective-plane-3", [](CatalogReport& r) { run_singer(3, r); }},
        {"projective-plane-4", [](CatalogReport& r) { run_singer(4, r); }},
        {"order81-partial-geometric", run_vls},
        {"order36-transversal", run_suetake},
        {"affine-plane-3", [](CatalogReport& r) { run_affine(3, r); }},
        {"affine-plane-5", [](CatalogReport& r) { run_affine(5, r); }},
        {"sixteen-point-designs", run_designs16},
        {"four-cube-transport", run_cube4},
        {"paley9-double-pair", run_paley9},
        {"complete-bipartite-minus-matching", run_knn},
    };
    return entries;
}

// "projective-plane-7" style names work for any legal parameter
bool parse_parametric(const std::string& name, CatalogReport& r) {
    for (const char* prefix : {"projective-plane-", "affine-plane-"}) {
        if (name.rfind(prefix, 0) != 0) continue;
        const std::string tail = name.substr(std::string(prefix).size());
        if (tail.empty() ||
            tail.find_first_not_of("0123456789") != std::string::npos)
            return false;
        int q = std::stoi(tail);
        if (prefix[0] == 'p')
            run_singer(q, r);
        else
            run_affine(q, r);
        return true;
    }
    return false;
}

}  // namespace

std::vector<std::string> catalog_names() {
    std::vector<std::string> out;
    for (const auto& e : registry()) out.push_back(e.name);
    return out;
}

CatalogReport catalog_run(const std::string& name) {
    CatalogReport r;
    r.name = name;
    for (const auto& e : registry()) {
        if (e.name != name) continue;
        try {
            e.run(r);
        } catch (const std::exception& ex) {
            add(r, "construction", false, ex.what());
        }
        return r;
    }
    try {
        if (parse_parametric(name, r)) return r;
    } catch (const std::exception& ex) {
        add(r, "construction", false, ex.what());
        return r;
    }
    throw input_error("unknown catalog entry: " + name);
}

}  // namespace drg
