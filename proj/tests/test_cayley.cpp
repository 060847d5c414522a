#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "drg/cayley.hpp"

using namespace drg;

namespace {

// Fano plane incidence graph (Heawood): points 0..6, blocks 7..13, block i
// is {1,2,4}+i mod 7. Built without any Cayley machinery so it can serve as
// an independent fixture.
Graph heawood() {
    std::vector<std::vector<int>> adj(14);
    for (int i = 0; i < 7; ++i)
        for (int d : {1, 2, 4}) {
            int p = (i + d) % 7;
            adj[p].push_back(7 + i);
            adj[7 + i].push_back(p);
        }
    return make_graph(14, std::move(adj), "heawood");
}

Graph cycle(int n) {
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        adj[i].push_back((i + 1) % n);
        adj[i].push_back((i + n - 1) % n);
    }
    return make_graph(n, std::move(adj), "cycle");
}

}  // namespace

TEST_CASE("graph construction validation") {
    CHECK_THROWS_AS(make_graph(2, {{1}, {0, 0, 2}}), input_error);  // out of range
    CHECK_THROWS_AS(make_graph(2, {{0}, {}}), input_error);         // loop
    CHECK_THROWS_AS(make_graph(2, {{1}, {}}), input_error);         // asymmetric
    auto g = make_graph(3, {{1, 1, 2}, {0}, {0}});                  // dup edges collapse
    CHECK(g.edge_count() == 2);
}

TEST_CASE("cayley construction and validation") {
    auto z2 = make_group(spec_cyclic(2));
    auto k2 = build_cayley(z2, {1});
    CHECK(k2.graph.n == 2);
    CHECK(k2.graph.has_edge(0, 1));
    CHECK(k2.connected);

    auto d8 = make_group(spec_dihedral(4));
    CHECK_THROWS_WITH_AS(build_cayley(d8, {0, 4}), doctest::Contains("identity"), input_error);
    // r alone is not inverse-closed in D8
    CHECK_THROWS_WITH_AS(build_cayley(d8, {1}), doctest::Contains("r^3"), input_error);

    // neighbors of b are S b (right-multiplication convention)
    auto g = build_cayley(d8, {1, 3, 4});
    for (int b = 0; b < 8; ++b)
        for (int s : {1, 3, 4}) CHECK(g.graph.has_edge(d8->op(s, b), b));

    // proper subgroup connection set leaves the graph disconnected
    auto sub = build_cayley(d8, {2});
    CHECK_FALSE(sub.connected);
}

TEST_CASE("distance machinery") {
    auto g = cycle(8);
    auto shells = distance_partition(g, 0);
    REQUIRE(shells.size() == 5);
    CHECK(shells[0] == std::vector<int>{0});
    CHECK(shells[4] == std::vector<int>{4});
    CHECK(shells[1].size() == 2);

    auto z4sq = make_group(spec_product(spec_cyclic(4), spec_cyclic(4)));
    auto cube = build_cayley(z4sq, {4, 12, 1, 3});  // {a, a^-1, b, b^-1}
    auto cs = distance_partition(cube.graph, 0);
    std::vector<size_t> sizes;
    for (auto& s : cs) sizes.push_back(s.size());
    CHECK(sizes == std::vector<size_t>{1, 4, 6, 4, 1});

    auto disc = build_cayley(make_group(spec_cyclic(6)), {2, 4});
    CHECK_THROWS_WITH_AS(distance_partition(disc.graph, 0), doctest::Contains("unreachable"),
                         input_error);
    CHECK_FALSE(is_connected(disc.graph));
}

TEST_CASE("intersection arrays") {
    // C8 as a Cayley graph of the dihedral group of order 8
    auto d8 = make_group(spec_dihedral(4));
    auto c8 = build_cayley(d8, {4, 5});  // two adjacent reflections
    auto ia = intersection_array(c8.graph);
    REQUIRE(ia.has_value());
    CHECK(ia->d == 4);
    CHECK(ia->b == std::vector<long long>{2, 1, 1, 1});
    CHECK(ia->c == std::vector<long long>{1, 1, 1, 2});
    CHECK(ia->to_string() == "{2,1,1,1;1,1,1,2}");
    CHECK(ia->k() == 2);
    CHECK(ia->shell_sizes() == std::vector<long long>{1, 2, 2, 2, 1});

    // the 4x4 torus = 4-cube
    auto z4sq = make_group(spec_product(spec_cyclic(4), spec_cyclic(4)));
    auto cube = build_cayley(z4sq, {4, 12, 1, 3});
    auto ci = intersection_array(cube.graph, true);
    REQUIRE(ci.has_value());
    CHECK(ci->to_string() == "{4,3,2,1;1,2,3,4}");

    // Heawood: not vertex 0-rooted Cayley here, so use the all-pairs mode
    auto hw = intersection_array(heawood(), true);
    REQUIRE(hw.has_value());
    CHECK(hw->to_string() == "{3,2,2;1,1,3}");
    CHECK(hw->mu() == 1);

    // a regular connected graph that is not distance-regular: 3-prism
    auto prism = make_graph(6, {{1, 2, 3}, {0, 2, 4}, {0, 1, 5}, {0, 4, 5}, {1, 3, 5}, {2, 3, 4}});
    std::string why;
    CHECK_FALSE(intersection_array(prism, true, &why).has_value());
    CHECK(why.find("counts differ") != std::string::npos);

    // non-regular graph rejected with a witness
    auto path = make_graph(3, {{1}, {0, 2}, {1}});
    CHECK_FALSE(intersection_array(path, false, &why).has_value());
    CHECK(why.find("not regular") != std::string::npos);
}

TEST_CASE("flagship bipartite antipodal example on a generalized dihedral group") {
    // development of a 12-element set in Z2 x Z3 x Z6, realized as a Cayley
    // graph on Dih(Z2 x Z3 x Z6): S = c D
    auto spec = spec_generalized_dihedral(
        spec_product(spec_cyclic(2), spec_product(spec_cyclic(3), spec_cyclic(6))));
    auto g = make_group(spec);
    REQUIRE(g->n == 72);
    std::vector<int> d_set{0, 2, 4, 5, 7, 15, 18, 19, 28, 32, 33, 35};
    std::vector<int> s;
    for (int d : d_set) s.push_back(36 + d);
    auto cg = build_cayley(g, s);
    CHECK(cg.connected);
    auto ia = intersection_array(cg.graph);
    REQUIRE(ia.has_value());
    CHECK(ia->to_string() == "{12,11,8,1;1,4,11,12}");
    CHECK(ia->shell_sizes() == std::vector<long long>{1, 12, 33, 24, 2});
    CHECK(bipartition(cg.graph).has_value());
    // k_4 = 2, so this is a 3-fold antipodal cover: classes {v} plus the two
    // vertices at distance 4
    auto cls = antipodal_classes(cg.graph, 4);
    REQUIRE(cls.has_value());
    CHECK(cls->size() == 24);
    for (auto& c : *cls) CHECK(c.size() == 3);
    CHECK(antipodal_subgroup_agrees(cg, 4));
}

TEST_CASE("bipartition") {
    auto bp = bipartition(heawood());
    REQUIRE(bp.has_value());
    CHECK(bp->first.size() == 7);
    CHECK(bp->first.front() == 0);
    for (int v : bp->first) CHECK(v < 7);

    std::vector<int> cyc;
    auto tri = cycle(3);
    CHECK_FALSE(bipartition(tri, 0, &cyc).has_value());
    REQUIRE(cyc.size() >= 3);
    CHECK(cyc.size() % 2 == 1);
    for (size_t i = 0; i < cyc.size(); ++i)
        CHECK(tri.has_edge(cyc[i], cyc[(i + 1) % cyc.size()]));

    auto c5 = cycle(5);
    CHECK_FALSE(bipartition(c5, 0, &cyc).has_value());
    CHECK(cyc.size() == 5);
}

TEST_CASE("girth") {
    CHECK(girth(cycle(3)) == 3);
    CHECK(girth(cycle(5)) == 5);
    CHECK(girth(cycle(12)) == 12);
    CHECK(girth(cycle(14)) == girth_cap_sentinel);  // capped
    CHECK(girth(heawood()) == 6);
    auto tree = make_graph(4, {{1, 2, 3}, {0}, {0}, {0}});
    CHECK(girth(tree) == girth_cap_sentinel);
    auto k4 = make_graph(4, {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}});
    CHECK(girth(k4) == 3);
}

TEST_CASE("part subgroup of a bipartite Cayley graph") {
    auto z2 = make_group(spec_cyclic(2));
    auto k2 = build_cayley(z2, {1});
    CHECK(part_subgroup(k2).elements == std::vector<int>{0});

    auto z4sq = make_group(spec_product(spec_cyclic(4), spec_cyclic(4)));
    auto cube = build_cayley(z4sq, {4, 12, 1, 3});
    auto h = part_subgroup(cube);
    CHECK(h.elements == std::vector<int>{0, 2, 5, 7, 8, 10, 13, 15});  // <ab, a^2>
    CHECK(is_normal(h));
    CHECK(h.index() == 2);

    auto tri = build_cayley(make_group(spec_cyclic(3)), {1, 2});
    CHECK_THROWS_AS(part_subgroup(tri), input_error);  // not bipartite
    auto disc = build_cayley(make_group(spec_cyclic(6)), {3});
    CHECK_THROWS_AS(part_subgroup(disc), input_error);  // not connected
}

TEST_CASE("antipodality") {
    auto c8 = cycle(8);
    auto cls = antipodal_classes(c8, 4);
    REQUIRE(cls.has_value());
    CHECK(cls->size() == 4);
    for (auto& c : *cls) CHECK(c.size() == 2);
    CHECK((*cls)[0] == std::vector<int>{0, 4});

    auto z8 = make_group(spec_cyclic(8));
    auto cay8 = build_cayley(z8, {1, 7});
    CHECK(antipodal_subgroup_agrees(cay8, 4));

    CHECK_FALSE(antipodal_classes(heawood(), 3).has_value());

    auto z4sq = make_group(spec_product(spec_cyclic(4), spec_cyclic(4)));
    auto cube = build_cayley(z4sq, {4, 12, 1, 3});
    auto cc = antipodal_classes(cube.graph, 4);
    REQUIRE(cc.has_value());
    for (auto& c : *cc) CHECK(c.size() == 2);
    CHECK(antipodal_subgroup_agrees(cube, 4));
}

TEST_CASE("distance-i graphs and halved graphs") {
    auto hw = heawood();
    // distance-1 graph is the graph itself
    auto d1 = distance_i_graph(hw, 1);
    for (int v = 0; v < hw.n; ++v) CHECK(d1.adj[v] == hw.adj[v]);
    // beyond the diameter: empty
    CHECK(distance_i_graph(hw, 4).edge_count() == 0);

    // distance-3 graph of Heawood is the (7,4,2)-biplane incidence graph
    auto d3 = distance_i_graph(hw, 3);
    auto ia = intersection_array(d3, true);
    REQUIRE(ia.has_value());
    CHECK(ia->to_string() == "{4,3,2;1,2,4}");

    // halved 4-cube: complete multipartite K_{4x2}, strongly regular (8,6,4,6)
    auto z4sq = make_group(spec_product(spec_cyclic(4), spec_cyclic(4)));
    auto cube = build_cayley(z4sq, {4, 12, 1, 3});
    auto [h0, h1] = halved_graphs(cube.graph);
    for (const auto& h : {h0, h1}) {
        CHECK(h.graph.n == 8);
        for (int v = 0; v < 8; ++v) CHECK(h.graph.degree(v) == 6);
        auto hi = intersection_array(h.graph, true);
        REQUIRE(hi.has_value());
        CHECK(hi->to_string() == "{6,1;1,6}");
        // lambda = 4: adjacent vertices share 4 common neighbors
        for (int u = 0; u < 8; ++u)
            for (int v : h.graph.adj[u]) {
                int common = 0;
                for (int w : h.graph.adj[u]) common += h.graph.has_edge(v, w);
                CHECK(common == 4);
            }
    }
    // vertex maps point back into the two parts
    std::set<int> seen(h0.vertex_of.begin(), h0.vertex_of.end());
    for (int v : h1.vertex_of) CHECK(seen.count(v) == 0);
}

TEST_CASE("quotient matrices") {
    auto d16 = make_group(spec_dihedral(8));
    auto cg = build_cayley(d16, {1, 7, 9, 11});  // {r, r^7, s*r, s*r^3}
    std::vector<int> rot, refl;
    for (int i = 0; i < 8; ++i) rot.push_back(i), refl.push_back(8 + i);
    auto qm = quotient_matrix(cg.graph, {rot, refl});
    CHECK(qm.equitable);
    CHECK(qm.at(0, 0) == 2);
    CHECK(qm.at(0, 1) == 2);
    CHECK(qm.at(1, 0) == 2);
    CHECK(qm.at(1, 1) == 2);

    // trivial partition: single cell [k]
    std::vector<int> all(16);
    for (int i = 0; i < 16; ++i) all[i] = i;
    auto tq = quotient_matrix(cg.graph, {all});
    CHECK(tq.equitable);
    CHECK(tq.at(0, 0) == 4);

    // a non-equitable partition on a path
    auto path = make_graph(3, {{1}, {0, 2}, {1}});
    auto nq = quotient_matrix(path, {{0, 1}, {2}});
    CHECK_FALSE(nq.equitable);
    CHECK(nq.entry[0][1] == std::pair<long long, long long>{1, 2});
    CHECK_THROWS_AS(nq.at(0, 1), std::runtime_error);

    CHECK_THROWS_AS(quotient_matrix(path, {{0}, {2}}), input_error);       // misses 1
    CHECK_THROWS_AS(quotient_matrix(path, {{0, 1}, {1, 2}}), input_error); // overlap

    // coset partitions of normal subgroups are equitable (property)
    auto q12 = make_group(spec_dicyclic(3));
    auto cay = build_cayley(q12, {1, 5, 6, 9});  // {a, a^-1, b, b^-1}
    auto h = generated_subgroup(q12, {2});
    REQUIRE(is_normal(h));
    CHECK(quotient_matrix(cay.graph, cosets(h)).equitable);
}

TEST_CASE("annihilation identities") {
    auto z2 = make_group(spec_cyclic(2));
    auto k2 = build_cayley(z2, {1});
    CHECK(annihilation_check(k2.graph, {{2, 1}}));       // A^2 - I = 0
    CHECK_FALSE(annihilation_check(k2.graph, {{2, 2}}));

    auto hw = heawood();
    CHECK(annihilation_check(hw, {{2, 9}, {2, 2}}));        // (A^2-9I)(A^2-2I) = 0
    CHECK_FALSE(annihilation_check(hw, {{2, 9}, {2, 3}}));  // wrong eigenvalue oracle
    CHECK_FALSE(annihilation_check(hw, {{2, 2}}));

    // C4: (A - 2I)(A + 2I)A = 0
    auto c4 = cycle(4);
    CHECK(annihilation_check(c4, {{1, 2}, {1, -2}, {1, 0}}));
    CHECK_FALSE(annihilation_check(c4, {{1, 2}, {1, -2}}));
    CHECK_THROWS_AS(annihilation_check(c4, {}), input_error);
}

TEST_CASE("exact nonsingularity") {
    auto z2 = make_group(spec_cyclic(2));
    CHECK(is_nonsingular(build_cayley(z2, {1}).graph));  // det = -1
    CHECK(is_nonsingular(heawood()));
    CHECK_FALSE(is_nonsingular(cycle(4)));
    auto z4sq = make_group(spec_product(spec_cyclic(4), spec_cyclic(4)));
    CHECK_FALSE(is_nonsingular(build_cayley(z4sq, {4, 12, 1, 3}).graph));
    CHECK(is_nonsingular(cycle(3)));  // det(K3 adjacency) = 2
    auto path = make_graph(3, {{1}, {0, 2}, {1}});
    CHECK_FALSE(is_nonsingular(path));
    CHECK(trace_a2(heawood()) == 2 * 21);
}

TEST_CASE("circulant eigenvalues") {
    auto sp = circulant_eigenvalues(4, {1, 3}, {2.0, 0.0, -2.0});
    REQUIRE(sp.lambda.size() == 4);
    CHECK(sp.lambda[0].real() == doctest::Approx(2).epsilon(1e-12));
    CHECK(sp.lambda[1].real() == doctest::Approx(0).epsilon(1e-12));
    CHECK(sp.lambda[2].real() == doctest::Approx(-2).epsilon(1e-12));
    CHECK(sp.all_matched);
    CHECK(sp.parseval_ok);
    CHECK(sp.match == std::vector<int>{0, 1, 2, 1});

    // perfect difference set {1,2,4} mod 7: |lambda_j|^2 = k - mu = 2 off the
    // principal eigenvalue
    auto f = circulant_eigenvalues(7, {1, 2, 4});
    CHECK(f.lambda[0].real() == doctest::Approx(3).epsilon(1e-12));
    for (int j = 1; j < 7; ++j)
        CHECK(std::norm(f.lambda[j]) == doctest::Approx(2).epsilon(1e-9));
    CHECK(f.parseval_ok);

    // odd symbol sets on Z_{2m}: lambda_{m+j} = -lambda_j
    auto o = circulant_eigenvalues(10, {1, 9, 5});
    for (int j = 0; j < 5; ++j) {
        CHECK(o.lambda[5 + j].real() == doctest::Approx(-o.lambda[j].real()).epsilon(1e-9));
        CHECK(std::abs(o.lambda[j].imag()) < 1e-9);
    }

    // classification failure reported, not fudged
    auto bad = circulant_eigenvalues(8, {1, 7}, {2.0, -2.0, 0.0});
    CHECK_FALSE(bad.all_matched);  // sqrt(2) is not in the target list
    CHECK(bad.parseval_ok);

    CHECK_THROWS_AS(circulant_eigenvalues(5, {7}), input_error);
}

TEST_CASE("twin vertices") {
    auto c4 = cycle(4);
    auto t = has_twin_vertices(c4);
    REQUIRE(t.has_value());
    CHECK(*t == std::pair<int, int>{0, 2});
    CHECK_FALSE(has_twin_vertices(heawood()).has_value());
    CHECK_FALSE(has_twin_vertices(cycle(5)).has_value());
}

TEST_CASE("small-graph isomorphism") {
    // C6 two ways: cyclic group and two reflections of the triangle dihedral
    auto c6a = build_cayley(make_group(spec_cyclic(6)), {1, 5}).graph;
    auto c6b = build_cayley(make_group(spec_dihedral(3)), {3, 4}).graph;
    auto m = are_isomorphic_small(c6a, c6b);
    REQUIRE(m.has_value());
    CHECK(verify_graph_isomorphism(c6a, c6b, *m));

    // identity on self
    auto self = are_isomorphic_small(c6a, c6a);
    REQUIRE(self.has_value());
    CHECK(verify_graph_isomorphism(c6a, c6a, *self));

    // C6 vs two triangles: same degrees, not isomorphic
    auto tri2 = make_graph(6, {{1, 2}, {0, 2}, {0, 1}, {4, 5}, {3, 5}, {3, 4}});
    CHECK_FALSE(are_isomorphic_small(c6a, tri2).has_value());
    CHECK_FALSE(verify_graph_isomorphism(c6a, tri2, {0, 1, 2, 3, 4, 5}));

    // two triangles vs two triangles relabeled
    auto tri2b = make_graph(6, {{2, 4}, {3, 5}, {0, 4}, {1, 5}, {0, 2}, {1, 3}});
    auto mt = are_isomorphic_small(tri2, tri2b);
    REQUIRE(mt.has_value());
    CHECK(verify_graph_isomorphism(tri2, tri2b, *mt));

    // guard
    Graph big;
    big.n = 200;
    big.adj.resize(200);
    CHECK_THROWS_AS(are_isomorphic_small(big, big), input_error);
}

TEST_CASE("right translations are automorphisms") {
    std::mt19937 rng(7);
    for (const char* spec : {"dihedral(6)", "dicyclic(3)", "product(cyclic(4),cyclic(4))"}) {
        auto g = make_group(parse_group_spec(spec));
        // build some inverse-closed set
        std::set<int> s;
        std::uniform_int_distribution<int> pick(1, g->n - 1);
        while ((int)s.size() < 4) {
            int x = pick(rng);
            if (x == g->identity) continue;
            s.insert(x);
            s.insert(g->inverse(x));
        }
        auto cg = build_cayley(g, std::vector<int>(s.begin(), s.end()));
        for (int t = 0; t < 10; ++t) {
            int h = pick(rng);
            std::vector<int> map(g->n);
            for (int v = 0; v < g->n; ++v) map[v] = g->op(v, h);
            CHECK(verify_graph_isomorphism(cg.graph, cg.graph, map));
        }
    }
}

TEST_CASE("dot export") {
    auto k2 = build_cayley(make_group(spec_cyclic(2)), {1});
    auto dot = to_dot(k2.graph);
    CHECK(dot.find("graph g {") == 0);
    CHECK(dot.find("v0 -- v1;") != std::string::npos);
    std::vector<std::string> labels{"zero", "one"};
    CHECK(to_dot(k2.graph, &labels).find("label=\"one\"") != std::string::npos);
}
