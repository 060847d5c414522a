#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "drg/diffset.hpp"
#include "drg/search.hpp"

using namespace drg;

namespace {

GroupPtr z(int n) { return make_group(spec_cyclic(n)); }

GroupPtr suetake_group() {
    return make_group(
        spec_product(spec_cyclic(2), spec_product(spec_cyclic(3), spec_cyclic(6))));
}

const std::vector<int> suetake_d{0, 2, 4, 5, 7, 15, 18, 19, 28, 32, 33, 35};

using Sols = std::vector<std::vector<int>>;

bool contains(const Sols& sols, const std::vector<int>& s) {
    return std::find(sols.begin(), sols.end(), s) != sols.end();
}

}  // namespace

TEST_CASE("difference-set search on a 7-cycle group") {
    auto g = z(7);
    SearchTask task{g, DSTarget{3, 1}};
    auto out = search(task);
    CHECK(out.complete);
    CHECK(out.solutions == Sols{{0, 1, 3}, {0, 1, 5}});
    for (const auto& s : out.solutions) {
        auto p = is_difference_set(g, s);
        REQUIRE(p.has_value());
        CHECK(p->k == 3);
        CHECK(p->mu == 1);
        CHECK_FALSE(p->trivial);
        CHECK(s == translate_canonical(*g, s, false));
    }

    task.canonical = false;
    auto all = search(task);
    CHECK(all.complete);
    CHECK(all.solutions.size() == 14);  // two translate classes of seven sets each
    // pruning only filters at emission, so the trees agree
    CHECK(all.nodes == out.nodes);
    for (const auto& s : all.solutions)
        CHECK(contains(out.solutions, translate_canonical(*g, s, false)));
    for (const auto& s : out.solutions) CHECK(contains(all.solutions, s));
}

TEST_CASE("canonical pruning is sound on a nonabelian group") {
    auto g = make_group(spec_product(spec_dicyclic(2), spec_cyclic(2)));
    REQUIRE(g->n == 16);
    REQUIRE_FALSE(is_abelian(*g));

    SearchTask task{g, DSTarget{6, 2}};
    auto reps = search(task);
    task.canonical = false;
    auto all = search(task);
    CHECK(reps.complete);
    CHECK(all.complete);
    CHECK(reps.solutions.size() == 44);
    CHECK(all.solutions.size() == 704);
    for (const auto& s : reps.solutions) {
        CHECK(s == translate_canonical(*g, s, true));
        CHECK(contains(all.solutions, s));
    }
    for (const auto& s : all.solutions)
        CHECK(contains(reps.solutions, translate_canonical(*g, s, true)));
}

TEST_CASE("order-16 groups admitting biplane difference sets") {
    // elementary abelian: 448 sets in all, the published enumeration figure;
    // the canonical run keeps one per translate class (448 / 16 = 28)
    auto ea = make_group(spec_elementary_abelian(2, 4));
    SearchTask task{ea, DSTarget{6, 2}};
    auto out = search(task);
    CHECK(out.complete);
    CHECK(out.solutions.size() == 28);
    CHECK(contains(out.solutions, {0, 1, 2, 4, 8, 15}));
    task.canonical = false;
    CHECK(search(task).solutions.size() == 448);

    auto z8z2 = make_group(spec_product(spec_cyclic(8), spec_cyclic(2)));
    auto out2 = search(SearchTask{z8z2, DSTarget{6, 2}});
    CHECK(out2.complete);
    CHECK(out2.solutions.size() == 12);
    for (const auto& s : out2.solutions) {
        auto p = is_difference_set(z8z2, s);
        REQUIRE(p.has_value());
        CHECK(p->k == 6);
        CHECK(p->mu == 2);
    }
}

TEST_CASE("relative difference-set search in the elementary abelian group of order 9") {
    auto g = make_group(spec_product(spec_cyclic(3), spec_cyclic(3)));
    auto n = make_subgroup(g, {0, 3, 6});

    SearchTask task{g, RDSTarget{n, 3, 1}};
    auto out = search(task);
    CHECK(out.complete);
    CHECK(out.solutions == Sols{{0, 1, 5}, {0, 1, 8}});
    CHECK(translate_canonical(*g, {0, 4, 5}, false) == std::vector<int>{0, 1, 8});
    for (const auto& s : out.solutions) {
        auto p = is_relative_difference_set(difference_profile(g, s), n);
        REQUIRE(p.has_value());
        CHECK(*p == RDSParams{3, 3, 3, 1});
    }

    task.canonical = false;
    auto all = search(task);
    CHECK(all.solutions.size() == 18);  // two classes, free translate action
    for (const auto& s : all.solutions)
        CHECK(contains(out.solutions, translate_canonical(*g, s, false)));
}

TEST_CASE("rediscovering the order-36 relative difference set") {
    auto g = suetake_group();
    auto n = make_subgroup(g, {0, 6, 12});
    auto canon = translate_canonical(*g, suetake_d, false);

    SearchTask task{g, RDSTarget{n, 12, 4}};
    task.jobs = 3;
    auto out = search(task);
    CHECK(out.complete);
    CHECK(contains(out.solutions, canon));
    // regression pin; the count is stable across worker splits and every
    // member is re-verified below
    CHECK(out.solutions.size() == 24);
    for (const auto& s : out.solutions) {
        CHECK(s == translate_canonical(*g, s, false));
        auto p = is_relative_difference_set(difference_profile(g, s), n);
        REQUIRE(p.has_value());
        CHECK(*p == RDSParams{12, 3, 12, 4});
    }

    task.jobs = 1;
    auto serial = search(task);
    CHECK(serial.solutions == out.solutions);
    CHECK(serial.nodes == out.nodes);
}

TEST_CASE("connection-set search certifying the Heawood array") {
    auto g = make_group(spec_dihedral(7));
    IntersectionArray heawood{3, {3, 2, 2}, {1, 1, 3}};
    SearchTask task{g, ConnSetTarget{heawood}};
    auto out = search(task);
    CHECK(out.complete);
    CHECK(out.solutions.size() == 14);  // one per (7,3,1) difference set
    CHECK(contains(out.solutions, {10, 12, 13}));
    for (const auto& s : out.solutions) {
        REQUIRE(s.size() == 3);
        for (int x : s) {
            CHECK(x >= 7);  // reflections only: a rotation pair would close an odd cycle
            CHECK(g->inv[x] == x);
        }
    }
    auto cg = build_cayley(g, out.solutions.front());
    auto arr = intersection_array(cg.graph, /*all_pairs=*/true);
    REQUIRE(arr.has_value());
    CHECK(*arr == heawood);

    task.jobs = 3;
    auto par = search(task);
    CHECK(par.solutions == out.solutions);
    CHECK(par.nodes == out.nodes);
}

TEST_CASE("connection-set searches that come back empty") {
    auto q12 = make_group(spec_dicyclic(3));
    // the one shell-feasible diameter-3 bipartite template on 12 vertices
    auto cert = nonexistence_certificate(
        SearchTask{q12, ConnSetTarget{IntersectionArray{3, {5, 4, 1}, {1, 4, 5}}}});
    CHECK(cert.certified);
    CHECK(cert.nodes > 0);
    CHECK(cert.reason == "exhausted the pruned search space");

    // every other (k, mu < k-1) template fails the shell arithmetic outright
    for (int k = 2; k < 12; ++k)
        for (long long mu = 1; mu < k - 1; ++mu) {
            SearchTask t{q12, ConnSetTarget{IntersectionArray{
                                  3, {k, k - 1, k - mu}, {1, mu, k}}}};
            auto c = nonexistence_certificate(t);
            CHECK(c.certified);
            CHECK(c.nodes == 0);
        }

    // no involutions in an odd cyclic group, so no odd-size connection set
    auto c7 = nonexistence_certificate(
        SearchTask{z(7), ConnSetTarget{IntersectionArray{2, {3, 2}, {1, 2}}}});
    CHECK(c7.certified);
    CHECK(c7.nodes > 0);
}

TEST_CASE("difference-set searches that come back empty") {
    // order-16 dihedral group: no (16,6,2) or (16,10,6) difference set
    auto g = make_group(spec_dihedral(8));
    for (auto [k, mu] : {std::pair<int, long long>{6, 2}, {10, 6}}) {
        auto cert = nonexistence_certificate(SearchTask{g, DSTarget{k, mu}});
        CHECK(cert.certified);
        CHECK(cert.nodes > 0);
        CHECK(cert.reason == "exhausted the pruned search space");
    }
}

TEST_CASE("arithmetic screening happens before any search") {
    CHECK_THROWS_WITH_AS(search(SearchTask{z(3), DSTarget{2, 2}}),
                         doctest::Contains("k(k-1) = (n-1)mu"), input_error);
    auto cert = nonexistence_certificate(SearchTask{z(3), DSTarget{2, 2}});
    CHECK(cert.certified);
    CHECK(cert.nodes == 0);
    CHECK(cert.reason.find("arithmetic") != std::string::npos);

    auto g9 = make_group(spec_product(spec_cyclic(3), spec_cyclic(3)));
    auto n9 = make_subgroup(g9, {0, 3, 6});
    CHECK_THROWS_WITH_AS(search(SearchTask{g9, RDSTarget{n9, 2, 1}}),
                         doctest::Contains("mu(n-|N|)"), input_error);
    CHECK(nonexistence_certificate(SearchTask{g9, RDSTarget{n9, 2, 1}}).certified);

    CHECK_THROWS_WITH_AS(search(SearchTask{z(7), PGDSTarget{3, 2, 0}}),
                         doctest::Contains("k^3"), input_error);

    // shell arithmetic for connection-set targets
    auto c12 = z(12);
    CHECK(nonexistence_certificate(
              SearchTask{c12, ConnSetTarget{IntersectionArray{2, {4, 2}, {1, 3}}}})
              .reason.find("non-integral") != std::string::npos);
    CHECK(nonexistence_certificate(
              SearchTask{z(7), ConnSetTarget{IntersectionArray{2, {3, 2}, {1, 3}}}})
              .reason.find("sum to 6") != std::string::npos);
    CHECK_THROWS_WITH_AS(
        search(SearchTask{z(7), ConnSetTarget{IntersectionArray{2, {3, 2}, {2, 2}}}}),
        doctest::Contains("c1 = 1"), input_error);

    // malformed tasks are input errors, never certificates
    CHECK_THROWS_WITH_AS(
        nonexistence_certificate(SearchTask{z(7), ConnSetTarget{IntersectionArray{}}}),
        doctest::Contains("malformed"), input_error);
    auto foreign = make_subgroup(z(9), {0, 3, 6});
    CHECK_THROWS_WITH_AS(search(SearchTask{g9, RDSTarget{foreign, 3, 1}}),
                         doctest::Contains("different parent"), input_error);
    auto whole = make_subgroup(g9, {0, 1, 2, 3, 4, 5, 6, 7, 8});
    CHECK_THROWS_WITH_AS(search(SearchTask{g9, RDSTarget{whole, 3, 1}}),
                         doctest::Contains("proper"), input_error);
    CHECK_THROWS_WITH_AS(search(SearchTask{g9, RDSTarget{n9, 3, 0}}),
                         doctest::Contains("mu must be >= 1"), input_error);
    CHECK_THROWS_WITH_AS(search(SearchTask{z(7), DSTarget{9, 1}}),
                         doctest::Contains("k out of range"), input_error);
    CHECK_THROWS_WITH_AS(search(SearchTask{nullptr, DSTarget{1, 0}}),
                         doctest::Contains("null group"), input_error);
}

TEST_CASE("budget exhaustion refuses to certify") {
    auto g = make_group(spec_dihedral(8));
    SearchTask task{g, DSTarget{6, 2}};
    task.max_nodes = 100;
    auto out = search(task);
    CHECK_FALSE(out.complete);
    CHECK(out.nodes <= 100);
    auto cert = nonexistence_certificate(task);
    CHECK_FALSE(cert.certified);
    CHECK(cert.reason.find("budget") != std::string::npos);
}

TEST_CASE("solution limits and the order guard") {
    SearchTask task{z(7), DSTarget{3, 1}};
    task.max_solutions = 1;
    auto out = search(task);
    CHECK(out.solutions == Sols{{0, 1, 3}});
    CHECK_FALSE(out.complete);  // stopped by the limit, not exhaustion

    auto big = make_group(spec_cyclic(256));
    CHECK_THROWS_WITH_AS(search(SearchTask{big, DSTarget{1, 0}}),
                         doctest::Contains("guard"), input_error);
    SearchTask large{big, DSTarget{1, 0}};
    large.allow_large = true;
    auto single = search(large);
    CHECK(single.complete);
    CHECK(single.solutions == Sols{{0}});

    // the empty set is the one (and trivial) solution for k = 0
    auto none = search(SearchTask{z(7), DSTarget{0, 0}});
    CHECK(none.complete);
    CHECK(none.nodes == 0);
    CHECK(none.solutions == Sols{{}});
}

TEST_CASE("worker count does not change the outcome") {
    SearchTask task{z(7), DSTarget{3, 1}};
    task.canonical = false;
    auto serial = search(task);
    task.jobs = 4;
    auto par = search(task);
    CHECK(par.solutions == serial.solutions);
    CHECK(par.nodes == serial.nodes);

    // solutions shallower than the split depth merge in tree order too
    SearchTask tiny{make_group(spec_dihedral(7)), DSTarget{1, 0}};
    tiny.jobs = 4;
    auto one = search(tiny);
    CHECK(one.complete);
    CHECK(one.solutions == Sols{{0}});
}

TEST_CASE("partial geometric search matches brute-force recognition") {
    auto g = z(7);
    auto out = search(SearchTask{g, PGDSTarget{3, 3, 0}});
    CHECK(out.complete);

    Sols brute;
    for (int a = 0; a < 7; ++a)
        for (int b = a + 1; b < 7; ++b)
            for (int c = b + 1; c < 7; ++c) {
                std::vector<int> d{a, b, c};
                auto p = is_partial_geometric_ds(g, d);
                if (!p || !(*p == PGDSParams{7, 3, 3, 0})) continue;
                auto rep = translate_canonical(*g, d, false);
                if (!contains(brute, rep)) brute.push_back(rep);
            }
    std::sort(brute.begin(), brute.end());
    CHECK(out.solutions == brute);
    CHECK(out.solutions == Sols{{0, 1, 3}, {0, 1, 5}});  // exactly the planar difference sets
}
