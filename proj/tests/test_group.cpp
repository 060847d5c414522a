#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>

#include "drg/group.hpp"

using namespace drg;

namespace {

// order -> multiplicity fingerprint; crude but catches wrong tables fast
std::map<int, int> order_profile(const GroupTable& g) {
    std::map<int, int> prof;
    for (int x = 0; x < g.n; ++x) ++prof[element_order(g, x)];
    return prof;
}

}  // namespace

TEST_CASE("cyclic groups") {
    auto g = make_group(spec_cyclic(12));
    CHECK(g->n == 12);
    CHECK(g->identity == 0);
    CHECK(g->op(7, 8) == 3);
    CHECK(g->inverse(5) == 7);
    CHECK(element_order(*g, 1) == 12);
    CHECK(element_order(*g, 4) == 3);
    CHECK(is_abelian(*g));
    CHECK(g->label(11) == "11");
    CHECK_THROWS_AS(make_group(spec_cyclic(0)), input_error);
    CHECK_THROWS_AS(make_group(spec_cyclic(6000)), input_error);
    CHECK(make_group(spec_cyclic(6000), true)->n == 6000);
}

TEST_CASE("dihedral groups") {
    auto g = make_group(spec_dihedral(6));  // D12
    CHECK(g->n == 12);
    CHECK_FALSE(is_abelian(*g));
    // r has order 6, reflections have order 2
    CHECK(element_order(*g, 1) == 6);
    for (int i = 6; i < 12; ++i) CHECK(element_order(*g, i) == 2);
    // s r s = r^-1
    int s = 6, r = 1;
    CHECK(g->op(g->op(s, r), s) == g->inverse(r));
    CHECK(g->label(0) == "e");
    CHECK(g->label(2) == "r^2");
    CHECK(g->label(6) == "s");
    CHECK(g->label(8) == "s*r^2");
    // order profile of D12: 1 id, 7 involutions (6 reflections + r^3), 2 of
    // order 3, 2 of order 6
    auto prof = order_profile(*g);
    CHECK(prof[1] == 1);
    CHECK(prof[2] == 7);
    CHECK(prof[3] == 2);
    CHECK(prof[6] == 2);
}

TEST_CASE("dicyclic groups") {
    auto g = make_group(spec_dicyclic(3));  // Q12
    CHECK(g->n == 12);
    // unique involution a^m = a^3
    auto inv = involutions(*g);
    REQUIRE(inv.size() == 1);
    CHECK(inv[0] == 3);
    // b^2 = a^3 and b a b^-1 = a^-1
    int a = 1, b = 6;
    CHECK(g->op(b, b) == 3);
    CHECK(g->op(g->op(b, a), g->inverse(b)) == g->inverse(a));
    // outside <a> every element has order 4
    for (int i = 6; i < 12; ++i) CHECK(element_order(*g, i) == 4);
    CHECK(g->label(7) == "b*a");

    auto q8 = make_group(spec_dicyclic(2));  // quaternion group
    auto prof = order_profile(*q8);
    CHECK(prof[1] == 1);
    CHECK(prof[2] == 1);
    CHECK(prof[4] == 6);
}

TEST_CASE("semidihedral groups") {
    auto g = make_group(spec_semidihedral(3));  // SD16
    CHECK(g->n == 16);
    int a = 1, b = 8;
    CHECK(element_order(*g, a) == 8);
    CHECK(element_order(*g, b) == 2);
    // b a b = a^3  (m - 1 = 3 for m = 4)
    CHECK(g->op(g->op(b, a), b) == 3);
    // order profile of SD16: 1,2,4,8 orders with counts 1,5,6,4
    auto prof = order_profile(*g);
    CHECK(prof[1] == 1);
    CHECK(prof[2] == 5);
    CHECK(prof[4] == 6);
    CHECK(prof[8] == 4);
    CHECK_THROWS_AS(make_group(spec_semidihedral(1)), input_error);
}

TEST_CASE("elementary abelian groups") {
    auto g = make_group(spec_elementary_abelian(2, 5));
    CHECK(g->n == 32);
    CHECK(is_abelian(*g));
    for (int x = 1; x < 32; ++x) CHECK(element_order(*g, x) == 2);
    CHECK(g->label(0) == "00000");
    CHECK(g->label(5) == "00101");
    // addition = xor for p = 2
    CHECK(g->op(5, 3) == 6);

    auto h = make_group(spec_elementary_abelian(3, 2));
    CHECK(h->n == 9);
    CHECK(h->op(4, 4) == 8);  // (1,1)+(1,1) = (2,2)
    CHECK(h->label(7) == "21");
    CHECK_THROWS_AS(make_group(spec_elementary_abelian(4, 2)), input_error);
}

TEST_CASE("direct products") {
    auto g = make_group(spec_product(spec_cyclic(2), spec_product(spec_cyclic(3), spec_cyclic(6))));
    CHECK(g->n == 36);
    CHECK(is_abelian(*g));
    // row-major index: (a,b,c) -> 18a + 6b + c
    CHECK(g->label(0) == "000");
    CHECK(g->label(18 + 6 + 1) == "111");
    int x = 18 * 1 + 6 * 2 + 4;  // (1,2,4)
    int y = 18 * 1 + 6 * 2 + 5;  // (1,2,5)
    int xy = 18 * 0 + 6 * 1 + 3; // (0,1,3)
    CHECK(g->op(x, y) == xy);
    auto prof = order_profile(*g);
    CHECK(prof[6] > 0);
    // largest element order in Z2 x Z3 x Z6 is 6
    CHECK(prof.rbegin()->first == 6);
}

TEST_CASE("generalized dihedral groups") {
    auto g = make_group(spec_generalized_dihedral(spec_cyclic(5)));
    CHECK(g->n == 10);
    // Dih(Z5) is D10: all elements outside the base are involutions
    for (int i = 5; i < 10; ++i) CHECK(element_order(*g, i) == 2);
    int c = 5, h = 1;
    CHECK(g->op(g->op(c, h), c) == g->inverse(h));
    CHECK(g->label(5) == "c");
    CHECK(g->label(7) == "c*2");

    auto d = make_group(spec_generalized_dihedral(spec_product(spec_cyclic(8), spec_cyclic(2))));
    CHECK(d->n == 32);
    CHECK_FALSE(is_abelian(*d));
    CHECK_THROWS_AS(make_group(spec_generalized_dihedral(spec_dihedral(3))), input_error);
}

TEST_CASE("semidirect products by explicit automorphism") {
    auto base = make_group(spec_cyclic(8));
    // x -> 3x on Z8 has order 2
    std::vector<int> perm(8);
    for (int i = 0; i < 8; ++i) perm[i] = (3 * i) % 8;
    auto g = make_group(spec_semidirect_z2(spec_cyclic(8), AutomorphismDescriptor{false, perm}));
    CHECK(g->n == 16);
    int c = 8, a = 1;
    CHECK(g->op(g->op(c, a), g->inverse(c)) == 3);
    CHECK_FALSE(is_abelian(*g));

    // rejects non-automorphisms
    std::vector<int> bad(8);
    for (int i = 0; i < 8; ++i) bad[i] = (i + 1) % 8;
    CHECK_THROWS_AS(
        make_group(spec_semidirect_z2(spec_cyclic(8), AutomorphismDescriptor{false, bad})),
        input_error);
    // rejects inversion on a nonabelian base
    CHECK_THROWS_AS(
        make_group(spec_semidirect_z2(spec_dihedral(4), AutomorphismDescriptor{})),
        input_error);
}

TEST_CASE("group axiom validation catches broken tables") {
    auto g = make_group(spec_cyclic(6));
    GroupTable bad = *g;
    bad.mul[7] = (bad.mul[7] + 1) % 6;
    CHECK_THROWS_AS(make_group_from_table(bad), std::runtime_error);
}

TEST_CASE("subgroups") {
    auto g = make_group(spec_dihedral(6));
    auto rot = generated_subgroup(g, {1});
    CHECK(rot.order() == 6);
    CHECK(rot.index() == 2);
    CHECK(is_normal(rot));
    auto refl = generated_subgroup(g, {6});
    CHECK(refl.order() == 2);
    CHECK_FALSE(is_normal(refl));
    CHECK_THROWS_AS(make_subgroup(g, {0, 1}), input_error);  // not closed

    auto cos = cosets(rot);
    REQUIRE(cos.size() == 2);
    CHECK(cos[0] == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(cos[1] == std::vector<int>{6, 7, 8, 9, 10, 11});

    // subgroup as standalone group
    std::vector<int> back;
    auto rg = subgroup_as_group(rot, &back);
    CHECK(rg->n == 6);
    CHECK(back == std::vector<int>{0, 1, 2, 3, 4, 5});
    CHECK(element_order(*rg, 1) == 6);
}

TEST_CASE("index-2 subgroups") {
    // D12 has exactly 3
    auto d = make_group(spec_dihedral(6));
    auto subs = index2_subgroups(d);
    CHECK(subs.size() == 3);
    for (const auto& h : subs) {
        CHECK(h.order() == 6);
        CHECK(is_normal(h));
    }
    // the rotation subgroup is among them
    bool found = false;
    for (const auto& h : subs) found |= h.elements == std::vector<int>{0, 1, 2, 3, 4, 5};
    CHECK(found);

    // Z2^3 has 7 (hyperplanes of F2^3)
    CHECK(index2_subgroups(make_group(spec_elementary_abelian(2, 3))).size() == 7);
    // Z9 has none
    CHECK(index2_subgroups(make_group(spec_cyclic(9))).empty());
    // Q8 has 3
    CHECK(index2_subgroups(make_group(spec_dicyclic(2))).size() == 3);
    // Z6 has exactly 1
    auto z6subs = index2_subgroups(make_group(spec_cyclic(6)));
    REQUIRE(z6subs.size() == 1);
    CHECK(z6subs[0].elements == std::vector<int>{0, 2, 4});
}

TEST_CASE("involutions and semidirect witnesses") {
    auto d = make_group(spec_dihedral(5));
    CHECK(involutions(*d).size() == 5);
    auto rot = generated_subgroup(d, {1});
    CHECK(involutions_outside(rot).size() == 5);
    auto w = semidirect_decomposition(rot);
    REQUIRE(w.has_value());
    CHECK(*w == 5);

    // Q12 over <a> has no involution outside
    auto q = make_group(spec_dicyclic(3));
    auto cyc = generated_subgroup(q, {1});
    CHECK(involutions_outside(cyc).empty());
    CHECK_FALSE(semidirect_decomposition(cyc).has_value());
}

TEST_CASE("word labels") {
    auto g = make_group(spec_dicyclic(2));  // Q8
    auto labels = word_labels(*g, {{"i", 1}, {"j", 4}});
    CHECK(labels[0] == "e");
    CHECK(labels[1] == "i");
    CHECK(labels[4] == "j");
    CHECK(labels[2] == "i^2");
    auto relabeled = with_labels(*g, labels);
    CHECK(relabeled->find_label("i^2") == 2);
}

TEST_CASE("element parsing") {
    auto g = make_group(spec_dihedral(4));
    CHECK(parse_element(*g, "e") == 0);
    CHECK(parse_element(*g, "r^2") == 2);
    CHECK(parse_element(*g, "s*r") == 5);
    CHECK(parse_element(*g, "6") == 6);
    // product words multiply left to right
    CHECK(parse_element(*g, "r*s") == g->op(1, 4));
    CHECK(parse_element(*g, "s*r^3") == 7);
    CHECK(parse_element(*g, "r^-1") == 3);
    CHECK_THROWS_AS(parse_element(*g, "q"), input_error);
    CHECK_THROWS_AS(parse_element(*g, "99"), input_error);
    CHECK_THROWS_AS(parse_element(*g, ""), input_error);

    auto set = parse_element_set(*g, "s, r^2, s*r, s");
    CHECK(set == std::vector<int>{2, 4, 5});

    // digit labels win over index interpretation
    auto ea = make_group(spec_elementary_abelian(3, 2));
    CHECK(parse_element(*ea, "21") == 7);
}

TEST_CASE("spec grammar") {
    CHECK(make_group(parse_group_spec("cyclic(7)"))->n == 7);
    CHECK(make_group(parse_group_spec("dihedral(6)"))->n == 12);
    CHECK(make_group(parse_group_spec("dicyclic(5)"))->n == 20);
    CHECK(make_group(parse_group_spec("semidihedral(3)"))->n == 16);
    CHECK(make_group(parse_group_spec("elemabelian(2,5)"))->n == 32);
    CHECK(make_group(parse_group_spec("product(cyclic(2), product(cyclic(3), cyclic(6)))"))->n == 36);
    CHECK(make_group(parse_group_spec("gendihedral(product(cyclic(8), cyclic(2)))"))->n == 32);
    CHECK_THROWS_AS(parse_group_spec("frobnicate(3)"), input_error);
    CHECK_THROWS_AS(parse_group_spec("cyclic(7) junk"), input_error);
    CHECK_THROWS_AS(parse_group_spec("cyclic(7"), input_error);
}

TEST_CASE("all families validate and have exact inverse tables") {
    for (const char* s : {"cyclic(1)", "cyclic(13)", "dihedral(1)", "dihedral(9)",
                          "dicyclic(1)", "dicyclic(4)", "semidihedral(4)",
                          "elemabelian(5,2)", "product(dihedral(3),cyclic(4))",
                          "gendihedral(cyclic(12))"}) {
        auto g = make_group(parse_group_spec(s));
        validate_group(*g);
        for (int x = 0; x < g->n; ++x) {
            CHECK(g->op(x, g->inverse(x)) == g->identity);
            CHECK(g->labels[x].size() > 0);
        }
        // labels are unique
        std::set<std::string> uniq(g->labels.begin(), g->labels.end());
        CHECK((int)uniq.size() == g->n);
    }
}
