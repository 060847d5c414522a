#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "drg/json_io.hpp"

using namespace drg;

TEST_CASE("group files round-trip") {
    auto g = make_group(spec_dihedral(6));
    Json j = group_to_json(*g);
    CHECK(j["schema"] == 1);
    CHECK(j["order"] == 12);
    auto back = group_from_json(j);
    CHECK(back->n == g->n);
    CHECK(back->identity == g->identity);
    CHECK(back->mul == g->mul);
    CHECK(back->labels == g->labels);
    CHECK(back->name == g->name);
    // byte-identical re-export
    CHECK(group_to_json(*back).dump(2) == j.dump(2));
}

TEST_CASE("group files survive the disk") {
    auto g = make_group(spec_dicyclic(3));
    const std::string path = "tmp_q12_group.json";
    save_group_file(*g, path);
    auto back = load_group_file(path);
    CHECK(back->mul == g->mul);
    CHECK(load_group_arg(path)->n == 12);
    std::remove(path.c_str());
    CHECK(load_group_arg("dicyclic(3)")->n == 12);  // falls back to the spec grammar
    CHECK_THROWS_AS(load_group_file("no_such_file.json"), input_error);
    CHECK_THROWS_AS(load_group_arg("gibberish(1)"), input_error);
}

TEST_CASE("group file validation") {
    auto g = make_group(spec_cyclic(3));
    Json j = group_to_json(*g);

    Json missing = j;
    missing.erase("mul");
    CHECK_THROWS_WITH_AS(group_from_json(missing), doctest::Contains("missing field"),
                         input_error);

    Json schema = j;
    schema["schema"] = 2;
    CHECK_THROWS_WITH_AS(group_from_json(schema), doctest::Contains("unsupported schema"),
                         input_error);

    Json range = j;
    range["mul"][0][1] = 7;
    CHECK_THROWS_WITH_AS(group_from_json(range), doctest::Contains("out of range"),
                         input_error);

    Json shape = j;
    shape["mul"] = {{0, 1}, {1, 0}};
    CHECK_THROWS_WITH_AS(group_from_json(shape), doctest::Contains("order x order"),
                         input_error);

    // a non-group table: associativity broken by swapping two entries
    Json broken = j;
    broken["mul"][1][1] = 1;
    CHECK_THROWS_AS(group_from_json(broken), input_error);
}

TEST_CASE("design files round-trip bit-exactly") {
    auto g = make_group(spec_cyclic(7));
    auto inc = development(*g, {1, 2, 4});
    Json j = design_to_json(inc);
    CHECK(j["points"] == 7);
    CHECK(j["blocks"].size() == 7);
    auto back = design_from_json(j);
    CHECK(design_to_json(back).dump(2) == j.dump(2));

    // blocks come out in sorted-lexicographic order no matter the input order
    auto shuffled = make_incidence(4, {{2, 3}, {0, 1}, {1, 2}});
    Json js = design_to_json(shuffled);
    CHECK(js["blocks"] == Json({{0, 1}, {1, 2}, {2, 3}}));

    Json bad = j;
    bad["blocks"][0] = {0, 99};
    CHECK_THROWS_WITH_AS(design_from_json(bad), doctest::Contains("out of range"),
                         input_error);
    CHECK_THROWS_WITH_AS(design_from_json(Json::array()), doctest::Contains("object"),
                         input_error);
}

TEST_CASE("intersection array strings parse") {
    auto a = parse_intersection_array("{3,2,2;1,1,3}");
    CHECK(a.d == 3);
    CHECK(a.b == std::vector<long long>{3, 2, 2});
    CHECK(a.c == std::vector<long long>{1, 1, 3});
    CHECK(a.to_string() == "{3,2,2;1,1,3}");
    auto b = parse_intersection_array(" 12,11,8,1 ; 1,4,11,12 ");
    CHECK(b.d == 4);
    CHECK(b.k() == 12);
    CHECK_THROWS_WITH_AS(parse_intersection_array("3,2,2"), doctest::Contains("expected"),
                         input_error);
    CHECK_THROWS_WITH_AS(parse_intersection_array("{3,x;1,1}"),
                         doctest::Contains("bad entry"), input_error);
    CHECK_THROWS_WITH_AS(parse_intersection_array("{3,2;1}"),
                         doctest::Contains("equally many"), input_error);
}

TEST_CASE("graph reports carry the certification data") {
    // incidence graph of the development of {1,2,4} in Z7, as a Cayley graph
    auto g = make_group(spec_dihedral(7));
    auto cg = build_cayley(g, parse_element_set(*g, "s,s*r,s*r^3"));
    Json j = graph_report(cg);
    CHECK(j["order"] == 14);
    CHECK(j["valency"] == 3);
    CHECK(j["connected"] == true);
    CHECK(j["bipartite"] == true);
    CHECK(j["girth"] == 6);
    CHECK(j["intersection_array"]["display"] == "{3,2,2;1,1,3}");
    CHECK(j["annihilation"]["theta_squared"] == 2);
    CHECK(j["annihilation"]["zero"] == true);
    CHECK(j["antipodal"] == false);

    // a twin pair blocks distance-regularity and is named in the report
    auto q12 = make_group(spec_dicyclic(3));
    Json t = graph_report(build_cayley(q12, parse_element_set(*q12, "b,b*a,b*a^3,b*a^4")));
    CHECK(t["intersection_array"].is_null());
    CHECK(t["twin_vertices"] == Json({0, 3}));

    // diameter-4 double cover: spectrum {±12, ±√12, 0}
    auto s = suetake();
    auto bridge = bridge_construct_dih(s.group, s.d);
    Json u = graph_report(bridge.cayley);
    CHECK(u["intersection_array"]["display"] == "{12,11,8,1;1,4,11,12}");
    CHECK(u["annihilation"]["theta_squared"] == 12);
    CHECK(u["annihilation"]["zero"] == true);
    CHECK(u["antipodal"] == true);
}

TEST_CASE("bridge and catalog reports serialize") {
    auto g = make_group(spec_dihedral(7));
    auto bw = bridge_extract(build_cayley(g, parse_element_set(*g, "s,s*r,s*r^3")));
    Json j = bridge_to_json(bw);
    CHECK(j["family"] == "difference_set");
    CHECK(j["parameters"]["n"] == 7);
    CHECK(j["parameters"]["k"] == 3);
    CHECK(j["parameters"]["mu"] == 1);
    CHECK(j["inverse_law"] == true);
    CHECK(j["part_order"] == 7);

    Json c = catalog_to_json(catalog_run("projective-plane-2"));
    CHECK(c["ok"] == true);
    CHECK(c["name"] == "projective-plane-2");
    CHECK(c["checks"].is_array());
    CHECK(c["checks"].size() >= 4);
}
