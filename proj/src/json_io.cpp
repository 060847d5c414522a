#include "drg/json_io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace drg {

// ------------------------------------------------------------- group files ----

Json group_to_json(const GroupTable& g) {
    Json j;
    j["schema"] = 1;
    j["name"] = g.name;
    j["order"] = g.n;
    j["identity"] = g.identity;
    Json rows = Json::array();
    for (int a = 0; a < g.n; ++a) {
        Json row = Json::array();
        for (int b = 0; b < g.n; ++b) row.push_back(g.op(a, b));
        rows.push_back(std::move(row));
    }
    j["mul"] = std::move(rows);
    j["labels"] = g.labels;
    return j;
}

GroupPtr group_from_json(const Json& j) {
    if (!j.is_object()) throw input_error("group file: expected a JSON object");
    if (j.contains("schema") && j["schema"] != 1)
        throw input_error("group file: unsupported schema " + j["schema"].dump());
    for (const char* key : {"order", "identity", "mul"})
        if (!j.contains(key))
            throw input_error(std::string("group file: missing field '") + key + "'");
    GroupTable t;
    t.n = j["order"].get<int>();
    if (t.n <= 0 || t.n > 100000) throw input_error("group file: bad order");
    t.identity = j["identity"].get<int>();
    const Json& rows = j["mul"];
    if (!rows.is_array() || (int)rows.size() != t.n)
        throw input_error("group file: mul must be an order x order array");
    t.mul.reserve((size_t)t.n * t.n);
    for (const Json& row : rows) {
        if (!row.is_array() || (int)row.size() != t.n)
            throw input_error("group file: mul must be an order x order array");
        for (const Json& v : row) {
            int x = v.get<int>();
            if (x < 0 || x >= t.n)
                throw input_error("group file: mul entry " + std::to_string(x) +
                                  " out of range");
            t.mul.push_back(x);
        }
    }
    if (j.contains("labels")) t.labels = j["labels"].get<std::vector<std::string>>();
    if (j.contains("name")) t.name = j["name"].get<std::string>();
    try {
        return make_group_from_table(std::move(t));
    } catch (const std::exception& e) {
        throw input_error(std::string("group file: ") + e.what());
    }
}

GroupPtr load_group_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open group file: " + path);
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw input_error("group file " + path + ": " + e.what());
    }
    return group_from_json(j);
}

void save_group_file(const GroupTable& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write group file: " + path);
    out << group_to_json(g).dump(2) << "\n";
}

// ------------------------------------------------------------ design files ----

Json design_to_json(const IncidenceStructure& inc) {
    Json j;
    j["schema"] = 1;
    j["points"] = inc.points;
    auto blocks = inc.blocks;
    std::sort(blocks.begin(), blocks.end());
    j["blocks"] = blocks;
    if (!inc.name.empty()) j["name"] = inc.name;
    return j;
}

IncidenceStructure design_from_json(const Json& j) {
    if (!j.is_object()) throw input_error("design file: expected a JSON object");
    if (j.contains("schema") && j["schema"] != 1)
        throw input_error("design file: unsupported schema " + j["schema"].dump());
    if (!j.contains("points") || !j.contains("blocks"))
        throw input_error("design file: needs 'points' and 'blocks'");
    int points = j["points"].get<int>();
    auto blocks = j["blocks"].get<std::vector<std::vector<int>>>();
    std::string name = j.contains("name") ? j["name"].get<std::string>() : "";
    try {
        return make_incidence(points, std::move(blocks), std::move(name));
    } catch (const std::exception& e) {
        throw input_error(std::string("design file: ") + e.what());
    }
}

// -------------------------------------------------------------- text input ----

namespace {

bool all_digits(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c); });
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

}  // namespace

GroupPtr load_group_arg(const std::string& arg, bool allow_large) {
    if (std::ifstream probe(arg); probe.good()) return load_group_file(arg);
    return make_group(parse_group_spec(arg), allow_large);
}

IntersectionArray parse_intersection_array(const std::string& text) {
    std::string s;
    for (char c : text)
        if (!std::isspace((unsigned char)c) && c != '{' && c != '}') s += c;
    auto halves = split(s, ';');
    if (halves.size() != 2)
        throw input_error("intersection array '" + text +
                          "': expected \"{b0,..;c1,..}\"");
    IntersectionArray a;
    for (int side = 0; side < 2; ++side) {
        for (const std::string& tok : split(halves[side], ',')) {
            if (!all_digits(tok))
                throw input_error("intersection array '" + text + "': bad entry '" +
                                  tok + "'");
            (side == 0 ? a.b : a.c).push_back(std::stoll(tok));
        }
    }
    a.d = (int)a.b.size();
    if (a.b.empty() || a.c.size() != a.b.size())
        throw input_error("intersection array '" + text +
                          "': need equally many b and c entries");
    return a;
}

// ----------------------------------------------------------------- reports ----

Json array_to_json(const IntersectionArray& a) {
    Json j;
    j["d"] = a.d;
    j["b"] = a.b;
    j["c"] = a.c;
    j["display"] = a.to_string();
    return j;
}

namespace {

// bipartite distance-regular graphs of diameter 3 or 4 have spectrum
// {±k, ±θ, (0)} with θ² = Σ bᵢcᵢ₊₁ − k²; verified exactly
Json annihilation_report(const Graph& g, const IntersectionArray& a) {
    if (a.d != 3 && a.d != 4) return nullptr;
    long long theta2 = -(a.k() * a.k());
    for (int i = 0; i < a.d; ++i) theta2 += a.b[i] * a.c[i];
    std::vector<MatrixFactor> factors;
    std::ostringstream name;
    if (a.d == 4) {
        factors.push_back({1, 0});
        name << "A";
    }
    factors.push_back({2, a.k() * a.k()});
    factors.push_back({2, theta2});
    name << "(A^2-" << a.k() * a.k() << "I)(A^2-" << theta2 << "I)";
    Json j;
    j["polynomial"] = name.str();
    j["theta_squared"] = theta2;
    j["zero"] = annihilation_check(g, factors);
    return j;
}

}  // namespace

Json graph_report(const CayleyGraph& cg, bool all_pairs) {
    Json j;
    j["schema"] = 1;
    j["group"] = cg.group->name;
    j["order"] = cg.graph.n;
    j["valency"] = (long long)cg.connection_set.size();
    j["connection_set"] = cg.connection_set;
    j["connected"] = cg.connected;
    auto two = bipartition(cg.graph);
    j["bipartite"] = two.has_value();
    int gi = girth(cg.graph);
    j["girth"] = gi;
    j["girth_capped"] = gi == girth_cap_sentinel;
    std::string witness;
    auto arr = intersection_array(cg.graph, all_pairs, &witness);
    if (arr) {
        j["intersection_array"] = array_to_json(*arr);
        auto cls = antipodal_classes(cg.graph, arr->d);
        j["antipodal"] = cls.has_value();
        if (two) j["annihilation"] = annihilation_report(cg.graph, *arr);
    } else {
        j["intersection_array"] = nullptr;
        j["witness"] = witness;
        if (auto twins = has_twin_vertices(cg.graph))
            j["twin_vertices"] = {twins->first, twins->second};
    }
    return j;
}

Json catalog_to_json(const CatalogReport& r) {
    Json j;
    j["schema"] = 1;
    j["name"] = r.name;
    j["group"] = r.group_name;
    j["set"] = r.set;
    j["ok"] = r.ok();
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json cj;
        cj["label"] = c.label;
        cj["ok"] = c.ok;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    return j;
}

Json bridge_to_json(const BridgeWitness& w) {
    Json j;
    j["schema"] = 1;
    j["group"] = w.G->name;
    j["part_order"] = w.part.order();
    j["a"] = w.a;
    j["connection_set"] = w.S;
    j["extracted_set"] = w.D;
    j["inverse_law"] = w.inverse_law;
    j["intersection_array"] = array_to_json(w.array);
    j["antipodal"] = w.antipodal;
    j["family"] = family_name(w.family);
    Json p;
    if (w.ds) {
        p["n"] = w.ds->n;
        p["k"] = w.ds->k;
        p["mu"] = w.ds->mu;
        p["trivial"] = w.ds->trivial;
    }
    if (w.pgds) {
        p["n"] = w.pgds->n;
        p["k"] = w.pgds->k;
        p["alpha"] = w.pgds->alpha;
        p["beta"] = w.pgds->beta;
    }
    if (w.rds) {
        p["m"] = w.rds->m;
        p["r"] = w.rds->r;
        p["k"] = w.rds->k;
        p["mu"] = w.rds->mu;
    }
    j["parameters"] = std::move(p);
    if (w.forbidden) j["forbidden_subgroup"] = w.forbidden->elements;
    j["other_representatives"] = w.other_reps;
    return j;
}

}  // namespace drg
