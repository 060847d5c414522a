// drgtool: command-line front end over the drg library. Every verdict it
// prints is produced by a library-level check; the tool only parses, calls,
// and serializes. Exit codes: 0 verified/found, 1 falsified/empty, 2 bad
// input or usage.
#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>

#include "drg/json_io.hpp"
#include "drg/search.hpp"

using namespace drg;

namespace {

void emit(const Json& j) { std::cout << j.dump(2) << "\n"; }

void write_dot(const CayleyGraph& cg, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw input_error("cannot write dot file: " + path);
    out << to_dot(cg.graph, &cg.group->labels);
}

int max_element_order(const GroupTable& g) {
    int m = 1;
    for (int x = 0; x < g.n; ++x) m = std::max(m, element_order(g, x));
    return m;
}

double round9(double x) { return std::round(x * 1e9) / 1e9; }

struct Opts {
    std::string group, set, spec, file, out, dot, forbidden, array;
    std::string mode = "report";
    std::string kind = "ds";
    bool info = false, allow_large = false, certify = false, canonical = true;
    int k = -1, jobs = 1;
    long long mu = -1, alpha = -1, beta = -1, limit = -1, node_budget = 1LL << 30;
};

GroupPtr group_of(const Opts& o) {
    if (o.group.empty()) throw input_error("--group is required");
    return load_group_arg(o.group, o.allow_large);
}

int run_group(const Opts& o) {
    if (o.spec.empty() == o.file.empty())
        throw input_error("group: give exactly one of --spec or --file");
    GroupPtr g = o.spec.empty() ? load_group_file(o.file)
                                : make_group(parse_group_spec(o.spec), o.allow_large);
    if (!o.out.empty()) save_group_file(*g, o.out);
    if (o.info || o.out.empty()) {
        Json j;
        j["schema"] = 1;
        j["name"] = g->name;
        j["order"] = g->n;
        j["identity"] = g->identity;
        j["abelian"] = is_abelian(*g);
        j["involutions"] = (long long)involutions(*g).size();
        j["max_element_order"] = max_element_order(*g);
        j["labels"] = g->labels;
        emit(j);
    }
    return 0;
}

int run_cayley(const Opts& o) {
    GroupPtr g = group_of(o);
    auto cg = build_cayley(g, parse_element_set(*g, o.set));
    Json rep = graph_report(cg, /*all_pairs=*/true);
    if (!o.dot.empty()) write_dot(cg, o.dot);
    emit(rep);
    if (o.mode == "check")
        return rep["connected"] == true && rep["bipartite"] == true &&
                       !rep["intersection_array"].is_null()
                   ? 0
                   : 1;
    return 0;
}

int run_diffset(const Opts& o) {
    GroupPtr g = group_of(o);
    auto d = parse_element_set(*g, o.set);
    auto pr = difference_profile(g, d);
    Json j;
    j["schema"] = 1;
    j["group"] = g->name;
    j["set"] = d;
    j["kind"] = o.kind;
    bool verified = false;
    if (o.kind == "ds") {
        if (auto p = is_difference_set(pr)) {
            verified = true;
            j["parameters"] = {{"n", p->n}, {"k", p->k}, {"mu", p->mu}};
            j["trivial"] = p->trivial;
        } else {
            // name the first two differing representation counts
            long long lo = -1, hi = -1;
            int lo_at = -1, hi_at = -1;
            for (int x = 0; x < g->n; ++x) {
                if (x == g->identity) continue;
                if (lo < 0 || pr.diff_counts[x] < lo) lo = pr.diff_counts[x], lo_at = x;
                if (hi < 0 || pr.diff_counts[x] > hi) hi = pr.diff_counts[x], hi_at = x;
            }
            j["witness"] = "element " + g->label(hi_at) + " is covered " +
                           std::to_string(hi) + " times but " + g->label(lo_at) +
                           " only " + std::to_string(lo);
        }
    } else if (o.kind == "rds") {
        Subgroup n = [&] {
            if (!o.forbidden.empty())
                return make_subgroup(g, parse_element_set(*g, o.forbidden));
            auto scan = find_forbidden_subgroup(pr);
            if (!scan.subgroup)
                throw input_error("no forbidden subgroup found: " + scan.witness);
            return *scan.subgroup;
        }();
        j["forbidden_subgroup"] = n.elements;
        if (auto p = is_relative_difference_set(pr, n)) {
            verified = true;
            j["parameters"] = {{"m", p->m}, {"r", p->r}, {"k", p->k}, {"mu", p->mu}};
            j["symmetric"] = is_symmetric_rds(pr, n).symmetric;
        } else {
            j["witness"] = "difference counts are not (0 on N, constant off N)";
        }
    } else if (o.kind == "pgds") {
        if (auto p = is_partial_geometric_ds(pr)) {
            verified = true;
            j["parameters"] = {
                {"n", p->n}, {"k", p->k}, {"alpha", p->alpha}, {"beta", p->beta}};
            if (o.mu >= 0) j["mu_geometric"] = is_partial_mu_geometric_ds(pr, o.mu);
        } else {
            j["witness"] = "triple counts are not two-valued in the required pattern";
        }
    } else {
        throw input_error("diffset verify: --kind must be ds, rds, or pgds");
    }
    j["verified"] = verified;
    emit(j);
    return verified ? 0 : 1;
}

int run_develop(const Opts& o) {
    GroupPtr g = group_of(o);
    auto d = parse_element_set(*g, o.set);
    auto inc = development(*g, d);
    Json j;
    j["schema"] = 1;
    j["points"] = inc.points;
    j["blocks"] = (long long)inc.blocks.size();
    if (auto s = is_symmetric_2_design(inc))
        j["symmetric_2_design"] = {{"n", s->n}, {"k", s->k}, {"mu", s->mu}};
    else
        j["symmetric_2_design"] = nullptr;
    if (auto p = is_partial_geometric(inc))
        j["partial_geometric"] = {
            {"n", p->n}, {"k", p->k}, {"alpha", p->alpha}, {"beta", p->beta}};
    else
        j["partial_geometric"] = nullptr;
    if (auto t = is_symmetric_transversal(inc))
        j["symmetric_transversal"] = {{"mu", t->mu}, {"r", t->r}};
    else
        j["symmetric_transversal"] = nullptr;
    if (!o.out.empty()) {
        std::ofstream out(o.out);
        if (!out) throw input_error("cannot write design file: " + o.out);
        out << design_to_json(inc).dump(2) << "\n";
    }
    emit(j);
    return 0;
}

int run_bridge_extract(const Opts& o) {
    GroupPtr g = group_of(o);
    auto cg = build_cayley(g, parse_element_set(*g, o.set));
    try {
        emit(bridge_to_json(bridge_extract(cg)));
        return 0;
    } catch (const input_error& e) {
        Json j;
        j["schema"] = 1;
        j["verified"] = false;
        j["reason"] = e.what();
        emit(j);
        return 1;
    }
}

int run_bridge_construct(const Opts& o) {
    GroupPtr h = group_of(o);
    auto d = parse_element_set(*h, o.set);
    auto b = bridge_construct_dih(h, d);
    Json j;
    j["schema"] = 1;
    j["description"] = b.description;
    j["group"] = b.cayley.group->name;
    j["order"] = b.cayley.graph.n;
    j["connection_set"] = b.cayley.connection_set;
    j["map_verified"] =
        verify_graph_isomorphism(incidence_graph(b.dev), b.cayley.graph, b.map);
    auto arr = intersection_array(b.cayley.graph, /*all_pairs=*/true);
    j["intersection_array"] = arr ? array_to_json(*arr) : Json(nullptr);
    j["design"] = design_to_json(b.dev);
    if (!o.dot.empty()) write_dot(b.cayley, o.dot);
    emit(j);
    return 0;
}

int run_spectrum(const Opts& o) {
    GroupPtr g = group_of(o);
    auto cg = build_cayley(g, parse_element_set(*g, o.set));
    Json j = graph_report(cg, /*all_pairs=*/true);
    j["trace_a2"] = trace_a2(cg.graph);
    if (max_element_order(*g) == g->n) {
        auto spec = circulant_eigenvalues(g->n, cg.connection_set);
        Json c;
        c["parseval_ok"] = spec.parseval_ok;
        Json vals = Json::array();
        for (const auto& l : spec.lambda)
            vals.push_back({round9(l.real()), round9(l.imag())});
        c["eigenvalues"] = std::move(vals);
        j["circulant"] = std::move(c);
    }
    emit(j);
    return 0;
}

int run_search(const Opts& o) {
    SearchTask task;
    task.group = group_of(o);
    task.allow_large = o.allow_large;
    task.jobs = o.jobs;
    task.canonical = o.canonical;
    task.max_solutions = o.limit;
    task.max_nodes = o.node_budget;
    if (o.mode == "ds") {
        if (o.k < 0 || o.mu < 0) throw input_error("search ds: needs --k and --mu");
        task.target = DSTarget{o.k, o.mu};
    } else if (o.mode == "rds") {
        if (o.k < 0 || o.mu < 0) throw input_error("search rds: needs --k and --mu");
        if (o.forbidden.empty()) throw input_error("search rds: needs --forbidden");
        task.target = RDSTarget{
            make_subgroup(task.group, parse_element_set(*task.group, o.forbidden)),
            o.k, o.mu};
    } else if (o.mode == "pgds") {
        if (o.k < 0 || o.alpha < 0 || o.beta < 0)
            throw input_error("search pgds: needs --k, --alpha and --beta");
        task.target = PGDSTarget{o.k, o.alpha, o.beta};
    } else {
        if (o.array.empty()) throw input_error("search connset: needs --array");
        task.target = ConnSetTarget{parse_intersection_array(o.array)};
    }
    if (o.certify) {
        auto cert = nonexistence_certificate(task);
        Json j;
        j["schema"] = 1;
        j["certified"] = cert.certified;
        j["reason"] = cert.reason;
        emit(j);
        return cert.certified ? 0 : 1;
    }
    auto out = search(task);
    for (const auto& s : out.solutions) {
        Json line;
        line["set"] = s;
        std::cout << line.dump() << "\n";
    }
    Json summary;
    summary["schema"] = 1;
    summary["count"] = (long long)out.solutions.size();
    summary["complete"] = out.complete;
    std::cout << summary.dump() << "\n";
    return out.solutions.empty() ? 1 : 0;
}

int run_catalog_list() {
    Json j = Json::array();
    for (const auto& n : catalog_names()) j.push_back(n);
    emit(j);
    return 0;
}

int run_catalog_run(const std::string& name) {
    auto rep = catalog_run(name);
    emit(catalog_to_json(rep));
    return rep.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact toolkit for Cayley graphs, designs, and difference sets"};
    app.require_subcommand(1);
    Opts o;
    int rc = 0;

    auto* group = app.add_subcommand("group", "build a group, print facts, save it");
    group->add_option("--spec", o.spec, "constructor, e.g. dihedral(6)");
    group->add_option("--file", o.file, "group JSON file");
    group->add_flag("--info", o.info, "print the facts report");
    group->add_option("--out", o.out, "write the group as JSON");
    group->add_flag("--allow-large", o.allow_large, "lift the default order guard");
    group->callback([&] { rc = run_group(o); });

    auto* cayley = app.add_subcommand("cayley", "build and certify a Cayley graph");
    cayley->add_option("mode", o.mode, "report (default) or check")
        ->check(CLI::IsMember({"report", "check"}));
    cayley->add_option("--group", o.group, "group file or spec")->required();
    cayley->add_option("--set", o.set, "connection set")->required();
    cayley->add_option("--dot", o.dot, "write DOT to this path");
    cayley->add_flag("--allow-large", o.allow_large);
    cayley->callback([&] { rc = run_cayley(o); });

    auto* diffset = app.add_subcommand("diffset", "verify difference-set families");
    auto* verify = diffset->add_subcommand("verify", "check a set against a family");
    diffset->require_subcommand(1);
    verify->add_option("--group", o.group)->required();
    verify->add_option("--set", o.set)->required();
    verify->add_option("--kind", o.kind, "ds, rds, or pgds");
    verify->add_option("--forbidden", o.forbidden, "forbidden subgroup (rds)");
    verify->add_option("--mu", o.mu, "also test the 0-or-mu condition (pgds)");
    verify->callback([&] { rc = run_diffset(o); });

    auto* develop = app.add_subcommand("develop", "develop a set into a design");
    develop->add_option("--group", o.group)->required();
    develop->add_option("--set", o.set)->required();
    develop->add_option("--out", o.out, "write the design as JSON");
    develop->callback([&] { rc = run_develop(o); });

    auto* bridge = app.add_subcommand("bridge", "difference set <-> bipartite graph");
    bridge->require_subcommand(1);
    auto* extract = bridge->add_subcommand("extract", "decode a Cayley graph");
    extract->add_option("--group", o.group)->required();
    extract->add_option("--set", o.set)->required();
    extract->callback([&] { rc = run_bridge_extract(o); });
    auto* construct =
        bridge->add_subcommand("construct", "incidence graph of a development");
    construct->add_option("--group", o.group, "the abelian point group")->required();
    construct->add_option("--set", o.set)->required();
    construct->add_option("--dot", o.dot);
    construct->callback([&] { rc = run_bridge_construct(o); });

    auto* spectrum = app.add_subcommand("spectrum", "exact spectral certificates");
    spectrum->add_option("--group", o.group)->required();
    spectrum->add_option("--set", o.set)->required();
    spectrum->callback([&] { rc = run_spectrum(o); });

    auto* search = app.add_subcommand("search", "exhaustive set searches");
    search->add_option("family", o.mode, "ds, rds, pgds, or connset")
        ->required()
        ->check(CLI::IsMember({"ds", "rds", "pgds", "connset"}));
    search->add_option("--group", o.group)->required();
    search->add_option("--k", o.k, "set size");
    search->add_option("--mu", o.mu);
    search->add_option("--alpha", o.alpha);
    search->add_option("--beta", o.beta);
    search->add_option("--forbidden", o.forbidden, "forbidden subgroup (rds)");
    search->add_option("--array", o.array, "target array (connset)");
    search->add_option("--limit", o.limit, "stop after this many solutions");
    search->add_option("--jobs", o.jobs, "worker threads");
    search->add_option("--node-budget", o.node_budget);
    search->add_flag("!--no-canonical", o.canonical, "emit all translates");
    search->add_flag("--allow-large", o.allow_large);
    search->add_flag("--certify", o.certify, "emit a nonexistence certificate");
    search->callback([&] { rc = run_search(o); });

    auto* catalog = app.add_subcommand("catalog", "self-verifying example registry");
    catalog->require_subcommand(1);
    auto* list = catalog->add_subcommand("list", "names of all entries");
    list->callback([&] { rc = run_catalog_list(); });
    auto* run = catalog->add_subcommand("run", "run one entry's checks");
    std::string entry_name;
    run->add_option("name", entry_name)->required();
    run->callback([&] { rc = run_catalog_run(entry_name); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
