#include "drg/search.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <exception>
#include <functional>
#include <thread>

#include "drg/diffset.hpp"

namespace drg {

namespace {

// Arithmetic impossibility: certifiable nonexistence, as opposed to a
// malformed task.
struct infeasible_error : input_error {
    using input_error::input_error;
};

struct Atom {
    std::vector<int> elems;  // one element, or an {x, x^-1} pair
};

struct FamilyPlan {
    std::vector<Atom> atoms;
    int k = 0;                    // target element count
    std::vector<long long> cap;   // per-element difference caps, -1 unconstrained; empty: untracked
    bool track_triples = false;
    long long triple_cap = 0;
    bool canonical_filter = false;
    bool canonical_left = false;  // include left translates in the canonical pool
    std::function<bool(const std::vector<int>&)> accept;
    bool accept_must_hold = false;  // pruning is tight: a re-verification failure is a bug
};

struct Item {
    bool is_solution = false;
    std::vector<int> solution;
    std::vector<size_t> prefix;  // atom indices of a subtree root
    size_t next = 0;
    std::vector<std::vector<int>> found;
};

struct Dfs {
    const GroupTable& g;
    const FamilyPlan& plan;
    long long max_nodes;
    std::atomic<long long>& nodes;
    std::atomic<bool>& budget_stop;

    std::vector<long long> cnt, tcnt, delta;
    std::vector<int> touched;
    std::vector<int> cur;
    std::vector<size_t> atom_stack;
    std::vector<long long> suffix;  // elements available from atom i onward

    int split_depth = INT_MAX;
    std::vector<Item>* frontier = nullptr;
    std::function<void(std::vector<int>)> on_solution;
    long long solution_limit = -1;  // serial early stop
    bool limit_stop = false;

    Dfs(const GroupTable& gr, const FamilyPlan& p, long long mn, std::atomic<long long>& nd,
        std::atomic<bool>& bs)
        : g(gr), plan(p), max_nodes(mn), nodes(nd), budget_stop(bs) {
        if (!plan.cap.empty()) cnt.assign(g.n, 0);
        if (plan.track_triples) {
            tcnt.assign(g.n, 0);
            delta.assign(g.n, 0);
        }
        suffix.assign(plan.atoms.size() + 1, 0);
        for (size_t i = plan.atoms.size(); i-- > 0;)
            suffix[i] = suffix[i + 1] + (long long)plan.atoms[i].elems.size();
    }

    // net triple-count update for element e (cur must already contain e);
    // returns false when some count passes the cap on a positive update
    bool apply_triples(int e, int sgn) {
        touched.clear();
        auto acc = [&](int h, long long v) {
            if (delta[h] == 0) touched.push_back(h);
            delta[h] += v;
        };
        for (int p : cur)
            for (int q : cur) {
                acc(g.op(g.op(e, g.inv[p]), q), 1);
                acc(g.op(g.op(p, g.inv[e]), q), 1);
                acc(g.op(g.op(p, g.inv[q]), e), 1);
            }
        for (int q : cur) {
            acc(q, -2);  // (e,e,q) and (q,e,e) were each counted twice
            acc(g.op(g.op(e, g.inv[q]), e), -1);
        }
        acc(e, 1);
        bool ok = true;
        for (int h : touched) {
            tcnt[h] += sgn * delta[h];
            if (sgn > 0 && tcnt[h] > plan.triple_cap) ok = false;
            delta[h] = 0;
        }
        return ok;
    }

    bool push_one(int e) {
        bool ok = true;
        if (!plan.cap.empty())
            for (int x : cur) {
                int h1 = g.op(e, g.inv[x]);
                int h2 = g.op(x, g.inv[e]);
                if (++cnt[h1] > plan.cap[h1] && plan.cap[h1] >= 0) ok = false;
                if (++cnt[h2] > plan.cap[h2] && plan.cap[h2] >= 0) ok = false;
            }
        cur.push_back(e);
        if (plan.track_triples && !apply_triples(e, +1)) ok = false;
        return ok;
    }

    void pop_one() {
        int e = cur.back();
        if (plan.track_triples) apply_triples(e, -1);
        cur.pop_back();
        if (!plan.cap.empty())
            for (int x : cur) {
                --cnt[g.op(e, g.inv[x])];
                --cnt[g.op(x, g.inv[e])];
            }
    }

    bool push_atom(size_t i) {
        bool ok = true;
        for (int e : plan.atoms[i].elems)
            if (!push_one(e)) ok = false;
        atom_stack.push_back(i);
        return ok;
    }

    void pop_atom() {
        size_t i = atom_stack.back();
        atom_stack.pop_back();
        for (size_t j = plan.atoms[i].elems.size(); j-- > 0;) pop_one();
    }

    void emit() {
        std::vector<int> sol = cur;
        std::sort(sol.begin(), sol.end());
        if (plan.canonical_filter && sol != translate_canonical(g, sol, plan.canonical_left))
            return;
        if (plan.accept && !plan.accept(sol)) {
            if (plan.accept_must_hold)
                throw std::runtime_error(
                    "search: a count-determined solution failed re-verification (bug)");
            return;
        }
        on_solution(std::move(sol));
    }

    void dfs(size_t ai, int depth) {
        if ((int)cur.size() == plan.k) {
            emit();
            return;
        }
        if (frontier && depth == split_depth) {
            Item it;
            it.prefix = atom_stack;
            it.next = ai;
            frontier->push_back(std::move(it));
            return;
        }
        for (size_t i = ai; i < plan.atoms.size(); ++i) {
            long long need = plan.k - (long long)cur.size();
            if (suffix[i] < need) break;  // suffix shrinks: nothing later fits either
            if ((long long)plan.atoms[i].elems.size() > need) continue;
            if (nodes.load(std::memory_order_relaxed) >= max_nodes) {
                budget_stop.store(true, std::memory_order_relaxed);
                return;
            }
            nodes.fetch_add(1, std::memory_order_relaxed);
            bool ok = push_atom(i);
            if (ok) dfs(i + 1, depth + 1);
            pop_atom();
            if (budget_stop.load(std::memory_order_relaxed) || limit_stop) return;
        }
    }
};

// ---------------------------------------------------------------- planning ----

std::vector<Atom> singleton_atoms(int n) {
    std::vector<Atom> out;
    out.reserve(n);
    for (int i = 0; i < n; ++i) out.push_back(Atom{{i}});
    return out;
}

FamilyPlan make_plan(const SearchTask& task) {
    const GroupTable& g = *task.group;
    const GroupPtr& gp = task.group;
    long long n = g.n;
    FamilyPlan plan;
    plan.canonical_filter = task.canonical;

    if (const auto* t = std::get_if<DSTarget>(&task.target)) {
        if (t->k < 0 || t->k > n) throw input_error("search: k out of range");
        if (t->mu < 0) throw input_error("search: mu must be >= 0");
        if ((long long)t->k * (t->k - 1) != (n - 1) * t->mu)
            throw infeasible_error("search: difference-set arithmetic k(k-1) = (n-1)mu fails");
        plan.atoms = singleton_atoms(g.n);
        plan.k = t->k;
        plan.cap.assign(g.n, t->mu);
        plan.cap[g.identity] = -1;
        plan.canonical_left = !is_abelian(g);
        int k = t->k;
        long long mu = t->mu;
        plan.accept = [gp, k, mu](const std::vector<int>& d) {
            auto p = is_difference_set(gp, d);
            return p && p->k == k && p->mu == mu;
        };
        plan.accept_must_hold = true;
        return plan;
    }

    if (const auto* t = std::get_if<RDSTarget>(&task.target)) {
        if (t->forbidden.parent.get() != gp.get())
            throw input_error("search: forbidden subgroup has a different parent");
        long long r = t->forbidden.order();
        if (r >= n) throw input_error("search: forbidden subgroup must be proper");
        if (t->k < 0 || t->k > n) throw input_error("search: k out of range");
        if (t->mu < 1) throw input_error("search: mu must be >= 1");
        if ((long long)t->k * (t->k - 1) != t->mu * (n - r))
            throw infeasible_error(
                "search: relative-difference-set arithmetic k(k-1) = mu(n-|N|) fails");
        plan.atoms = singleton_atoms(g.n);
        plan.k = t->k;
        plan.cap.assign(g.n, t->mu);
        plan.cap[g.identity] = -1;
        for (int x : t->forbidden.elements)
            if (x != g.identity) plan.cap[x] = 0;
        // left translates conjugate N; canonicalize over right translates only
        plan.canonical_left = false;
        RDSParams expect{(int)(n / r), (int)r, t->k, t->mu};
        Subgroup forb = t->forbidden;
        plan.accept = [gp, forb, expect](const std::vector<int>& d) {
            auto p = is_relative_difference_set(difference_profile(gp, d), forb);
            return p && *p == expect;
        };
        plan.accept_must_hold = true;
        return plan;
    }

    if (const auto* t = std::get_if<PGDSTarget>(&task.target)) {
        if (t->k < 1 || t->k > n) throw input_error("search: k out of range");
        if (t->alpha < 0 || t->beta < 0)
            throw input_error("search: alpha and beta must be nonnegative");
        long long k = t->k;
        if (k * k * k != k * (2 * k - 1 + t->beta) + (n - k) * t->alpha)
            throw infeasible_error(
                "search: partial-geometric arithmetic k^3 = k(2k-1+beta) + (n-k)alpha fails");
        plan.atoms = singleton_atoms(g.n);
        plan.k = t->k;
        plan.track_triples = true;
        plan.triple_cap = std::max(t->alpha, 2 * k - 1 + t->beta);
        plan.canonical_left = !is_abelian(g);
        PGDSParams expect{(int)n, t->k, t->alpha, t->beta};
        plan.accept = [gp, expect](const std::vector<int>& d) {
            auto p = is_partial_geometric_ds(gp, d);
            return p && *p == expect;
        };
        return plan;
    }

    const auto& t = std::get<ConnSetTarget>(task.target);
    const IntersectionArray& a = t.array;
    if (a.d < 1 || (int)a.b.size() != a.d || (int)a.c.size() != a.d)
        throw input_error("search: malformed intersection array");
    if (a.c[0] != 1) throw infeasible_error("search: intersection array needs c1 = 1");
    for (int i = 0; i < a.d; ++i)
        if (a.b[i] < 1 || a.c[i] < 1)
            throw infeasible_error("search: intersection array entries must be positive");
    if (a.k() > n - 1) throw infeasible_error("search: valency exceeds the group order");
    long long total = 0;
    try {
        for (long long s : a.shell_sizes()) total += s;
    } catch (const std::exception&) {
        throw infeasible_error("search: non-integral shell sizes");
    }
    if (total != n)
        throw infeasible_error("search: shell sizes sum to " + std::to_string(total) +
                               ", not the group order");
    for (int x = 0; x < g.n; ++x) {
        if (x == g.identity || g.inv[x] < x) continue;
        Atom at{{x}};
        if (g.inv[x] != x) at.elems.push_back(g.inv[x]);
        plan.atoms.push_back(std::move(at));
    }
    plan.k = (int)a.k();
    plan.canonical_filter = false;  // connection sets have no translate symmetry
    IntersectionArray want = a;
    plan.accept = [gp, want](const std::vector<int>& s) {
        CayleyGraph cg = build_cayley(gp, s);
        auto got = intersection_array(cg.graph, /*all_pairs=*/true);
        return got && *got == want;
    };
    return plan;
}

}  // namespace

// ---------------------------------------------------------------- toplevel ----

std::vector<int> translate_canonical(const GroupTable& g, const std::vector<int>& d,
                                     bool both_sides) {
    std::vector<int> best = d;
    std::sort(best.begin(), best.end());
    std::vector<int> t(d.size());
    for (int h = 0; h < g.n; ++h) {
        for (size_t i = 0; i < d.size(); ++i) t[i] = g.op(d[i], h);
        std::sort(t.begin(), t.end());
        if (t < best) best = t;
        if (both_sides) {
            for (size_t i = 0; i < d.size(); ++i) t[i] = g.op(h, d[i]);
            std::sort(t.begin(), t.end());
            if (t < best) best = t;
        }
    }
    return best;
}

SearchOutcome search(const SearchTask& task) {
    if (!task.group) throw input_error("search: null group");
    const GroupTable& g = *task.group;
    if (g.n > 200 && !task.allow_large)
        throw input_error("search: group order " + std::to_string(g.n) +
                          " exceeds the default guard of 200");
    FamilyPlan plan = make_plan(task);

    SearchOutcome out;
    std::atomic<long long> nodes{0};
    std::atomic<bool> budget_stop{false};
    int jobs = std::max(1, task.jobs);

    if (jobs == 1) {
        Dfs dfs(g, plan, task.max_nodes, nodes, budget_stop);
        dfs.solution_limit = task.max_solutions;
        dfs.on_solution = [&](std::vector<int> s) {
            out.solutions.push_back(std::move(s));
            if (dfs.solution_limit >= 0 && (long long)out.solutions.size() >= dfs.solution_limit)
                dfs.limit_stop = true;
        };
        dfs.dfs(0, 0);
        out.nodes = nodes.load();
        out.complete = !budget_stop.load() && !dfs.limit_stop;
        return out;
    }

    // split the tree two atoms deep; workers own disjoint subtrees and the
    // merge order is the frontier order, so output does not depend on jobs
    std::vector<Item> items;
    {
        Dfs builder(g, plan, task.max_nodes, nodes, budget_stop);
        builder.split_depth = 2;
        builder.frontier = &items;
        builder.on_solution = [&](std::vector<int> s) {
            Item it;
            it.is_solution = true;
            it.solution = std::move(s);
            items.push_back(std::move(it));
        };
        builder.dfs(0, 0);
    }

    std::atomic<size_t> cursor{0};
    std::vector<std::exception_ptr> errors(jobs);
    auto worker = [&](int wid) {
        try {
            for (;;) {
                size_t i = cursor.fetch_add(1);
                if (i >= items.size()) return;
                Item& it = items[i];
                if (it.is_solution) continue;
                if (budget_stop.load(std::memory_order_relaxed)) continue;
                Dfs dfs(g, plan, task.max_nodes, nodes, budget_stop);
                for (size_t ai : it.prefix) dfs.push_atom(ai);
                dfs.on_solution = [&](std::vector<int> s) { it.found.push_back(std::move(s)); };
                dfs.dfs(it.next, 2);
            }
        } catch (...) {
            errors[wid] = std::current_exception();
            budget_stop.store(true);
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);

    for (Item& it : items) {
        if (it.is_solution)
            out.solutions.push_back(std::move(it.solution));
        else
            for (auto& s : it.found) out.solutions.push_back(std::move(s));
    }
    if (task.max_solutions >= 0 && (long long)out.solutions.size() > task.max_solutions)
        out.solutions.resize(task.max_solutions);
    out.nodes = nodes.load();
    out.complete = !budget_stop.load();
    return out;
}

NonexistenceCertificate nonexistence_certificate(const SearchTask& task) {
    NonexistenceCertificate cert;
    SearchTask full = task;
    full.max_solutions = -1;  // a certificate needs the whole space
    SearchOutcome out;
    try {
        out = search(full);
    } catch (const infeasible_error& e) {
        cert.certified = true;
        cert.nodes = 0;
        cert.reason = std::string("arithmetic: ") + e.what();
        return cert;
    }
    cert.nodes = out.nodes;
    if (!out.complete) {
        cert.certified = false;
        cert.reason = "node budget exhausted before the space was covered";
        return cert;
    }
    if (!out.solutions.empty()) {
        cert.certified = false;
        cert.reason = "solutions exist";
        return cert;
    }
    cert.certified = true;
    cert.reason = "exhausted the pruned search space";
    return cert;
}

}  // namespace drg
