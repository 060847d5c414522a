#pragma once

#include <string>
#include <variant>
#include <vector>

#include "drg/cayley.hpp"
#include "drg/group.hpp"

namespace drg {

// ------------------------------------------------------------------ tasks ----

struct DSTarget {
    int k = 0;
    long long mu = 0;
};

struct RDSTarget {
    Subgroup forbidden;  // proper subgroup of the task's group
    int k = 0;
    long long mu = 0;
};

struct PGDSTarget {
    int k = 0;
    long long alpha = 0, beta = 0;
};

// Inverse-closed connection sets S (e excluded) whose Cayley graph certifies
// exactly this intersection array.
struct ConnSetTarget {
    IntersectionArray array;
};

struct SearchTask {
    GroupPtr group;
    std::variant<DSTarget, RDSTarget, PGDSTarget, ConnSetTarget> target;
    long long max_solutions = -1;   // -1: no cap
    long long max_nodes = 1LL << 30;
    int jobs = 1;
    bool canonical = true;          // set families: emit only translate-minimal solutions
    bool allow_large = false;       // lift the |G| <= 200 guard
};

// ----------------------------------------------------------------- results ----

struct SearchOutcome {
    std::vector<std::vector<int>> solutions;  // deterministic order for fixed task parameters
    long long nodes = 0;
    bool complete = false;  // the whole pruned tree was explored (no budget/limit stop)
};

// Depth-first search in element-index order with partial-count pruning.
// Every emitted set is re-verified against the target family; a verifier
// disagreement for the count-determined families throws std::runtime_error.
// Infeasible target arithmetic (e.g. k(k-1) != (n-1)mu) is an input_error.
// With jobs > 1 the tree is split at a fixed depth into independent subtree
// tasks; output order does not depend on the worker count.
SearchOutcome search(const SearchTask& task);

struct NonexistenceCertificate {
    bool certified = false;  // the full space was explored (or the arithmetic is impossible)
    long long nodes = 0;
    std::string reason;
};

// Runs the same search and certifies emptiness. Arithmetic-infeasible tasks
// certify with zero nodes; a budget stop refuses to certify.
NonexistenceCertificate nonexistence_certificate(const SearchTask& task);

// Lexicographically smallest right translate Dh (and left translate hD when
// both_sides); the representative the canonical filter keeps. Left translates
// preserve difference-set and partial-geometric parameters but conjugate a
// relative difference set's forbidden subgroup, so RDS searches canonicalize
// over right translates only.
std::vector<int> translate_canonical(const GroupTable& g, const std::vector<int>& d,
                                     bool both_sides);

}  // namespace drg
