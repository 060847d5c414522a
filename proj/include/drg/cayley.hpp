#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "drg/group.hpp"

namespace drg {

// Plain undirected graph on vertices 0..n-1, adjacency as sorted neighbor
// lists. No self loops, no multi-edges.
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::string name;

    int degree(int v) const { return (int)adj[v].size(); }
    bool has_edge(int u, int v) const;
    long long edge_count() const;
};

// Validates symmetry, index ranges, absence of loops, and sorts the lists.
Graph make_graph(int n, std::vector<std::vector<int>> adj, std::string name = "");

struct CayleyGraph {
    GroupPtr group;
    std::vector<int> connection_set;  // sorted
    Graph graph;
    bool connected = false;  // i.e. S generates G
};

// a ~ b iff a b^-1 in S. Rejects e in S and S != S^-1 (with the offending
// element named in the message).
CayleyGraph build_cayley(GroupPtr g, std::vector<int> s);

// ------------------------------------------------------------- distances ----

// BFS distances from v; -1 marks unreachable vertices.
std::vector<int> distances_from(const Graph& g, int v);

// Distance shells S_0..S_d from v. Throws input_error naming an unreachable
// vertex when the graph is disconnected.
std::vector<std::vector<int>> distance_partition(const Graph& g, int v);

bool is_connected(const Graph& g);

// Full distance matrix (BFS from every vertex); -1 for unreachable pairs.
std::vector<std::vector<int>> all_distances(const Graph& g);

// ----------------------------------------------------- distance-regularity ----

struct IntersectionArray {
    int d = 0;                // diameter
    std::vector<long long> b; // b_0 .. b_{d-1}
    std::vector<long long> c; // c_1 .. c_d  (c[i] holds c_{i+1})

    long long k() const { return b.at(0); }
    long long mu() const { return c.at(1); }  // c_2; requires d >= 2
    // shell sizes k_0..k_d via k_{i+1} = k_i b_i / c_{i+1}
    std::vector<long long> shell_sizes() const;
    std::string to_string() const;  // "{b0,..;c1,..}"
    bool operator==(const IntersectionArray&) const = default;
};

// Certifies distance-regularity and returns the array, or nullopt with a
// counterexample description in *witness. The default mode fixes one BFS
// root at `root` and checks count constancy over all second endpoints,
// which suffices for vertex-transitive graphs; all_pairs repeats the check
// from every root.
std::optional<IntersectionArray> intersection_array(const Graph& g, bool all_pairs = false,
                                                    std::string* witness = nullptr,
                                                    int root = 0);

// --------------------------------------------------------------- structure ----

// Two-coloring: (part containing `root`, other part), or nullopt with an
// odd-cycle witness (a closed walk of odd length as a vertex list).
std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartition(
    const Graph& g, int root = 0, std::vector<int>* odd_cycle = nullptr);

// Shortest cycle length, capped: any value above 12 (including acyclic)
// comes back as girth_cap_sentinel = 13, meaning ">= 13".
inline constexpr int girth_cap_sentinel = 13;
int girth(const Graph& g);

// The identity's part of a connected bipartite Cayley graph, certified to be
// a normal index-2 subgroup (a structural theorem; failure throws
// std::runtime_error as a bug sentinel).
Subgroup part_subgroup(const CayleyGraph& cg);

// Antipodal classes {u} ∪ {v : d(u,v) = d} iff "at distance d or equal" is
// an equivalence relation; classes ordered by least vertex.
std::optional<std::vector<std::vector<int>>> antipodal_classes(const Graph& g, int d);

// Cayley cross-check: S_d ∪ {e} is a subgroup whose right cosets are exactly
// the antipodal classes.
bool antipodal_subgroup_agrees(const CayleyGraph& cg, int d);

// Graph on the same vertices joining pairs at distance exactly i (empty when
// i exceeds the diameter).
Graph distance_i_graph(const Graph& g, int i);

// Subgraph induced by `vertices` in g's distance-2 graph; vertex_of maps new
// indices back to g.
struct InducedGraph {
    Graph graph;
    std::vector<int> vertex_of;
};

// Distance-2 graphs on the two parts of a connected bipartite graph (part of
// vertex `root` first).
std::pair<InducedGraph, InducedGraph> halved_graphs(const Graph& g, int root = 0);

// -------------------------------------------------------------- quotients ----

struct QuotientMatrix {
    std::vector<std::vector<int>> cells;
    // entry[i][j] = (numerator, denominator), reduced: average number of
    // neighbors in cell j over vertices of cell i
    std::vector<std::vector<std::pair<long long, long long>>> entry;
    bool equitable = false;

    // integer entry access; throws if the partition was not equitable
    long long at(int i, int j) const;
};

// Partition must cover every vertex exactly once.
QuotientMatrix quotient_matrix(const Graph& g, const std::vector<std::vector<int>>& cells);

// ---------------------------------------------------------- exact algebra ----

// One factor (A^power - c I) with power in {1, 2}.
struct MatrixFactor {
    int power = 1;
    long long c = 0;
};

// Exact test that the product of the factors (applied left to right to the
// adjacency matrix) is the zero matrix. Arbitrary-precision arithmetic.
bool annihilation_check(const Graph& g, const std::vector<MatrixFactor>& factors);

// det(A) != 0, computed exactly (fraction-free elimination over big integers).
bool is_nonsingular(const Graph& g);

// det(A - cI) == 0, computed exactly: is the integer c an eigenvalue?
bool is_integer_eigenvalue(const Graph& g, long long c);

// trace(A^2) = 2 * edge_count; exposed for spectrum reports
long long trace_a2(const Graph& g);

// -------------------------------------------------------------- circulants ----

struct CirculantSpectrum {
    std::vector<std::complex<double>> lambda;  // lambda_j = sum over c in T of w^(jc)
    std::vector<int> match;   // per-j index into `targets`, -1 if unmatched
    bool all_matched = false; // meaningful only when targets were supplied
    bool parseval_ok = false; // round(sum |lambda_j|^2) == n * |T| exactly
};

// Eigenvalues of the circulant with symbol set T under Z_n, computed with
// compensated summation; classification against `targets` uses absolute
// tolerance 1e-9 on real and imaginary parts.
CirculantSpectrum circulant_eigenvalues(int n, const std::vector<int>& t,
                                        const std::vector<double>& targets = {});

// ------------------------------------------------------------------ twins ----

// First pair (in lex order) of distinct vertices with identical neighbor
// sets, if any.
std::optional<std::pair<int, int>> has_twin_vertices(const Graph& g);

// ------------------------------------------------------------ isomorphism ----

// Backtracking isomorphism search for graphs up to 128 vertices (guarded).
// Returns a vertex bijection g1 -> g2, or nullopt after exhausting the
// search space (a non-isomorphism certificate at this scale).
std::optional<std::vector<int>> are_isomorphic_small(const Graph& g1, const Graph& g2);

// Edge-by-edge verification that `map` is an isomorphism g1 -> g2.
bool verify_graph_isomorphism(const Graph& g1, const Graph& g2, const std::vector<int>& map);

// --------------------------------------------------------------- export ----

std::string to_dot(const Graph& g, const std::vector<std::string>* labels = nullptr);

}  // namespace drg
