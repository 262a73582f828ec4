#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "profile_lab/errors.hpp"

namespace plab {

// Finite simple undirected graph. Vertices are 0..n-1; edges are stored as
// sorted (u,v) pairs with u < v, lexicographically ordered and duplicate-free.
// Instances are immutable after construction; all operations below are pure.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    long edge_count() const { return static_cast<long>(edges.size()); }
    std::vector<int> degrees() const;
    bool has_edge(int u, int v) const;
    bool operator==(const Graph&) const = default;
};

// k-uniform hypergraph. Each edge is a sorted k-set; the edge list is sorted
// lexicographically and duplicate-free.
struct Hypergraph {
    int n = 0;
    int k = 2;
    std::vector<std::vector<int>> edges;

    std::vector<long> degrees() const;
    bool operator==(const Hypergraph&) const = default;
};

// Verification report for (n,d,lambda)-style graphs.
struct NdLambdaReport {
    long n = 0;
    std::optional<long> regular_degree;
    bool triangle_free = false;
    double lambda2 = 0.0; // second-largest |eigenvalue| of the adjacency matrix
};

// Validating constructors; throw DomainError(ParseError/InvalidSize) on bad input.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);
Hypergraph make_hypergraph(int n, int k, std::vector<std::vector<int>> edges);

// --- constructions ---------------------------------------------------------

Graph complete_graph(int m);          // K_m, m >= 1
Graph cycle_graph(int c);             // C_c, c >= 3

// Replace every edge by a clique of size q (q-2 fresh vertices per edge).
// Original vertices keep their indices; new vertices are appended in
// (edge-sorted, branch-index) order so outputs are byte-reproducible.
Graph q_ify(const Graph& g, int q);

Graph necklace_graph(int c, int q);   // q_ify(cycle_graph(c), q)

// k-uniform hyperstar with b branches meeting exactly in vertex 0.
Hypergraph hyperstar(int k, int b);

Graph disjoint_union(std::span<const Graph> parts);
Graph add_isolated_vertices(const Graph& g, int t);

// View a graph as a 2-uniform hypergraph.
Hypergraph as_hypergraph(const Graph& g);

// --- small structural helpers ---------------------------------------------

// Row-of-words adjacency bitset, built once per graph where inner loops need it.
struct AdjacencyBitset {
    int n = 0;
    int words = 0;
    std::vector<std::uint64_t> bits;

    explicit AdjacencyBitset(const Graph& g);
    const std::uint64_t* row(int v) const { return bits.data() + static_cast<std::size_t>(v) * words; }
    bool test(int u, int v) const { return (row(u)[v >> 6] >> (v & 63)) & 1u; }
};

long count_triangles(const Graph& g);     // exact
bool is_connected(const Graph& g);
int clique_number(const Graph& g);        // exact branch-and-bound, n <= 64 only

// --- serialization ----------------------------------------------------------

// graph6, bit-exact per the de-facto standard (6-bit chunks, offset 63,
// upper-triangle column order). Supports n <= 258047.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& line);

// One JSON object per line: {"n":.., "k":.., "edges":[[..],..]} with edges
// sorted ascending internally and lexicographically across the list.
std::string to_hypergraph_json(const Hypergraph& h);
Hypergraph from_hypergraph_json(const std::string& line);

} // namespace plab
