// graph.hpp -- finite simple graphs as per-vertex adjacency bitsets,
// plus the combinatorial invariants (matchings, independent sets) and
// structural predicates used throughout the project.
#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace regdeg {

// Vertex subsets of a graph on at most 62 vertices.
using VertexSet = std::uint64_t;

inline constexpr int kMaxVertices = 62;  // graph6 single-byte order limit

inline VertexSet vs_bit(int v) { return VertexSet{1} << v; }
inline bool vs_contains(VertexSet s, int v) { return (s >> v) & 1; }
inline VertexSet vs_full(int n) {
    return n == 0 ? 0 : (~VertexSet{0} >> (64 - n));
}

// Iterate set bits in ascending order.
template <class F>
inline void vs_for_each(VertexSet s, F&& f) {
    while (s) {
        int v = __builtin_ctzll(s);
        f(v);
        s &= s - 1;
    }
}

// Simple undirected graph, vertices 0..n-1. adj[v] never contains v and
// adjacency is kept symmetric; all mutation goes through add_edge.
struct Graph {
    int n = 0;
    std::vector<VertexSet> adj;

    Graph() = default;
    explicit Graph(int n_vertices);

    void add_edge(int u, int v);
    bool has_edge(int u, int v) const { return vs_contains(adj[u], v); }
    int degree(int v) const { return __builtin_popcountll(adj[v]); }
    long long edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // sorted (u < v)

    bool operator==(const Graph&) const = default;
};

// Build from an explicit edge list; duplicate edges collapse, loops and
// out-of-range endpoints are rejected.
Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& edges);

bool is_connected(const Graph& g);

// G1 followed by G2 with G2's vertex labels shifted by G1.n.
Graph disjoint_union(const Graph& g1, const Graph& g2);

// S-suspension: one new vertex joined to every vertex not in S.
// S must be an independent set (may be empty).
Graph s_suspension(const Graph& g, VertexSet s);

bool is_independent_set(const Graph& g, VertexSet s);

// All independent sets of g as bitmasks, ascending. Requires n <= 20.
std::vector<std::uint32_t> independent_sets(const Graph& g);

// Maximum independent set size (= dim R/I(G)); branch and bound, any n.
int independence_number(const Graph& g);

// The lexicographically smallest independent set of size exactly k
// (smallest as a sorted vertex list). Throws if k exceeds the
// independence number.
VertexSet max_independent_set_below(const Graph& g, int k);

int matching_number(const Graph& g);
int induced_matching_number(const Graph& g);

// Star graph K_{1,k}: paths of length 1 joined at a common vertex (k >= 1).
bool is_star(const Graph& g);
// Star triangle: k >= 1 triangles joined at a common vertex.
bool is_star_triangle(const Graph& g);

}  // namespace regdeg
