// graph.hpp -- small undirected graphs (n <= 64) as adjacency bitmasks,
// with exact isomorphism search and automorphism counting by backtracking.
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace k3 {

struct Graph {
    int n = 0;
    std::vector<uint64_t> adj;   // adj[v] bit u set iff v ~ u
    std::vector<int8_t> part;    // optional bipartition labels 0/1; empty if unset

    void init(int vertices);
    void add_edge(int a, int b);
    bool has_edge(int a, int b) const { return (adj[a] >> b) & 1; }
    int degree(int v) const;
    long long edge_count() const;
};

// BFS 2-coloring; nullopt if the graph has an odd cycle. The coloring is
// canonical: vertex of lowest index in each component gets color 0.
std::optional<std::vector<int8_t>> two_coloring(const Graph& g);

bool is_connected(const Graph& g);

// Largest k such that g has no cycle shorter than k... restricted service:
// verifies girth exactly 6 for a bipartite graph (no 4-cycles, some 6-cycle).
bool has_girth_6_bipartite(const Graph& g);

// Adjacency-preserving bijection g1 -> g2, or nullopt.
std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2);

struct AutCount {
    unsigned long long total = 0;
    unsigned long long part_preserving = 0;  // w.r.t. g.part if set, else == total
};
AutCount count_automorphisms(const Graph& g);

}  // namespace k3
