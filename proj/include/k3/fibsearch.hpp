// fibsearch.hpp -- deterministic searches over the 42-curve intersection
// graph for genus-1 fibration configurations: five 4-pointed stars with 16
// sections and a 2-section, four hexagons with 18 sections, and general
// induced-subtree queries.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3/graph.hpp"

namespace k3::fibsearch {

struct FibrationConfig {
    // star fibers: [center, leaf, leaf, leaf, leaf]; hexagon fibers: the six
    // vertices in cycle order
    std::vector<std::vector<int>> fibers;
    std::vector<int> sections;
    int extra = -1;  // the 2-section for star configurations, else -1
};

// Star configuration seeded at `start` as the first fiber's center: the
// 2-section is a neighbor of every center, each fiber is its center plus the
// center's remaining neighbors, the 16 leftovers are sections meeting one
// leaf per fiber. First valid choice (by vertex order) wins.
std::optional<FibrationConfig> find_star_configuration(const Graph& g, int start);
// Independent re-validation of every adjacency condition from scratch.
bool validate_star_configuration(const Graph& g, const FibrationConfig& c,
                                 std::string* why = nullptr);

// Four vertex-disjoint induced hexagons with no edges between them; the 18
// leftover vertices are sections, each meeting every hexagon exactly once.
// A 5-regular graph then forces the sections to pair up: each section is
// adjacent to exactly one other section (degree 5 = 4 hexagon edges + 1).
std::optional<FibrationConfig> find_hexagon_configuration(const Graph& g);
bool validate_hexagon_configuration(const Graph& g, const FibrationConfig& c,
                                    std::string* why = nullptr);

// First induced subgraph isomorphic to the given tree (edge list over
// vertices 0..n-1), or nullopt. Exhaustive backtracking.
std::optional<std::vector<int>> find_induced_tree(
    const Graph& g, int tree_n, const std::vector<std::pair<int, int>>& tree_edges);

// The affine D-diagram on n+1 vertices (n >= 4): a path with a two-pronged
// fork at each end. Returns the edge list over vertices 0..n.
std::vector<std::pair<int, int>> affine_d_tree(int n);

std::string config_to_json(const FibrationConfig& c,
                           const std::vector<std::string>& labels);

}  // namespace k3::fibsearch
