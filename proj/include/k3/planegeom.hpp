// planegeom.hpp -- the projective plane over F4: points, lines, incidence,
// independent point sets, and the 42-vertex point-line incidence graph.
#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "k3/graph.hpp"

namespace k3::planegeom {

// F4 = {0, 1, a, a^2} encoded as indices 0..3 with a^2 = a + 1.
struct F4 {
    static uint8_t add(uint8_t x, uint8_t y);
    static uint8_t mul(uint8_t x, uint8_t y);
    static uint8_t inv(uint8_t x);  // throws on 0
    static const char* name(uint8_t x);
};

// Normalized homogeneous triple: first nonzero coordinate is 1.
struct ProjTriple {
    std::array<uint8_t, 3> c{};
    friend bool operator==(const ProjTriple& a, const ProjTriple& b) { return a.c == b.c; }
    friend bool operator<(const ProjTriple& a, const ProjTriple& b) { return a.c < b.c; }
    std::string to_string() const;
};
ProjTriple normalize(std::array<uint8_t, 3> c);

// All 21 points in sorted order (lines use the same coordinate triples).
const std::vector<ProjTriple>& points();

bool incident(const ProjTriple& point, const ProjTriple& line);  // sum c_i * l_i == 0

// Vertices 0..20 = points, 21..41 = lines, both in sorted triple order;
// part labels 0 for points, 1 for lines.
Graph incidence_graph();

// Unordered independent k-sets (no three collinear), 1 <= k <= 6.
// Throws std::invalid_argument outside that range.
long long independent_subsets(int k);

// Heawood graph = incidence graph of the Fano plane; test fixture.
Graph heawood_graph();

// Reference published list of the 21 points, kept verbatim (it contains one
// duplicate and omits one point); the report flags the discrepancies.
struct PointListReport {
    bool all_listed_are_points = false;
    std::vector<std::string> duplicates;
    std::vector<std::string> missing;  // enumerated points absent from the list
};
PointListReport verify_reference_point_list();

std::string incidence_csv();  // 21x21 0/1 matrix, rows = points, cols = lines

// Vertex bijection as a JSON array of label pairs [["from","to"],...].
std::string bijection_to_json(const std::vector<int>& map,
                              const std::vector<std::string>& from_labels,
                              const std::vector<std::string>& to_labels);

// Canonical vertex labels of the plane incidence graph: "P(...)" then "L(...)".
std::vector<std::string> incidence_graph_labels();

}  // namespace k3::planegeom
