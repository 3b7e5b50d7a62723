// planegeom.cpp
#include "k3/planegeom.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace k3::planegeom {

namespace {
// index encoding: 0, 1, a = 2, a^2 = 3; addition is XOR-like on the F2-basis
// {1, a}: 0 <-> (0,0), 1 <-> (1,0), a <-> (0,1), a^2 <-> (1,1)
constexpr uint8_t kAdd[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
constexpr uint8_t kMul[4][4] = {{0, 0, 0, 0}, {0, 1, 2, 3}, {0, 2, 3, 1}, {0, 3, 1, 2}};
}  // namespace

uint8_t F4::add(uint8_t x, uint8_t y) { return kAdd[x][y]; }
uint8_t F4::mul(uint8_t x, uint8_t y) { return kMul[x][y]; }
uint8_t F4::inv(uint8_t x) {
    switch (x) {
        case 1: return 1;
        case 2: return 3;
        case 3: return 2;
        default: throw std::domain_error("F4::inv(0)");
    }
}
const char* F4::name(uint8_t x) {
    static const char* names[4] = {"0", "1", "a", "a2"};
    return names[x];
}

ProjTriple normalize(std::array<uint8_t, 3> c) {
    for (int i = 0; i < 3; ++i) {
        if (c[i] == 0) continue;
        uint8_t s = F4::inv(c[i]);
        for (int j = 0; j < 3; ++j) c[j] = F4::mul(c[j], s);
        return ProjTriple{c};
    }
    throw std::invalid_argument("normalize: zero triple");
}

std::string ProjTriple::to_string() const {
    std::string s = "(";
    for (int i = 0; i < 3; ++i) {
        if (i) s += ",";
        s += F4::name(c[i]);
    }
    return s + ")";
}

const std::vector<ProjTriple>& points() {
    static const std::vector<ProjTriple> pts = [] {
        std::vector<ProjTriple> out;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                for (int c = 0; c < 4; ++c) {
                    if (a == 0 && b == 0 && c == 0) continue;
                    ProjTriple t = normalize({static_cast<uint8_t>(a), static_cast<uint8_t>(b),
                                              static_cast<uint8_t>(c)});
                    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
                }
        std::sort(out.begin(), out.end());
        return out;
    }();
    return pts;
}

bool incident(const ProjTriple& point, const ProjTriple& line) {
    uint8_t s = 0;
    for (int i = 0; i < 3; ++i) s = F4::add(s, F4::mul(point.c[i], line.c[i]));
    return s == 0;
}

Graph incidence_graph() {
    const auto& pts = points();
    Graph g;
    g.init(42);
    g.part.assign(42, 0);
    for (int l = 0; l < 21; ++l) g.part[21 + l] = 1;
    for (int p = 0; p < 21; ++p)
        for (int l = 0; l < 21; ++l)
            if (incident(pts[p], pts[l])) g.add_edge(p, 21 + l);
    return g;
}

long long independent_subsets(int k) {
    if (k < 1 || k > 6) throw std::invalid_argument("independent_subsets: k in 1..6");
    const auto& pts = points();
    // line through each point pair, as a bitmask of its 5 points
    uint32_t line_mask[21][21];
    for (int a = 0; a < 21; ++a)
        for (int b = 0; b < 21; ++b) line_mask[a][b] = 0;
    for (int l = 0; l < 21; ++l) {
        uint32_t mask = 0;
        for (int p = 0; p < 21; ++p)
            if (incident(pts[p], pts[l])) mask |= 1u << p;
        for (int a = 0; a < 21; ++a)
            if (mask & (1u << a))
                for (int b = a + 1; b < 21; ++b)
                    if (mask & (1u << b)) {
                        line_mask[a][b] = mask;
                        line_mask[b][a] = mask;
                    }
    }
    long long count = 0;
    std::array<int, 6> chosen{};
    auto dfs = [&](auto&& self, int depth, int start, uint32_t forbidden) -> void {
        if (depth == k) {
            ++count;
            return;
        }
        for (int p = start; p < 21; ++p) {
            if (forbidden & (1u << p)) continue;
            uint32_t next_forbidden = forbidden;
            for (int i = 0; i < depth; ++i)
                next_forbidden |= line_mask[chosen[i]][p];
            chosen[depth] = p;
            self(self, depth + 1, p + 1, next_forbidden);
        }
    };
    dfs(dfs, 0, 0, 0);
    return count;
}

Graph heawood_graph() {
    // Fano plane: points 1..7 as F2-triples, lines = same triples
    std::vector<std::array<int, 3>> f2;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                if (a + b + c > 0) f2.push_back({a, b, c});
    Graph g;
    g.init(14);
    g.part.assign(14, 0);
    for (int l = 0; l < 7; ++l) g.part[7 + l] = 1;
    for (int p = 0; p < 7; ++p)
        for (int l = 0; l < 7; ++l) {
            int s = f2[p][0] * f2[l][0] + f2[p][1] * f2[l][1] + f2[p][2] * f2[l][2];
            if (s % 2 == 0) g.add_edge(p, 7 + l);
        }
    return g;
}

PointListReport verify_reference_point_list() {
    // published coordinates, verbatim: (1,a2,1) appears twice, (1,a2,a) is absent
    static const std::array<std::array<uint8_t, 3>, 21> listed = {{
        {1, 1, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}, {0, 1, 1}, {1, 0, 1},
        {1, 2, 0}, {1, 3, 0}, {1, 0, 2}, {1, 0, 3}, {0, 1, 2}, {0, 1, 3}, {1, 1, 2},
        {1, 1, 3}, {1, 2, 1}, {1, 3, 1}, {1, 2, 2}, {1, 2, 3}, {1, 3, 1}, {1, 3, 3},
    }};
    PointListReport rep;
    rep.all_listed_are_points = true;
    const auto& pts = points();
    std::vector<ProjTriple> seen;
    for (const auto& c : listed) {
        ProjTriple t{c};
        if (std::find(pts.begin(), pts.end(), t) == pts.end()) {
            rep.all_listed_are_points = false;
            continue;
        }
        if (std::find(seen.begin(), seen.end(), t) != seen.end())
            rep.duplicates.push_back(t.to_string());
        else
            seen.push_back(t);
    }
    for (const auto& p : pts)
        if (std::find(seen.begin(), seen.end(), p) == seen.end())
            rep.missing.push_back(p.to_string());
    return rep;
}

std::string incidence_csv() {
    const auto& pts = points();
    std::ostringstream os;
    for (int p = 0; p < 21; ++p) {
        for (int l = 0; l < 21; ++l) {
            if (l) os << ",";
            os << (incident(pts[p], pts[l]) ? 1 : 0);
        }
        os << "\n";
    }
    return os.str();
}

std::string bijection_to_json(const std::vector<int>& map,
                              const std::vector<std::string>& from_labels,
                              const std::vector<std::string>& to_labels) {
    std::ostringstream os;
    os << "[";
    for (size_t v = 0; v < map.size(); ++v) {
        if (v) os << ",";
        os << "[\"" << from_labels.at(v) << "\",\"" << to_labels.at(map[v]) << "\"]";
    }
    os << "]";
    return os.str();
}

std::vector<std::string> incidence_graph_labels() {
    std::vector<std::string> out;
    for (const auto& p : points()) out.push_back("P" + p.to_string());
    for (const auto& l : points()) out.push_back("L" + l.to_string());
    return out;
}

}  // namespace k3::planegeom
