// fibsearch.cpp
#include "k3/fibsearch.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace k3::fibsearch {

namespace {

uint64_t mask_of(const std::vector<int>& vs) {
    uint64_t m = 0;
    for (int v : vs) m |= 1ull << v;
    return m;
}

bool fail(std::string* why, const char* msg) {
    if (why) *why = msg;
    return false;
}

}  // namespace

std::optional<FibrationConfig> find_star_configuration(const Graph& g, int start) {
    if (start < 0 || start >= g.n) return std::nullopt;
    uint64_t nbrs = g.adj[start];
    while (nbrs) {
        int two_section = std::countr_zero(nbrs);
        nbrs &= nbrs - 1;
        // its neighbors are the candidate centers (start must be among them)
        if (std::popcount(g.adj[two_section]) != 5) continue;
        FibrationConfig c;
        c.extra = two_section;
        uint64_t centers = g.adj[two_section];
        uint64_t used = (1ull << two_section) | centers;
        bool ok = true;
        uint64_t cm = centers;
        while (cm) {
            int center = std::countr_zero(cm);
            cm &= cm - 1;
            uint64_t leaves = g.adj[center] & ~(1ull << two_section);
            if (std::popcount(leaves) != 4 || (leaves & used)) {
                ok = false;
                break;
            }
            used |= leaves;
            std::vector<int> fiber{center};
            while (leaves) {
                fiber.push_back(std::countr_zero(leaves));
                leaves &= leaves - 1;
            }
            c.fibers.push_back(std::move(fiber));
        }
        if (!ok) continue;
        for (size_t i = 0; i < c.fibers.size(); ++i)
            if (c.fibers[i][0] == start) std::swap(c.fibers[0], c.fibers[i]);
        for (int v = 0; v < g.n; ++v)
            if (!(used & (1ull << v))) c.sections.push_back(v);
        if (validate_star_configuration(g, c)) return c;
    }
    return std::nullopt;
}

bool validate_star_configuration(const Graph& g, const FibrationConfig& c, std::string* why) {
    if (g.n != 42) return fail(why, "graph is not on 42 vertices");
    if (c.fibers.size() != 5) return fail(why, "need 5 fibers");
    if (c.sections.size() != 16) return fail(why, "need 16 sections");
    if (c.extra < 0 || c.extra >= g.n) return fail(why, "missing 2-section");

    uint64_t seen = 1ull << c.extra;
    std::vector<uint64_t> fiber_masks, leaf_masks;
    uint64_t all_centers = 0;
    for (const auto& f : c.fibers) {
        if (f.size() != 5) return fail(why, "fiber is not a 5-component star");
        int center = f[0];
        all_centers |= 1ull << center;
        uint64_t fm = mask_of(f);
        if (std::popcount(fm) != 5) return fail(why, "repeated vertex in fiber");
        if (fm & seen) return fail(why, "fibers overlap");
        seen |= fm;
        uint64_t lm = 0;
        for (size_t i = 1; i < f.size(); ++i) {
            int leaf = f[i];
            if (!g.has_edge(center, leaf)) return fail(why, "leaf not on center");
            lm |= 1ull << leaf;
        }
        for (size_t i = 1; i < f.size(); ++i)
            for (size_t j = i + 1; j < f.size(); ++j)
                if (g.has_edge(f[i], f[j])) return fail(why, "leaves intersect");
        fiber_masks.push_back(fm);
        leaf_masks.push_back(lm);
    }
    for (int s : c.sections) {
        if (seen & (1ull << s)) return fail(why, "section reuses a vertex");
        seen |= 1ull << s;
    }
    if (std::popcount(seen) != 42) return fail(why, "vertices not partitioned");

    // fibers of one fibration are pairwise disjoint divisors: no cross edges
    for (size_t a = 0; a < 5; ++a)
        for (size_t b = a + 1; b < 5; ++b)
            for (int v : c.fibers[a])
                if (g.adj[v] & fiber_masks[b]) return fail(why, "fibers intersect");

    // the 2-section meets exactly the five centers
    if (g.adj[c.extra] != all_centers) return fail(why, "2-section must meet the 5 centers");

    // sections: one leaf per fiber, no centers, mutually disjoint
    for (int s : c.sections) {
        if (g.adj[s] & all_centers) return fail(why, "section meets a double component");
        for (size_t a = 0; a < 5; ++a)
            if (std::popcount(g.adj[s] & leaf_masks[a]) != 1)
                return fail(why, "section does not meet fiber exactly once");
        for (int s2 : c.sections)
            if (s2 != s && g.has_edge(s, s2)) return fail(why, "sections intersect");
    }
    return true;
}

namespace {

struct HexCycleSet {
    std::vector<std::vector<int>> cycles;      // vertex order around each hexagon
    std::vector<uint64_t> masks;
    std::vector<uint64_t> closed;               // mask | neighbors(mask)
};

// All induced 6-cycles, deduplicated: anchored at their minimum vertex with
// direction fixed by comparing the two anchor neighbors.
HexCycleSet enumerate_hexagons(const Graph& g) {
    HexCycleSet out;
    std::vector<int> path;
    for (int a0 = 0; a0 < g.n; ++a0) {
        path = {a0};
        auto dfs = [&](auto&& self, uint64_t used) -> void {
            int depth = static_cast<int>(path.size());
            if (depth == 6) {
                if (!g.has_edge(path[5], a0)) return;
                if (path[1] > path[5]) return;  // direction canonicalization
                uint64_t m = mask_of(path);
                uint64_t closed = m;
                for (int v : path) closed |= g.adj[v];
                out.cycles.push_back(path);
                out.masks.push_back(m);
                out.closed.push_back(closed);
                return;
            }
            uint64_t cand = g.adj[path[depth - 1]] & ~used;
            while (cand) {
                int v = std::countr_zero(cand);
                cand &= cand - 1;
                if (v < a0) continue;  // anchor is the cycle minimum
                // induced: non-adjacent to all earlier path vertices except
                // the predecessor, and except the closing edge to the anchor
                // when placing the sixth vertex
                bool ok = true;
                for (int i = 0; i <= depth - 2 && ok; ++i) {
                    bool need_adj = (i == 0 && depth == 5);
                    if (g.has_edge(path[i], v) != need_adj) ok = false;
                }
                if (!ok) continue;
                path.push_back(v);
                self(self, used | (1ull << v));
                path.pop_back();
            }
        };
        dfs(dfs, 1ull << a0);
    }
    return out;
}

}  // namespace

std::optional<FibrationConfig> find_hexagon_configuration(const Graph& g) {
    HexCycleSet hs = enumerate_hexagons(g);
    size_t count = hs.cycles.size();
    std::vector<size_t> pick;
    std::optional<FibrationConfig> result;

    auto dfs = [&](auto&& self, size_t from, uint64_t used, uint64_t closed) -> bool {
        if (pick.size() == 4) {
            FibrationConfig c;
            for (size_t idx : pick) c.fibers.push_back(hs.cycles[idx]);
            for (int v = 0; v < g.n; ++v)
                if (!(used & (1ull << v))) c.sections.push_back(v);
            if (validate_hexagon_configuration(g, c)) {
                result = std::move(c);
                return true;
            }
            return false;
        }
        for (size_t i = from; i < count; ++i) {
            // disjoint and no edges to already chosen hexagons
            if (hs.masks[i] & closed) continue;
            if (hs.closed[i] & used) continue;
            pick.push_back(i);
            if (self(self, i + 1, used | hs.masks[i], closed | hs.closed[i])) return true;
            pick.pop_back();
        }
        return false;
    };
    dfs(dfs, 0, 0, 0);
    return result;
}

bool validate_hexagon_configuration(const Graph& g, const FibrationConfig& c,
                                    std::string* why) {
    if (g.n != 42) return fail(why, "graph is not on 42 vertices");
    if (c.fibers.size() != 4) return fail(why, "need 4 hexagon fibers");
    if (c.sections.size() != 18) return fail(why, "need 18 sections");

    uint64_t seen = 0;
    std::vector<uint64_t> masks;
    for (const auto& f : c.fibers) {
        if (f.size() != 6) return fail(why, "fiber is not a hexagon");
        uint64_t fm = mask_of(f);
        if (std::popcount(fm) != 6) return fail(why, "repeated vertex in hexagon");
        if (fm & seen) return fail(why, "hexagons overlap");
        seen |= fm;
        for (int i = 0; i < 6; ++i)
            for (int j = i + 1; j < 6; ++j) {
                bool consecutive = (j == i + 1) || (i == 0 && j == 5);
                if (g.has_edge(f[i], f[j]) != consecutive)
                    return fail(why, "fiber is not an induced 6-cycle");
            }
        masks.push_back(fm);
    }
    for (int s : c.sections) {
        if (seen & (1ull << s)) return fail(why, "section reuses a vertex");
        seen |= 1ull << s;
    }
    if (std::popcount(seen) != 42) return fail(why, "vertices not partitioned");
    if (c.extra != -1) return fail(why, "hexagon configuration has no 2-section");

    for (size_t a = 0; a < 4; ++a)
        for (size_t b = a + 1; b < 4; ++b)
            for (int v : c.fibers[a])
                if (g.adj[v] & masks[b]) return fail(why, "hexagons intersect");

    // each section meets every hexagon exactly once; the leftover adjacency
    // among sections must then be a perfect matching (degree five: four
    // hexagon edges plus exactly one partner section)
    uint64_t section_mask = 0;
    for (int s : c.sections) section_mask |= 1ull << s;
    for (int s : c.sections) {
        for (size_t a = 0; a < 4; ++a)
            if (std::popcount(g.adj[s] & masks[a]) != 1)
                return fail(why, "section does not meet hexagon exactly once");
        if (std::popcount(g.adj[s] & section_mask) != 1)
            return fail(why, "sections do not pair up");
    }
    return true;
}

std::optional<std::vector<int>> find_induced_tree(
    const Graph& g, int tree_n, const std::vector<std::pair<int, int>>& tree_edges) {
    std::vector<uint64_t> tadj(tree_n, 0);
    for (auto [a, b] : tree_edges) {
        tadj[a] |= 1ull << b;
        tadj[b] |= 1ull << a;
    }
    // placement order: tree vertex 0 first, then children so each new vertex
    // touches exactly one placed vertex
    std::vector<int> order, parent(tree_n, -1);
    std::vector<bool> done(tree_n, false);
    order.push_back(0);
    done[0] = true;
    for (size_t i = 0; i < order.size(); ++i) {
        uint64_t m = tadj[order[i]];
        while (m) {
            int u = std::countr_zero(m);
            m &= m - 1;
            if (!done[u]) {
                done[u] = true;
                parent[u] = order[i];
                order.push_back(u);
            }
        }
    }
    if (static_cast<int>(order.size()) != tree_n)
        throw std::invalid_argument("find_induced_tree: not a connected tree");

    std::vector<int> image(tree_n, -1);
    auto dfs = [&](auto&& self, size_t depth, uint64_t used) -> bool {
        if (depth == order.size()) return true;
        int tv = order[depth];
        uint64_t cand;
        if (parent[tv] < 0) {
            cand = g.n == 64 ? ~0ull : (1ull << g.n) - 1;
        } else {
            cand = g.adj[image[parent[tv]]];
        }
        cand &= ~used;
        // induced: must avoid neighbors of every placed non-neighbor, and be
        // adjacent to every placed tree-neighbor (only the parent, by order)
        for (size_t d = 0; d < depth; ++d) {
            int tw = order[d];
            if (tw == parent[tv]) continue;
            if (tadj[tv] & (1ull << tw)) cand &= g.adj[image[tw]];
            else cand &= ~g.adj[image[tw]];
            if (!cand) return false;
        }
        while (cand) {
            int v = std::countr_zero(cand);
            cand &= cand - 1;
            image[tv] = v;
            if (self(self, depth + 1, used | (1ull << v))) return true;
        }
        image[tv] = -1;
        return false;
    };
    if (!dfs(dfs, 0, 0)) return std::nullopt;
    return image;
}

std::vector<std::pair<int, int>> affine_d_tree(int n) {
    if (n < 4) throw std::invalid_argument("affine_d_tree: need n >= 4");
    // vertices 0,1 fork onto 2; path 2..n-2; n-1, n fork onto n-2
    std::vector<std::pair<int, int>> e;
    e.push_back({0, 2});
    e.push_back({1, 2});
    for (int v = 2; v + 1 <= n - 2; ++v) e.push_back({v, v + 1});
    e.push_back({n - 1, n - 2});
    e.push_back({n, n - 2});
    return e;
}

std::string config_to_json(const FibrationConfig& c, const std::vector<std::string>& labels) {
    auto name = [&](int v) { return "\"" + labels.at(v) + "\""; };
    std::ostringstream os;
    os << "{\"fibers\":[";
    for (size_t i = 0; i < c.fibers.size(); ++i) {
        if (i) os << ",";
        os << "[";
        for (size_t j = 0; j < c.fibers[i].size(); ++j) {
            if (j) os << ",";
            os << name(c.fibers[i][j]);
        }
        os << "]";
    }
    os << "],\"sections\":[";
    for (size_t i = 0; i < c.sections.size(); ++i) {
        if (i) os << ",";
        os << name(c.sections[i]);
    }
    os << "]";
    if (c.extra >= 0) os << ",\"extra\":" << name(c.extra);
    os << "}";
    return os.str();
}

}  // namespace k3::fibsearch
