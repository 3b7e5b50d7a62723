// graph.cpp
#include "k3/graph.hpp"

#include <bit>
#include <stdexcept>

namespace k3 {

void Graph::init(int vertices) {
    if (vertices < 0 || vertices > 64) throw std::invalid_argument("Graph: need 0..64 vertices");
    n = vertices;
    adj.assign(n, 0);
    part.clear();
}

void Graph::add_edge(int a, int b) {
    if (a == b) throw std::invalid_argument("Graph: no loops");
    adj[a] |= 1ull << b;
    adj[b] |= 1ull << a;
}

int Graph::degree(int v) const { return std::popcount(adj[v]); }

long long Graph::edge_count() const {
    long long s = 0;
    for (int v = 0; v < n; ++v) s += degree(v);
    return s / 2;
}

std::optional<std::vector<int8_t>> two_coloring(const Graph& g) {
    std::vector<int8_t> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        std::vector<int> queue{s};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            uint64_t m = g.adj[v];
            while (m) {
                int u = std::countr_zero(m);
                m &= m - 1;
                if (color[u] < 0) {
                    color[u] = static_cast<int8_t>(1 - color[v]);
                    queue.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    uint64_t seen = 1;
    std::vector<int> queue{0};
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        uint64_t next = g.adj[v] & ~seen;
        seen |= next;
        while (next) {
            queue.push_back(std::countr_zero(next));
            next &= next - 1;
        }
    }
    return std::popcount(seen) == g.n;
}

bool has_girth_6_bipartite(const Graph& g) {
    auto col = two_coloring(g);
    if (!col) return false;  // odd cycle
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (std::popcount(g.adj[a] & g.adj[b]) >= 2) return false;  // 4-cycle
    // girth is now even and >= 6; exhibit an actual 6-cycle: three same-part
    // vertices pairwise joined through three distinct middle vertices
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            if ((*col)[a] != (*col)[b]) continue;
            uint64_t mab = g.adj[a] & g.adj[b];
            if (!mab) continue;
            int x = std::countr_zero(mab);
            for (int c = b + 1; c < g.n; ++c) {
                if ((*col)[c] != (*col)[a]) continue;
                uint64_t mbc = g.adj[b] & g.adj[c], mca = g.adj[c] & g.adj[a];
                if (!mbc || !mca) continue;
                int y = std::countr_zero(mbc), z = std::countr_zero(mca);
                if (x != y && y != z && x != z) return true;
            }
        }
    return false;
}

namespace {

// Shared backtracking core: maps vertices of g1 (in BFS order) into g2.
// count_all=false stops at the first full map.
struct Matcher {
    const Graph& g1;
    const Graph& g2;
    std::vector<int> order;     // g1 vertices in BFS order
    std::vector<int> image;     // image[v] for g1 vertex v, -1 if unset
    uint64_t used = 0;
    bool count_all;
    unsigned long long found = 0;
    unsigned long long part_preserving = 0;
    std::vector<int> first_map;

    Matcher(const Graph& a, const Graph& b, bool all) : g1(a), g2(b), count_all(all) {
        image.assign(g1.n, -1);
        // most-constrained-first ordering: always take the unplaced vertex
        // with the most already-placed neighbors (ties broken by index).
        // Two placed neighbors pin the image to at most one vertex in a
        // 4-cycle-free graph, so the search is rigid after a short prefix.
        std::vector<bool> placed(g1.n, false);
        uint64_t placed_mask = 0;
        for (int step = 0; step < g1.n; ++step) {
            int best = -1, best_links = -1;
            for (int v = 0; v < g1.n; ++v) {
                if (placed[v]) continue;
                int links = std::popcount(g1.adj[v] & placed_mask);
                if (links > best_links) {
                    best = v;
                    best_links = links;
                }
            }
            placed[best] = true;
            placed_mask |= 1ull << best;
            order.push_back(best);
        }
    }

    bool run() {
        dfs(0);
        return found > 0;
    }

    void dfs(size_t depth) {
        if (!count_all && found) return;
        if (depth == order.size()) {
            ++found;
            if (first_map.empty()) first_map = image;
            if (!g1.part.empty() && !g2.part.empty()) {
                bool pres = true;
                for (int v = 0; v < g1.n && pres; ++v)
                    if (g1.part[v] != g2.part[image[v]]) pres = false;
                if (pres) ++part_preserving;
            }
            return;
        }
        int v = order[depth];
        // candidates: unused vertices of g2 with matching adjacency to all
        // previously mapped vertices and matching degree
        uint64_t cand = ~used & (g2.n == 64 ? ~0ull : ((1ull << g2.n) - 1));
        for (size_t d = 0; d < depth; ++d) {
            int w = order[d];
            if (g1.has_edge(v, w)) cand &= g2.adj[image[w]];
            else cand &= ~g2.adj[image[w]];
            if (!cand) return;
        }
        while (cand) {
            int u = std::countr_zero(cand);
            cand &= cand - 1;
            if (g1.degree(v) != g2.degree(u)) continue;
            image[v] = u;
            used |= 1ull << u;
            dfs(depth + 1);
            used &= ~(1ull << u);
            image[v] = -1;
            if (!count_all && found) return;
        }
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const Graph& g1, const Graph& g2) {
    if (g1.n != g2.n || g1.edge_count() != g2.edge_count()) return std::nullopt;
    Matcher m(g1, g2, false);
    if (!m.run()) return std::nullopt;
    return m.first_map;
}

AutCount count_automorphisms(const Graph& g) {
    Matcher m(g, g, true);
    m.run();
    AutCount out;
    out.total = m.found;
    out.part_preserving = g.part.empty() ? m.found : m.part_preserving;
    return out;
}

}  // namespace k3
