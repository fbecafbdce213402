#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace pcdg {

// Immutable simple graph on at most 16 vertices, one adjacency bitset per vertex.
struct Graph {
    static constexpr int max_vertices = 16;

    int n = 0;
    std::array<uint16_t, max_vertices> adj{};

    Graph() = default;

    explicit Graph(int order) : n(order) {
        if (order < 0 || order > max_vertices)
            throw std::invalid_argument("graph order out of range");
    }

    Graph(int order, const std::vector<std::pair<int, int>>& edge_list) : Graph(order) {
        for (auto [a, b] : edge_list) add_edge_unchecked(a, b);
    }

    bool has_edge(int a, int b) const { return (adj[a] >> b) & 1u; }
    int degree(int v) const { return __builtin_popcount(adj[v]); }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n; ++v) total += degree(v);
        return total / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (has_edge(i, j)) out.emplace_back(i, j);
        return out;
    }

    bool operator==(const Graph& o) const { return n == o.n && adj == o.adj; }

private:
    void add_edge_unchecked(int a, int b) {
        if (a == b || a < 0 || b < 0 || a >= n || b >= n)
            throw std::invalid_argument("bad edge");
        adj[a] |= uint16_t(1u << b);
        adj[b] |= uint16_t(1u << a);
    }
};

inline Graph complete_graph(int n) {
    Graph g(n);
    for (int v = 0; v < n; ++v)
        g.adj[v] = uint16_t(((1u << n) - 1) & ~(1u << v));
    return g;
}

inline Graph edgeless_graph(int n) { return Graph(n); }

inline Graph complement(const Graph& g) {
    Graph out(g.n);
    uint16_t full = uint16_t((1u << g.n) - 1);
    for (int v = 0; v < g.n; ++v)
        out.adj[v] = uint16_t(full & ~g.adj[v] & ~(1u << v));
    return out;
}

// Connected components as sorted vertex lists, ordered by smallest member.
inline std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    uint16_t seen = 0;
    for (int s = 0; s < g.n; ++s) {
        if ((seen >> s) & 1u) continue;
        uint16_t comp = uint16_t(1u << s), frontier = comp;
        while (frontier) {
            uint16_t next = 0;
            for (int v = 0; v < g.n; ++v)
                if ((frontier >> v) & 1u) next |= g.adj[v];
            frontier = uint16_t(next & ~comp);
            comp |= frontier;
        }
        seen |= comp;
        std::vector<int> verts;
        for (int v = 0; v < g.n; ++v)
            if ((comp >> v) & 1u) verts.push_back(v);
        comps.push_back(std::move(verts));
    }
    return comps;
}

constexpr int kUnreachable = 1 << 20;

inline std::array<int, Graph::max_vertices> distances_from(const Graph& g, int s) {
    std::array<int, Graph::max_vertices> dist{};
    dist.fill(kUnreachable);
    dist[s] = 0;
    uint16_t reached = uint16_t(1u << s), frontier = reached;
    int d = 0;
    while (frontier) {
        uint16_t next = 0;
        for (int v = 0; v < g.n; ++v)
            if ((frontier >> v) & 1u) next |= g.adj[v];
        frontier = uint16_t(next & ~reached);
        reached |= frontier;
        ++d;
        for (int v = 0; v < g.n; ++v)
            if ((frontier >> v) & 1u) dist[v] = d;
    }
    return dist;
}

// Diameter; empty optional means the graph is disconnected (infinite diameter).
inline std::optional<int> diameter(const Graph& g) {
    if (g.n <= 1) return 0;
    int best = 0;
    for (int s = 0; s < g.n; ++s) {
        auto dist = distances_from(g, s);
        for (int v = 0; v < g.n; ++v) {
            if (dist[v] >= kUnreachable) return std::nullopt;
            if (dist[v] > best) best = dist[v];
        }
    }
    return best;
}

inline Graph delete_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.n) throw std::invalid_argument("no such vertex");
    Graph out(g.n - 1);
    for (int a = 0, i = 0; a < g.n; ++a) {
        if (a == v) continue;
        for (int b = a + 1, j = i + 1; b < g.n; ++b) {
            if (b == v) continue;
            if (g.has_edge(a, b)) {
                out.adj[i] |= uint16_t(1u << j);
                out.adj[j] |= uint16_t(1u << i);
            }
            ++j;
        }
        ++i;
    }
    return out;
}

inline Graph delete_edges(const Graph& g, const std::vector<std::pair<int, int>>& es) {
    Graph out = g;
    for (auto [a, b] : es) {
        if (a < 0 || b < 0 || a >= g.n || b >= g.n || !out.has_edge(a, b))
            throw std::invalid_argument("no such edge");
        out.adj[a] &= uint16_t(~(1u << b));
        out.adj[b] &= uint16_t(~(1u << a));
    }
    return out;
}

inline std::vector<int> cut_vertices(const Graph& g) {
    std::vector<int> out;
    size_t base = components(g).size();
    for (int v = 0; v < g.n; ++v) {
        Graph h = delete_vertex(g, v);
        if (h.n > 0 && components(h).size() > base) out.push_back(v);
    }
    return out;
}

// 2-coloring of g itself (not its complement); empty optional if an odd cycle exists.
inline std::optional<std::array<int8_t, Graph::max_vertices>> bipartition(const Graph& g) {
    std::array<int8_t, Graph::max_vertices> color{};
    color.fill(-1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < g.n; ++u) {
                if (!g.has_edge(v, u)) continue;
                if (color[u] == -1) {
                    color[u] = int8_t(color[v] ^ 1);
                    stack.push_back(u);
                } else if (color[u] == color[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

// Disjoint union plus all cross edges; models the degree graph of a direct
// product with disjoint prime sets.
inline Graph join(const Graph& g1, const Graph& g2) {
    Graph out(g1.n + g2.n);
    for (int v = 0; v < g1.n; ++v)
        out.adj[v] = uint16_t(g1.adj[v] | (((1u << g2.n) - 1) << g1.n));
    for (int v = 0; v < g2.n; ++v)
        out.adj[g1.n + v] = uint16_t((uint32_t(g2.adj[v]) << g1.n) | ((1u << g1.n) - 1));
    return out;
}

inline Graph disjoint_union(const Graph& g1, const Graph& g2) {
    Graph out(g1.n + g2.n);
    for (int v = 0; v < g1.n; ++v) out.adj[v] = g1.adj[v];
    for (int v = 0; v < g2.n; ++v) out.adj[g1.n + v] = uint16_t(uint32_t(g2.adj[v]) << g1.n);
    return out;
}

inline int clique_number(const Graph& g) {
    if (g.n == 0) return 0;
    int best = 0;
    // branch on candidate sets, greatest-degree-first is unnecessary at n <= 16
    struct Rec {
        const Graph& g;
        int& best;
        void run(uint16_t cand, int size) {
            if (size + __builtin_popcount(cand) <= best) return;
            if (!cand) {
                if (size > best) best = size;
                return;
            }
            int v = __builtin_ctz(cand);
            run(uint16_t(cand & ~(1u << v) & g.adj[v]), size + 1);
            run(uint16_t(cand & ~(1u << v)), size);
        }
    } rec{g, best};
    rec.run(uint16_t((1u << g.n) - 1), 0);
    return best;
}

inline bool is_clique(const Graph& g, const std::vector<int>& verts) {
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (!g.has_edge(verts[i], verts[j])) return false;
    return true;
}

}  // namespace pcdg
