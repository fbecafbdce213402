#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "pcdg/graph.hpp"
#include "pcdg/graph6.hpp"

namespace pcdg {

// Canonical labeling: vertices are first bucketed by an isomorphism-invariant
// (degree, sorted neighbor degrees); within that bucket order, a backtracking
// search over bucket-respecting relabelings picks the lexicographically least
// column-major adjacency code — i.e. the least graph6 string.  Exact: equal
// canonical forms iff isomorphic.
namespace detail {

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> groups;   // invariant buckets, fixed order
    std::vector<int> group_of_pos;          // position -> bucket index
    std::array<uint32_t, Graph::max_vertices> best{};
    std::array<int, Graph::max_vertices> perm{};
    std::array<bool, Graph::max_vertices> used{};

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.n) {
        std::vector<std::pair<std::pair<int, std::vector<int>>, int>> inv(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> nbr_degs;
            for (int u = 0; u < n; ++u)
                if (g.has_edge(v, u)) nbr_degs.push_back(g.degree(u));
            std::sort(nbr_degs.begin(), nbr_degs.end());
            inv[v] = {{g.degree(v), std::move(nbr_degs)}, v};
        }
        std::sort(inv.begin(), inv.end());
        for (int i = 0; i < n; ++i) {
            if (i == 0 || inv[i].first != inv[i - 1].first) groups.emplace_back();
            groups.back().push_back(inv[i].second);
        }
        group_of_pos.reserve(n);
        for (size_t gi = 0; gi < groups.size(); ++gi)
            group_of_pos.insert(group_of_pos.end(), groups[gi].size(), int(gi));
        best.fill(UINT32_MAX);
    }

    void run() {
        if (n > 0) place(0);
    }

    void place(int pos) {
        if (pos == n) return;
        std::vector<int> tried;
        for (int v : groups[group_of_pos[pos]]) {
            if (used[v]) continue;
            bool twin = false;
            for (int w : tried)
                if ((g.adj[v] & ~(1u << w)) == (g.adj[w] & ~(1u << v))) {
                    twin = true;
                    break;
                }
            if (twin) continue;
            tried.push_back(v);
            uint32_t chunk = 0;
            for (int i = 0; i < pos; ++i)
                chunk = (chunk << 1) | (g.has_edge(perm[i], v) ? 1u : 0u);
            if (chunk > best[pos]) continue;
            if (chunk < best[pos]) {
                best[pos] = chunk;
                for (int j = pos + 1; j < n; ++j) best[j] = UINT32_MAX;
            }
            perm[pos] = v;
            used[v] = true;
            place(pos + 1);
            used[v] = false;
        }
    }

    Graph result() const {
        Graph out(n);
        for (int k = 1; k < n; ++k)
            for (int i = 0; i < k; ++i)
                if ((best[k] >> (k - 1 - i)) & 1u) {
                    out.adj[i] |= uint16_t(1u << k);
                    out.adj[k] |= uint16_t(1u << i);
                }
        return out;
    }
};

}  // namespace detail

inline Graph canonical_form(const Graph& g) {
    if (g.n <= 1) return g;
    detail::CanonSearch search(g);
    search.run();
    return search.result();
}

using CanonicalKey = std::string;

inline CanonicalKey canonical_key(const Graph& g) {
    return encode_graph6(canonical_form(g));
}

inline bool isomorphic(const Graph& a, const Graph& b) {
    return a.n == b.n && canonical_form(a) == canonical_form(b);
}

}  // namespace pcdg
