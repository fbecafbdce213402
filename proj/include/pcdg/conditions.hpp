#pragma once

#include <optional>
#include <stdexcept>

#include "pcdg/graph.hpp"

namespace pcdg {

// Any three vertices span at least one edge (complement is triangle-free).
// Checked directly on 3-subsets, independent of the bipartiteness test below.
inline bool palfy_condition(const Graph& g) {
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            for (int c = b + 1; c < g.n; ++c)
                if (!g.has_edge(a, b) && !g.has_edge(a, c) && !g.has_edge(b, c))
                    return false;
    return true;
}

inline bool odd_cycle_free_complement(const Graph& g) {
    return bipartition(complement(g)).has_value();
}

// Sizes (a, b), a >= b >= 1, of a partition of V into two cliques maximizing
// the larger part; nullopt when no such partition exists (complement not
// bipartite).  Exact: per complement component, the two sides of its unique
// 2-coloring can go to either part; achievable part sizes via subset-sum.
inline std::optional<std::pair<int, int>> max_two_clique_partition(const Graph& g) {
    if (g.n < 2) return std::nullopt;
    Graph cg = complement(g);
    auto coloring = bipartition(cg);
    if (!coloring) return std::nullopt;
    uint32_t sums = 1;  // bitset of achievable side-0 sizes
    for (const auto& comp : components(cg)) {
        int side0 = 0;
        for (int v : comp) side0 += (*coloring)[v] == 0;
        int side1 = int(comp.size()) - side0;
        sums = (sums << side0) | (sums << side1);
    }
    int best = -1;
    for (int s = 1; s < g.n; ++s)
        if ((sums >> s) & 1u) best = std::max(best, std::max(s, g.n - s));
    if (best < 0) return std::nullopt;
    return std::make_pair(best, g.n - best);
}

struct CliqueSignature {
    int a, b;  // a >= b >= 1, a + b = n
    bool operator==(const CliqueSignature&) const = default;
    auto operator<=>(const CliqueSignature&) const = default;
};

// Sorting signature by largest clique: (omega, n - omega), with the complete
// graph filed as (n-1, 1) per the nonempty-parts convention.
inline std::optional<CliqueSignature> signature(const Graph& g) {
    if (!odd_cycle_free_complement(g) || g.n < 2) return std::nullopt;
    int w = clique_number(g);
    if (w == g.n) w = g.n - 1;
    return CliqueSignature{w, g.n - w};
}

struct ComponentPair {
    int n_small, n_large;
    bool operator==(const ComponentPair&) const = default;
};

// Present iff g has exactly two components, both complete.
inline std::optional<ComponentPair> disconnected_shape(const Graph& g) {
    auto comps = components(g);
    if (comps.size() != 2) return std::nullopt;
    for (const auto& c : comps)
        if (!is_clique(g, c)) return std::nullopt;
    int a = int(comps[0].size()), b = int(comps[1].size());
    if (a > b) std::swap(a, b);
    return ComponentPair{a, b};
}

inline bool palfy_inequality(const ComponentPair& p) {
    return p.n_large >= (1 << p.n_small) - 1;
}

// max{alpha : n >= 2^alpha + alpha - 1}; equals the number of component-size
// pairs of total n satisfying the inequality above.
inline int c_of(int n) {
    if (n < 2) throw std::domain_error("c(n) requires n >= 2");
    int best = 0;
    for (int alpha = 1; (1 << alpha) + alpha - 1 <= n; ++alpha) best = alpha;
    return best;
}

}  // namespace pcdg
