#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "pcdg/canonical.hpp"
#include "pcdg/conditions.hpp"
#include "pcdg/graph.hpp"
#include "pcdg/knowledge_base.hpp"

namespace pcdg {

struct EliminationVerdict {
    bool eliminated = false;
    std::string reason;       // from the closed reason-code set
    std::string provenance;
};

inline EliminationVerdict no_verdict() { return {}; }

// At most one cut vertex can appear in an occurring graph.
inline EliminationVerdict cut_vertex_eliminator(const Graph& g) {
    auto cuts = cut_vertices(g);
    if (cuts.size() >= 2)
        return {true, "CUT2", std::to_string(cuts.size()) + " cut vertices"};
    return no_verdict();
}

// Non-complete regular occurring graphs are (n-2)-regular.
inline EliminationVerdict regularity_eliminator(const Graph& g) {
    if (g.n == 0) return no_verdict();
    int k = g.degree(0);
    for (int v = 1; v < g.n; ++v)
        if (g.degree(v) != k) return no_verdict();
    if (k == g.n - 1 || k == g.n - 2) return no_verdict();
    return {true, "REG", std::to_string(k) + "-regular, not " + std::to_string(g.n - 2) +
                             "-regular"};
}

// An adjacent degree-2 pair with no common neighbor cannot appear (n >= 5,
// under the three-vertex condition).
inline EliminationVerdict degree2_pair_eliminator(const Graph& g) {
    if (g.n < 5 || !palfy_condition(g)) return no_verdict();
    for (int a = 0; a < g.n; ++a) {
        if (g.degree(a) != 2) continue;
        for (int b = a + 1; b < g.n; ++b) {
            if (g.degree(b) != 2 || !g.has_edge(a, b)) continue;
            if ((g.adj[a] & g.adj[b]) == 0)
                return {true, "DEG2",
                        "degree-2 pair " + std::to_string(a) + "," + std::to_string(b)};
        }
    }
    return no_verdict();
}

// K_k and K_t plus an injective matching from the K_t side.
inline Graph gamma_family_generate(int k, int t) {
    if (t > k || t < 1) throw std::invalid_argument("gamma family requires k >= t >= 1");
    Graph g = disjoint_union(complete_graph(k), complete_graph(t));
    for (int i = 0; i < t; ++i) {
        g.adj[i] |= uint16_t(1u << (k + i));
        g.adj[k + i] |= uint16_t(1u << i);
    }
    return g;
}

inline Status gamma_family_status(int k, int t) {
    if (t > k || t < 1) throw std::invalid_argument("gamma family requires k >= t >= 1");
    return (t == 1 || (k == 2 && t == 2)) ? Status::Occurs : Status::NotOccurs;
}

inline std::optional<std::pair<int, int>> gamma_family_recognize(const Graph& g) {
    CanonicalKey key = canonical_key(g);
    for (int t = 1; 2 * t <= g.n; ++t) {
        int k = g.n - t;
        if (k < t) break;
        if (canonical_key(gamma_family_generate(k, t)) == key) return std::make_pair(k, t);
    }
    return std::nullopt;
}

// Match against NotOccurs records of previously classified shapes.
inline EliminationVerdict catalog_eliminator(const Graph& g, const KnowledgeBase& catalog) {
    const ClassificationRecord* rec = catalog.lookup(canonical_key(g));
    if (rec && rec->status == Status::NotOccurs)
        return {true, "CATALOG", rec->provenance};
    return no_verdict();
}

// Gamma-family membership as an eliminator (NotOccurs members only).
inline EliminationVerdict gamma_status_eliminator(const Graph& g) {
    if (auto kt = gamma_family_recognize(g); kt &&
        gamma_family_status(kt->first, kt->second) == Status::NotOccurs)
        return {true, "GAMMA",
                "gamma(" + std::to_string(kt->first) + "," + std::to_string(kt->second) + ")"};
    return no_verdict();
}

}  // namespace pcdg
