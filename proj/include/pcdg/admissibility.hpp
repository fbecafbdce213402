#pragma once

#include <map>
#include <string>
#include <vector>

#include "pcdg/canonical.hpp"
#include "pcdg/conditions.hpp"
#include "pcdg/eliminators.hpp"
#include "pcdg/graph.hpp"
#include "pcdg/knowledge_base.hpp"

namespace pcdg {

struct OracleAnswer {
    Status status = Status::Unknown;
    std::string provenance;  // tagged: P1 / P2 / RUN <reason> / KB <provenance>
};

using RunVerdicts = std::map<CanonicalKey, OracleAnswer>;

// Classification oracle behind the admissibility checks: unconditional
// filters first, then this run's verdicts (graphs of the run's order), then
// the knowledge base, else Unknown.
struct OccurrenceOracle {
    int run_order = 0;
    const RunVerdicts* run = nullptr;
    const KnowledgeBase* kb = nullptr;

    OracleAnswer query(const Graph& g) const {
        if (!palfy_condition(g)) return {Status::NotOccurs, "P1"};
        if (!odd_cycle_free_complement(g)) return {Status::NotOccurs, "P2"};
        CanonicalKey key = canonical_key(g);
        if (run && g.n == run_order) {
            if (auto it = run->find(key); it != run->end())
                return {it->second.status, "RUN " + it->second.provenance};
            return {Status::Unknown, "RUN no verdict"};
        }
        if (kb)
            if (const ClassificationRecord* rec = kb->lookup(key))
                return {rec->status, "KB " + key + " " + rec->provenance};
        return {Status::Unknown, "no record"};
    }
};

enum class Admissible { Yes, No, Inconclusive };

struct AdmissibilityResult {
    Admissible value = Admissible::Inconclusive;
    std::vector<std::string> evidence;  // one line per oracle query
};

namespace detail {

inline std::string edge_set_name(const std::vector<std::pair<int, int>>& es) {
    std::string out;
    for (auto [a, b] : es) {
        if (!out.empty()) out += ",";
        out += std::to_string(a) + "-" + std::to_string(b);
    }
    return out;
}

}  // namespace detail

// A vertex is admissible when its deletion and every deletion of a nonempty
// subset of its incident edges all yield non-occurring graphs.
inline AdmissibilityResult is_admissible(const Graph& g, int v, const OccurrenceOracle& oracle) {
    AdmissibilityResult res;
    bool inconclusive = false;
    OracleAnswer a = oracle.query(delete_vertex(g, v));
    res.evidence.push_back("delete vertex " + std::to_string(v) + ": " +
                           status_name(a.status) + " [" + a.provenance + "]");
    if (a.status == Status::Occurs) {
        res.value = Admissible::No;
        return res;
    }
    inconclusive |= a.status == Status::Unknown;

    std::vector<std::pair<int, int>> incident;
    for (int u = 0; u < g.n; ++u)
        if (g.has_edge(v, u)) incident.emplace_back(std::min(v, u), std::max(v, u));
    for (uint32_t mask = 1; mask < (1u << incident.size()); ++mask) {
        std::vector<std::pair<int, int>> subset;
        for (size_t i = 0; i < incident.size(); ++i)
            if ((mask >> i) & 1u) subset.push_back(incident[i]);
        OracleAnswer ans = oracle.query(delete_edges(g, subset));
        res.evidence.push_back("delete edges {" + detail::edge_set_name(subset) + "}: " +
                               status_name(ans.status) + " [" + ans.provenance + "]");
        if (ans.status == Status::Occurs) {
            res.value = Admissible::No;
            return res;
        }
        inconclusive |= ans.status == Status::Unknown;
    }
    res.value = inconclusive ? Admissible::Inconclusive : Admissible::Yes;
    return res;
}

// Admissible, plus: after deleting the vertex, every deletion of a nonempty
// subset of the edges between its former neighbors also yields a
// non-occurring graph.
inline AdmissibilityResult is_strongly_admissible(const Graph& g, int v,
                                                  const OccurrenceOracle& oracle) {
    AdmissibilityResult res = is_admissible(g, v, oracle);
    if (res.value == Admissible::No) return res;
    bool inconclusive = res.value == Admissible::Inconclusive;
    Graph h = delete_vertex(g, v);
    auto remap = [&](int u) { return u > v ? u - 1 : u; };
    std::vector<std::pair<int, int>> nbr_edges;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b)
            if (a != v && b != v && g.has_edge(v, a) && g.has_edge(v, b) && g.has_edge(a, b))
                nbr_edges.emplace_back(remap(a), remap(b));
    for (uint32_t mask = 1; mask < (1u << nbr_edges.size()); ++mask) {
        std::vector<std::pair<int, int>> subset;
        for (size_t i = 0; i < nbr_edges.size(); ++i)
            if ((mask >> i) & 1u) subset.push_back(nbr_edges[i]);
        OracleAnswer ans = oracle.query(delete_edges(h, subset));
        res.evidence.push_back("delete vertex " + std::to_string(v) + " + edges {" +
                               detail::edge_set_name(subset) + "}: " + status_name(ans.status) +
                               " [" + ans.provenance + "]");
        if (ans.status == Status::Occurs) {
            res.value = Admissible::No;
            return res;
        }
        inconclusive |= ans.status == Status::Unknown;
    }
    res.value = inconclusive ? Admissible::Inconclusive : Admissible::Yes;
    return res;
}

// A graph all of whose vertices are admissible does not occur.
inline EliminationVerdict all_admissible_eliminator(
    const Graph& g, const OccurrenceOracle& oracle,
    std::vector<AdmissibilityResult>* chains = nullptr) {
    if (g.n == 0) return no_verdict();
    bool all_yes = true;
    for (int v = 0; v < g.n; ++v) {
        AdmissibilityResult r = is_admissible(g, v, oracle);
        if (chains) chains->push_back(r);
        if (r.value != Admissible::Yes) {
            all_yes = false;
            if (!chains) break;
        }
    }
    if (all_yes) return {true, "ADM-ALL", "all vertices admissible"};
    return no_verdict();
}

// Structural facts the shipped all-admissible shape must satisfy, under the
// labeling convention: parity 4-cliques {0,2,4,6} and {1,3,5,7}, special
// adjacent pair {0,6}.  Returns human-readable violations (empty = valid).
inline std::vector<std::string> all_admissible_shape_facts(const Graph& g) {
    std::vector<std::string> issues;
    if (g.n != 8) return {"order must be 8"};
    const std::vector<int> odd{0, 2, 4, 6}, even{1, 3, 5, 7};
    for (const auto& clique : {odd, even})
        if (!is_clique(g, clique)) issues.push_back("parity class is not a clique");
    if (!g.has_edge(0, 6)) {
        issues.push_back("special pair 0,6 not adjacent");
        return issues;  // later facts presume the special edge
    }
    for (const auto& [clique, other] : {std::make_pair(odd, even), std::make_pair(even, odd)})
        for (size_t i = 0; i < clique.size(); ++i)
            for (size_t j = i + 1; j < clique.size(); ++j) {
                int a = clique[i], b = clique[j];
                if ((a == 0 && b == 6) || (a == 6 && b == 0)) continue;
                bool found = false;
                for (int k : other)
                    if (!g.has_edge(a, k) && !g.has_edge(b, k)) { found = true; break; }
                if (!found)
                    issues.push_back("pair " + std::to_string(a) + "," + std::to_string(b) +
                                     " has no common opposite non-neighbor");
            }
    {
        Graph h = complement(delete_edges(g, {{0, 6}}));
        const int cycle[5] = {0, 6, 5, 4, 3};
        for (int i = 0; i < 5; ++i)
            if (!h.has_edge(cycle[i], cycle[(i + 1) % 5])) {
                issues.push_back("no 5-cycle in the complement after deleting edge 0-6");
                break;
            }
    }
    for (auto [a, b] : g.edges()) {
        if ((a % 2) != (b % 2)) {  // cross edge between parity classes
            Graph h = delete_edges(g, {{a, b}});
            if (diameter(h) != std::optional<int>(3))
                issues.push_back("cross-edge deletion " + std::to_string(a) + "-" +
                                 std::to_string(b) + " does not give diameter 3");
            for (int v = 0; v < h.n; ++v)
                if (h.degree(v) == 1)
                    issues.push_back("cross-edge deletion " + std::to_string(a) + "-" +
                                     std::to_string(b) + " leaves a degree-1 vertex");
        }
    }
    return issues;
}

}  // namespace pcdg
