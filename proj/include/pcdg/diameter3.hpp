#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "pcdg/conditions.hpp"
#include "pcdg/graph.hpp"

namespace pcdg {

// Four-way partition of a diameter-3 graph relative to a vertex p with an
// antipode q at distance 3: rho4 = distance 3 from p, rho3 = distance 2,
// rho2 = neighbors of p with a rho3 neighbor, rho1 = {p} plus the rest of
// p's neighborhood.
struct RhoPartition {
    int p, q;
    std::vector<int> rho1, rho2, rho3, rho4;
};

inline RhoPartition rho_partition(const Graph& g, int p, int q) {
    auto dist = distances_from(g, p);
    if (q < 0 || q >= g.n || dist[q] != 3)
        throw std::invalid_argument("rho_partition requires distance(p,q) == 3");
    RhoPartition rp{p, q, {}, {}, {}, {}};
    for (int v = 0; v < g.n; ++v) {
        if (dist[v] >= kUnreachable) throw std::invalid_argument("graph must be connected");
        if (dist[v] == 3) rp.rho4.push_back(v);
        else if (dist[v] == 2) rp.rho3.push_back(v);
    }
    for (int v = 0; v < g.n; ++v) {
        if (dist[v] > 1) continue;
        bool touches_rho3 = false;
        for (int u : rp.rho3)
            if (g.has_edge(v, u)) { touches_rho3 = true; break; }
        (v != p && touches_rho3 ? rp.rho2 : rp.rho1).push_back(v);
    }
    if (rp.rho1.empty() || rp.rho2.empty() || rp.rho3.empty() || rp.rho4.empty())
        throw std::logic_error("rho partition cell unexpectedly empty");
    return rp;
}

enum class Diameter3Reason { Rho3TooSmall, GrowthViolated };

struct Diameter3Result {
    bool eliminated = false;
    Diameter3Reason reason = Diameter3Reason::Rho3TooSmall;
    int p = -1, q = -1;  // witnessing labeling when eliminated
};

enum class LabelingMode {
    AnyLabeling,         // a violation under any convention-respecting labeling eliminates
    ConventionMinimal,   // evaluate only the labeling(s) minimizing |rho1 u rho2|
};

// Necessary conditions on diameter-3 graphs: |rho3| >= 3, and
// |rho3 u rho4| >= 2^{|rho1 u rho2|}, evaluated over distance-3 labelings
// with |rho1 u rho2| <= |rho3 u rho4|.
inline Diameter3Result diameter3_test(const Graph& g,
                                      LabelingMode mode = LabelingMode::AnyLabeling) {
    if (diameter(g) != std::optional<int>(3))
        throw std::invalid_argument("diameter3_test requires diameter 3");
    if (!odd_cycle_free_complement(g))
        throw std::invalid_argument("diameter3_test requires an odd-cycle-free complement");

    auto evaluate = [&](int p, int q) -> std::optional<Diameter3Result> {
        RhoPartition rp = rho_partition(g, p, q);
        int near = int(rp.rho1.size() + rp.rho2.size());
        int far = int(rp.rho3.size() + rp.rho4.size());
        if (near > far) return std::nullopt;  // labeling excluded by convention
        if (int(rp.rho3.size()) < 3)
            return Diameter3Result{true, Diameter3Reason::Rho3TooSmall, p, q};
        if (far < (1 << near))
            return Diameter3Result{true, Diameter3Reason::GrowthViolated, p, q};
        return Diameter3Result{false, Diameter3Reason::Rho3TooSmall, p, q};
    };

    for (int p = 0; p < g.n; ++p) {
        auto dist = distances_from(g, p);
        for (int q = p + 1; q < g.n; ++q) {
            if (dist[q] != 3) continue;
            std::vector<std::pair<int, int>> labelings{{p, q}, {q, p}};
            if (mode == LabelingMode::ConventionMinimal) {
                auto near_size = [&](int base) {
                    auto d = distances_from(g, base);
                    int c = 0;
                    for (int v = 0; v < g.n; ++v) c += d[v] <= 1;
                    return c;
                };
                int np = near_size(p), nq = near_size(q);
                if (np < nq) labelings = {{p, q}};
                else if (nq < np) labelings = {{q, p}};
            }
            for (auto [a, b] : labelings)
                if (auto r = evaluate(a, b); r && r->eliminated) return *r;
        }
    }
    return {};
}

}  // namespace pcdg
