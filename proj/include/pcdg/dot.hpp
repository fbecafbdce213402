#pragma once

#include <string>
#include <vector>

#include "pcdg/graph.hpp"

namespace pcdg {

// DOT output with vertices 0..n-1 in order; optional per-vertex labels.
inline std::string to_dot(const Graph& g, const std::string& name = "g",
                          const std::vector<std::string>& labels = {}) {
    std::string out = "graph \"" + name + "\" {\n";
    for (int v = 0; v < g.n; ++v) {
        out += "  " + std::to_string(v);
        if (v < int(labels.size())) out += " [label=\"" + labels[v] + "\"]";
        out += ";\n";
    }
    for (auto [a, b] : g.edges())
        out += "  " + std::to_string(a) + " -- " + std::to_string(b) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace pcdg
