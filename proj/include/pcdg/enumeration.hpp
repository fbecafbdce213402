#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcdg/canonical.hpp"
#include "pcdg/graph.hpp"

namespace pcdg {

// One representative per isomorphism class of simple graphs of order n,
// generated by vertex augmentation from the order n-1 classes and
// deduplicated by canonical key.  Yield order: sorted by canonical key.
inline const std::vector<Graph>& graph_classes(int n) {
    if (n < 0 || n > 10) throw std::out_of_range("enumeration order out of range");
    static std::vector<std::vector<Graph>> levels = {{Graph(0)}};
    while (int(levels.size()) <= n) {
        int k = int(levels.size()) - 1;  // parent order
        std::map<CanonicalKey, Graph> next;
        for (const Graph& parent : levels.back()) {
            for (uint32_t mask = 0; mask < (1u << k); ++mask) {
                Graph child(k + 1);
                for (int v = 0; v < k; ++v)
                    child.adj[v] = uint16_t(parent.adj[v] | (((mask >> v) & 1u) << k));
                child.adj[k] = uint16_t(mask);
                Graph canon = canonical_form(child);
                next.emplace(encode_graph6(canon), canon);
            }
        }
        std::vector<Graph> level;
        level.reserve(next.size());
        for (auto& [key, g] : next) level.push_back(g);
        levels.push_back(std::move(level));
    }
    return levels[n];
}

// Streaming view over the classes of one order.
class GraphStream {
public:
    explicit GraphStream(int n) : classes_(&graph_classes(n)) {}
    const Graph* next() {
        if (pos_ >= classes_->size()) return nullptr;
        return &(*classes_)[pos_++];
    }
    size_t total() const { return classes_->size(); }

private:
    const std::vector<Graph>* classes_;
    size_t pos_ = 0;
};

}  // namespace pcdg
