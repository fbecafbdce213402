#pragma once

#include <stdexcept>
#include <string>

#include "pcdg/graph.hpp"

namespace pcdg {

class graph6_error : public std::runtime_error {
public:
    graph6_error(const std::string& what, size_t offset)
        : std::runtime_error(what + " (byte " + std::to_string(offset) + ")"),
          byte_offset(offset) {}
    size_t byte_offset;
};

// Standard graph6: one byte n+63 (n < 63), then the column-major upper
// triangle bits (0,1),(0,2),(1,2),(0,3),... packed into 6-bit chunks + 63.
inline std::string encode_graph6(const Graph& g) {
    std::string out;
    out.push_back(char(g.n + 63));
    int acc = 0, nbits = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(char(acc + 63));
                acc = nbits = 0;
            }
        }
    }
    if (nbits) out.push_back(char((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph decode_graph6(const std::string& s) {
    if (s.empty()) throw graph6_error("empty graph6 string", 0);
    int n = s[0] - 63;
    if (n < 0 || n > Graph::max_vertices)
        throw graph6_error("unsupported graph6 order byte", 0);
    int m = n * (n - 1) / 2;
    size_t need = 1 + size_t((m + 5) / 6);
    if (s.size() != need)
        throw graph6_error(s.size() < need ? "truncated graph6 string"
                                           : "trailing bytes in graph6 string",
                           std::min(s.size(), need));
    Graph g(n);
    int idx = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++idx) {
            int c = s[1 + idx / 6] - 63;
            if (c < 0 || c > 63)
                throw graph6_error("byte outside graph6 alphabet", size_t(1 + idx / 6));
            if ((c >> (5 - idx % 6)) & 1) {
                g.adj[i] |= uint16_t(1u << j);
                g.adj[j] |= uint16_t(1u << i);
            }
        }
    }
    if (m % 6) {
        int c = s.back() - 63;
        if (c & ((1 << (6 - m % 6)) - 1))
            throw graph6_error("nonzero padding bits", s.size() - 1);
    }
    return g;
}

}  // namespace pcdg
