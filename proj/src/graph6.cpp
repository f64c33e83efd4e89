#include "lg3/graph.hpp"

namespace lg3 {

namespace {
constexpr int kBias = 63;  // printable offset; valid bytes are 63..126
}

Graph parse_graph6(std::string_view line) {
    if (line.empty()) throw Graph6Error("empty graph6 line", 0);
    unsigned char head = static_cast<unsigned char>(line[0]);
    if (head == 126)
        throw Graph6Error("multi-byte vertex count (n >= 63) not supported", 0);
    if (head < kBias || head > 126)
        throw Graph6Error("byte outside graph6 range 63..126", 0);
    int n = head - kBias;
    Graph g(n);

    std::size_t bits_needed = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t body_len = (bits_needed + 5) / 6;
    if (line.size() < 1 + body_len)
        throw Graph6Error("truncated graph6 body: need " +
                              std::to_string(body_len) + " body bytes",
                          line.size());
    if (line.size() > 1 + body_len)
        throw Graph6Error("trailing data after graph6 body", 1 + body_len);

    std::size_t bit = 0;
    for (std::size_t i = 0; i < body_len; ++i) {
        unsigned char c = static_cast<unsigned char>(line[1 + i]);
        if (c < kBias || c > 126)
            throw Graph6Error("byte outside graph6 range 63..126", 1 + i);
        int group = c - kBias;
        for (int k = 5; k >= 0; --k, ++bit) {
            int b = group >> k & 1;
            if (bit < bits_needed) {
                if (b) {
                    // column-major upper triangle: bit index -> (u, v), u < v
                    std::size_t t = bit;
                    int v = 1;
                    while (t >= static_cast<std::size_t>(v)) {
                        t -= v;
                        ++v;
                    }
                    g.add_edge(static_cast<int>(t), v);
                }
            } else if (b) {
                throw Graph6Error("nonzero padding bits", 1 + i);
            }
        }
    }
    return g;
}

std::string write_graph6(const Graph& g) {
    std::string out;
    out.push_back(static_cast<char>(g.n + kBias));
    int group = 0, filled = 0;
    for (int v = 1; v < g.n; ++v) {
        for (int u = 0; u < v; ++u) {
            group = group << 1 | (g.has_edge(u, v) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + kBias));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0)
        out.push_back(static_cast<char>((group << (6 - filled)) + kBias));
    return out;
}

}  // namespace lg3
