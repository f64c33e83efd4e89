#ifndef LG3_GRAPH_HPP
#define LG3_GRAPH_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lg3 {

// Vertex counts are capped so one adjacency row always fits a machine word
// and the graph6 header is a single byte.
inline constexpr int kMaxVertices = 62;

// Simple undirected graph with dense vertex ids 0..n-1.
// adj[v] is the neighbor bitmask of v; the relation is kept symmetric and
// loop-free by the mutators. Equality is labeled equality; use
// are_isomorphic for structural comparison.
struct Graph {
    int n = 0;
    std::vector<std::uint64_t> adj;

    Graph() = default;
    explicit Graph(int vertex_count);

    bool has_edge(int u, int v) const { return adj[u] >> v & 1; }
    void add_edge(int u, int v);
    int degree(int v) const { return std::popcount(adj[v]); }
    int edge_count() const;
    std::uint64_t vertex_mask() const {
        return n == 0 ? 0 : ~std::uint64_t{0} >> (64 - n);
    }
    bool operator==(const Graph&) const = default;
};

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

Graph empty_graph(int n);
Graph complete(int n);
Graph cycle(int n);  // requires n >= 3
Graph path(int n);
Graph complete_bipartite(int m, int n);

Graph complement(const Graph& g);

// Keeps the edges inside vs; vertices are relabeled densely in ascending
// order of their original ids (duplicates in vs are collapsed).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vs);

Graph disjoint_union(const Graph& a, const Graph& b);

// When bipartite and coloring != nullptr, *coloring receives a proper
// 2-coloring (values 0/1, one entry per vertex).
bool is_bipartite(const Graph& g, std::vector<int>* coloring = nullptr);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);  // the empty graph counts as disconnected

std::vector<std::pair<int, int>> edges(const Graph& g);  // sorted, u < v
std::vector<int> isolated_vertices(const Graph& g);

// graph6 short form, one graph per line, no ">>graph6<<" headers.
struct Graph6Error : std::runtime_error {
    std::size_t offset;  // byte position in the input line
    Graph6Error(const std::string& what, std::size_t offset)
        : std::runtime_error(what), offset(offset) {}
};

Graph parse_graph6(std::string_view line);
std::string write_graph6(const Graph& g);

}  // namespace lg3

#endif
