#include "lg3/graph.hpp"

#include <algorithm>

namespace lg3 {

Graph::Graph(int vertex_count) {
    if (vertex_count < 0 || vertex_count > kMaxVertices)
        throw std::invalid_argument("vertex count must be in 0.." +
                                    std::to_string(kMaxVertices) + ", got " +
                                    std::to_string(vertex_count));
    n = vertex_count;
    adj.assign(static_cast<std::size_t>(n), 0);
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::invalid_argument("edge endpoint out of range: (" +
                                    std::to_string(u) + "," + std::to_string(v) +
                                    ") with n=" + std::to_string(n));
    if (u == v)
        throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    adj[u] |= std::uint64_t{1} << v;
    adj[v] |= std::uint64_t{1} << u;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n; ++v) twice += degree(v);
    return twice / 2;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

Graph complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g(n);
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n) {
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph complete_bipartite(int m, int n) {
    Graph g(m + n);
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < n; ++v) g.add_edge(u, m + v);
    return g;
}

Graph complement(const Graph& g) {
    Graph c(g.n);
    for (int v = 0; v < g.n; ++v)
        c.adj[v] = ~g.adj[v] & g.vertex_mask() & ~(std::uint64_t{1} << v);
    return c;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    std::vector<int> picked(vs);
    for (int v : picked)
        if (v < 0 || v >= g.n)
            throw std::invalid_argument("induced_subgraph: vertex " +
                                        std::to_string(v) + " out of range");
    std::sort(picked.begin(), picked.end());
    picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
    Graph s(static_cast<int>(picked.size()));
    for (std::size_t i = 0; i < picked.size(); ++i)
        for (std::size_t j = i + 1; j < picked.size(); ++j)
            if (g.has_edge(picked[i], picked[j]))
                s.add_edge(static_cast<int>(i), static_cast<int>(j));
    return s;
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.n + b.n > kMaxVertices)
        throw std::invalid_argument("disjoint_union exceeds " +
                                    std::to_string(kMaxVertices) + " vertices");
    Graph u(a.n + b.n);
    for (int v = 0; v < a.n; ++v) u.adj[v] = a.adj[v];
    for (int v = 0; v < b.n; ++v) u.adj[a.n + v] = b.adj[v] << a.n;
    return u;
}

bool is_bipartite(const Graph& g, std::vector<int>* coloring) {
    std::vector<int> color(static_cast<std::size_t>(g.n), -1);
    std::vector<int> stack;
    for (int start = 0; start < g.n; ++start) {
        if (color[start] != -1) continue;
        color[start] = 0;
        stack.push_back(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            std::uint64_t nbrs = g.adj[v];
            while (nbrs) {
                int w = std::countr_zero(nbrs);
                nbrs &= nbrs - 1;
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    stack.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    if (coloring) *coloring = std::move(color);
    return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(static_cast<std::size_t>(g.n), false);
    std::vector<int> stack;
    for (int start = 0; start < g.n; ++start) {
        if (seen[start]) continue;
        seen[start] = true;
        stack.push_back(start);
        std::vector<int> comp;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.push_back(v);
            std::uint64_t nbrs = g.adj[v];
            while (nbrs) {
                int w = std::countr_zero(nbrs);
                nbrs &= nbrs - 1;
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) {
    return connected_components(g).size() == 1;
}

std::vector<std::pair<int, int>> edges(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < g.n; ++u) {
        std::uint64_t rest = g.adj[u] >> (u + 1) << (u + 1);
        while (rest) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            out.emplace_back(u, v);
        }
    }
    return out;
}

std::vector<int> isolated_vertices(const Graph& g) {
    std::vector<int> out;
    for (int v = 0; v < g.n; ++v)
        if (g.adj[v] == 0) out.push_back(v);
    return out;
}

}  // namespace lg3
