#ifndef LG3_TEST_HELPERS_HPP
#define LG3_TEST_HELPERS_HPP

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "lg3/graph.hpp"

namespace lg3::testing {

inline Graph random_graph(std::mt19937_64& rng, int n, double p = 0.5) {
    Graph g(n);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// Random graph with at most max_edges edges (uniform subset of that size).
inline Graph random_sparse_graph(std::mt19937_64& rng, int n, int max_edges) {
    std::vector<std::pair<int, int>> all;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) all.emplace_back(u, v);
    std::shuffle(all.begin(), all.end(), rng);
    int m = std::uniform_int_distribution<int>(
        0, std::min<int>(max_edges, static_cast<int>(all.size())))(rng);
    all.resize(m);
    return make_graph(n, all);
}

// Connected: random spanning tree plus extra random edges.
inline Graph random_connected_graph(std::mt19937_64& rng, int n, int extra_edges) {
    Graph g(n);
    for (int v = 1; v < n; ++v)
        g.add_edge(v, std::uniform_int_distribution<int>(0, v - 1)(rng));
    for (int k = 0; k < extra_edges; ++k) {
        int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
        int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
        if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
    }
    return g;
}

inline Graph permuted(const Graph& g, const std::vector<int>& perm) {
    Graph h(g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v)) h.add_edge(perm[u], perm[v]);
    return h;
}

inline Graph random_relabeling(std::mt19937_64& rng, const Graph& g) {
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return permuted(g, perm);
}

// Exhaustive permutation search; usable up to n ~ 8.
inline bool brute_force_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(a.n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < a.n && ok; ++u)
            for (int v = u + 1; v < a.n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Exhaustive subset+permutation check of induced containment; host.n <= ~8.
inline bool brute_force_contains_induced(const Graph& host, const Graph& pattern) {
    if (pattern.n > host.n) return false;
    std::vector<int> pick;
    auto choose = [&](auto&& self, int from) -> bool {
        if (static_cast<int>(pick.size()) == pattern.n)
            return brute_force_isomorphic(induced_subgraph(host, pick), pattern);
        for (int v = from; v < host.n; ++v) {
            pick.push_back(v);
            if (self(self, v + 1)) return true;
            pick.pop_back();
        }
        return false;
    };
    return choose(choose, 0);
}

// Bipartiteness via odd closed walks: tr(A^k) > 0 for some odd k <= n.
// Independent of the BFS 2-coloring in the library.
inline bool has_odd_closed_walk(const Graph& g) {
    int n = g.n;
    std::vector<std::vector<long long>> a(n, std::vector<long long>(n, 0)), p = a;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) p[u][v] = a[u][v] = g.has_edge(u, v) ? 1 : 0;
    for (int k = 1; k <= n; ++k) {
        if (k % 2 == 1) {
            long long tr = 0;
            for (int i = 0; i < n; ++i) tr += p[i][i];
            if (tr > 0) return true;
        }
        std::vector<std::vector<long long>> q(n, std::vector<long long>(n, 0));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                if (p[i][l])
                    for (int j = 0; j < n; ++j) q[i][j] += p[i][l] * a[l][j];
        p = std::move(q);
    }
    return false;
}

inline int triangle_count(const Graph& g) {
    int count = 0;
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v))
                count += std::popcount(g.adj[u] & g.adj[v] &
                                       ~((std::uint64_t{2} << v) - 1));
    return count;
}

}  // namespace lg3::testing

#endif
