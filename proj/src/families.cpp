#include <algorithm>
#include <stdexcept>

#include "lg3/canonical.hpp"
#include "lg3/families.hpp"

namespace lg3 {

const char* family_name(Family f) {
    switch (f) {
        case Family::cs1: return "cs1";
        case Family::cs2: return "cs2";
        case Family::cs3: return "cs3";
        case Family::b1: return "b1";
        case Family::b2: return "b2";
        case Family::b3: return "b3";
        case Family::b4: return "b4";
    }
    return "?";
}

namespace {

void require_pair_params(const char* who, int m, int n, int p) {
    if (!(p >= 0 && m >= 1 && n >= 1 && p < n && n <= m))
        throw std::invalid_argument(std::string(who) +
                                    " requires p < n <= m, p >= 0, m,n >= 1");
    if (m + n - 1 > kMaxVertices)
        throw std::invalid_argument(std::string(who) + " exceeds 62 vertices");
}

void require_n_param(const char* who, int n) {
    if (n < 0) throw std::invalid_argument(std::string(who) + " requires n >= 0");
    if (n + 6 > kMaxVertices)
        throw std::invalid_argument(std::string(who) + " exceeds 62 vertices");
}

}  // namespace

Graph gen_cs1() {
    // double star: adjacent centers 0 and 3, leaves 1,2 and 4,5
    return make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {3, 4}, {3, 5}});
}

Graph gen_cs2(int n) {
    require_n_param("cs2", n);
    // X = {0,1,2}, T = {3..n+2}, D = {n+3..n+5}; X-T complete, X-D a matching
    Graph g(n + 6);
    for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < n; ++j) g.add_edge(i, 3 + j);
        g.add_edge(i, n + 3 + i);
    }
    return g;
}

Graph gen_cs3(int m, int n, int p) {
    require_pair_params("cs3", m, n, p);
    // T1 = a_1..a_p, T2 = b_1..b_{m-p-1}, D1 = c_1..c_p, D2 = e_1..e_{n-p-1},
    // plus an edgeless vertex u. a_i misses exactly c_i in D1+D2; T2 sees all.
    const int t1 = p, t2 = m - p - 1, d1 = p, d2 = n - p - 1;
    Graph g(m + n - 1);
    const int doff = t1 + t2;
    for (int i = 0; i < t1; ++i)
        for (int j = 0; j < d1 + d2; ++j)
            if (j != i) g.add_edge(i, doff + j);
    for (int i = 0; i < t2; ++i)
        for (int j = 0; j < d1 + d2; ++j) g.add_edge(t1 + i, doff + j);
    return g;
}

Graph gen_b1() {
    return make_graph(7, {{0, 1},
                          {0, 2},
                          {0, 3},
                          {0, 4},
                          {1, 2},
                          {1, 4},
                          {1, 5},
                          {2, 3},
                          {2, 6},
                          {3, 4},
                          {3, 6},
                          {4, 5}});
}

Graph gen_b2() {
    // K5 on 0..4, pendant-ish 5 on {0,4}, triangle 6,7,8 tied back by
    // 1-6, 2-6, 1-7, 3-7, 2-8, 3-8
    Graph g(9);
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) g.add_edge(u, v);
    g.add_edge(0, 5);
    g.add_edge(4, 5);
    g.add_edge(6, 7);
    g.add_edge(6, 8);
    g.add_edge(7, 8);
    g.add_edge(1, 6);
    g.add_edge(2, 6);
    g.add_edge(1, 7);
    g.add_edge(3, 7);
    g.add_edge(2, 8);
    g.add_edge(3, 8);
    return g;
}

Graph gen_b3(int n) {
    require_n_param("b3", n);
    // clique on 0..n+2 with designated 0,1,2; outer triangle n+3,n+4,n+5
    // attached to the pairs {0,1}, {1,2}, {0,2}
    Graph g(n + 6);
    for (int u = 0; u < n + 3; ++u)
        for (int v = u + 1; v < n + 3; ++v) g.add_edge(u, v);
    const int a = n + 3, b = n + 4, c = n + 5;
    g.add_edge(a, b);
    g.add_edge(a, c);
    g.add_edge(b, c);
    g.add_edge(a, 0);
    g.add_edge(a, 1);
    g.add_edge(b, 1);
    g.add_edge(b, 2);
    g.add_edge(c, 0);
    g.add_edge(c, 2);
    return g;
}

Graph gen_b4(int m, int n, int p) {
    require_pair_params("b4", m, n, p);
    // K_m on {0} + {1..m-1} and K_n on {0} + {m..m+n-2} share vertex 0;
    // matching i -- (m-1+i) for i = 1..p
    Graph g(m + n - 1);
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) g.add_edge(u, v);
    for (int u = m; u < m + n - 1; ++u) {
        g.add_edge(0, u);
        for (int v = u + 1; v < m + n - 1; ++v) g.add_edge(u, v);
    }
    for (int i = 1; i <= p; ++i) g.add_edge(i, m - 1 + i);
    return g;
}

Graph gen_family(const FamilyParams& params) {
    switch (params.family) {
        case Family::cs1: return gen_cs1();
        case Family::cs2: return gen_cs2(params.n);
        case Family::cs3: return gen_cs3(params.m, params.n, params.p);
        case Family::b1: return gen_b1();
        case Family::b2: return gen_b2();
        case Family::b3: return gen_b3(params.n);
        case Family::b4: return gen_b4(params.m, params.n, params.p);
    }
    throw std::invalid_argument("unknown family");
}

namespace {

Membership yes_with(Family f, int m, int n, int p, std::vector<int> embedding) {
    Membership r;
    r.verdict = Verdict::yes;
    r.witness = FamilyParams{f, m, n, p};
    r.embedding = std::move(embedding);
    return r;
}

constexpr int kSearchBudgetVertices = 20;

}  // namespace

Membership member_cs_family(const Graph& g) {
    if (g.n > kSearchBudgetVertices) return {Verdict::undecided, {}, {}};
    std::vector<int> w;
    // every family member is bipartite, so induced subgraphs are too
    if (!is_bipartite(g)) return {};
    if (contains_induced(gen_cs1(), g, &w)) return yes_with(Family::cs1, 0, 0, 0, w);
    // cs2(n) is induced in cs2(n+1): the parameter g.n is enough
    for (int n = std::max(0, g.n - 6); n <= g.n; ++n)
        if (contains_induced(gen_cs2(n), g, &w)) return yes_with(Family::cs2, 0, n, 0, w);
    for (int size = g.n; size <= 2 * g.n + 2; ++size)
        for (int m = 1; m <= size; ++m) {
            const int n = size + 1 - m;
            if (n < 1 || n > m) continue;
            for (int p = 0; p < n; ++p)
                if (contains_induced(gen_cs3(m, n, p), g, &w))
                    return yes_with(Family::cs3, m, n, p, w);
        }
    return {};
}

Membership member_b_family(const Graph& g) {
    if (g.n > kSearchBudgetVertices) return {Verdict::undecided, {}, {}};
    std::vector<int> w;
    if (contains_induced(gen_b1(), g, &w)) return yes_with(Family::b1, 0, 0, 0, w);
    if (contains_induced(gen_b2(), g, &w)) return yes_with(Family::b2, 0, 0, 0, w);
    for (int n = std::max(0, g.n - 6); n <= g.n; ++n)
        if (contains_induced(gen_b3(n), g, &w)) return yes_with(Family::b3, 0, n, 0, w);
    for (int size = g.n; size <= 2 * g.n + 2; ++size)
        for (int m = 1; m <= size; ++m) {
            const int n = size + 1 - m;
            if (n < 1 || n > m) continue;
            for (int p = 0; p < n; ++p)
                if (contains_induced(gen_b4(m, n, p), g, &w))
                    return yes_with(Family::b4, m, n, p, w);
        }
    return {};
}

}  // namespace lg3
