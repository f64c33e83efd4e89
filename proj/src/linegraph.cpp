#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>

#include "lg3/canonical.hpp"
#include "lg3/linegraph.hpp"

namespace lg3 {

Graph line_graph(const Graph& g) {
    const auto es = edges(g);
    if (static_cast<int>(es.size()) > kMaxVertices)
        throw std::invalid_argument("line_graph: more than 62 edges");
    Graph l(static_cast<int>(es.size()));
    for (std::size_t i = 0; i < es.size(); ++i)
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const auto [a, b] = es[i];
            const auto [c, d] = es[j];
            if (a == c || a == d || b == c || b == d)
                l.add_edge(static_cast<int>(i), static_cast<int>(j));
        }
    return l;
}

namespace {

// Backtracking over the block containing the first uncovered edge. Candidate
// blocks are all cliques through that edge whose internal edges are uncovered
// and whose members sit in fewer than two blocks.
struct KrauszSearch {
    const Graph& g;
    const int limit;
    std::vector<std::vector<char>> covered;
    std::vector<int> block_count;
    std::vector<std::vector<int>> blocks;
    std::vector<KrauszPartition> found;

    KrauszSearch(const Graph& graph, int lim)
        : g(graph),
          limit(lim),
          covered(graph.n, std::vector<char>(graph.n, 0)),
          block_count(graph.n, 0) {}

    bool done() const {
        return limit > 0 && static_cast<int>(found.size()) >= limit;
    }

    bool first_uncovered(int& u, int& v) const {
        for (u = 0; u < g.n; ++u)
            for (v = u + 1; v < g.n; ++v)
                if (g.has_edge(u, v) && !covered[u][v]) return true;
        return false;
    }

    void record() {
        KrauszPartition p{blocks};
        for (auto& b : p.blocks) std::sort(b.begin(), b.end());
        std::sort(p.blocks.begin(), p.blocks.end());
        found.push_back(std::move(p));
    }

    void place(std::vector<int> blk) {
        for (std::size_t i = 0; i < blk.size(); ++i)
            for (std::size_t j = i + 1; j < blk.size(); ++j)
                covered[blk[i]][blk[j]] = covered[blk[j]][blk[i]] = 1;
        for (int x : blk) ++block_count[x];
        blocks.push_back(blk);
        solve();
        blocks.pop_back();
        for (int x : blk) --block_count[x];
        for (std::size_t i = 0; i < blk.size(); ++i)
            for (std::size_t j = i + 1; j < blk.size(); ++j)
                covered[blk[i]][blk[j]] = covered[blk[j]][blk[i]] = 0;
    }

    void extend(std::vector<int>& chosen, const std::vector<int>& cand,
                std::size_t idx) {
        if (done()) return;
        place(chosen);
        for (std::size_t i = idx; i < cand.size() && !done(); ++i) {
            const int w = cand[i];
            bool ok = true;
            for (std::size_t t = 2; t < chosen.size(); ++t)
                if (!g.has_edge(w, chosen[t]) || covered[w][chosen[t]]) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            chosen.push_back(w);
            extend(chosen, cand, i + 1);
            chosen.pop_back();
        }
    }

    void solve() {
        if (done()) return;
        int u, v;
        if (!first_uncovered(u, v)) {
            record();
            return;
        }
        if (block_count[u] >= 2 || block_count[v] >= 2) return;
        std::vector<int> cand;
        std::uint64_t common = g.adj[u] & g.adj[v];
        while (common) {
            const int w = std::countr_zero(common);
            common &= common - 1;
            if (block_count[w] < 2 && !covered[u][w] && !covered[v][w])
                cand.push_back(w);
        }
        std::vector<int> chosen{u, v};
        extend(chosen, cand, 0);
    }
};

}  // namespace

std::vector<KrauszPartition> krausz_partitions(const Graph& g, int limit) {
    if (g.edge_count() == 0) return {KrauszPartition{}};
    KrauszSearch s(g, limit);
    s.solve();
    return std::move(s.found);
}

bool is_line_graph(const Graph& g) {
    return !krausz_partitions(g, 1).empty();
}

bool is_valid_krausz(const Graph& g, const KrauszPartition& p) {
    std::vector<std::vector<char>> covered(g.n, std::vector<char>(g.n, 0));
    std::vector<int> count(g.n, 0);
    for (const auto& b : p.blocks) {
        if (b.size() < 2) return false;
        for (int x : b)
            if (x < 0 || x >= g.n) return false;
        for (std::size_t i = 0; i < b.size(); ++i)
            for (std::size_t j = i + 1; j < b.size(); ++j) {
                if (b[i] == b[j] || !g.has_edge(b[i], b[j])) return false;
                if (covered[b[i]][b[j]]) return false;
                covered[b[i]][b[j]] = covered[b[j]][b[i]] = 1;
            }
        for (int x : b)
            if (++count[x] > 2) return false;
    }
    for (int u = 0; u < g.n; ++u)
        for (int v = u + 1; v < g.n; ++v)
            if (g.has_edge(u, v) && !covered[u][v]) return false;
    return true;
}

std::vector<Graph> root_graphs(const Graph& g) {
    std::set<std::string> seen;
    std::vector<std::pair<std::string, Graph>> out;
    for (const auto& part : krausz_partitions(g)) {
        std::vector<int> block_count(g.n, 0);
        for (const auto& b : part.blocks)
            for (int x : b) ++block_count[x];

        int extra = 0;  // pendant vertex per block-degree-1 vertex, K2 per isolated
        for (int v = 0; v < g.n; ++v) {
            if (block_count[v] == 1) ++extra;
            if (block_count[v] == 0 && g.degree(v) == 0) extra += 2;
        }
        const int nb = static_cast<int>(part.blocks.size());
        if (nb + extra > kMaxVertices)
            throw std::invalid_argument("root_graphs: root exceeds 62 vertices");

        Graph h(nb + extra);
        std::vector<int> first_block(g.n, -1), second_block(g.n, -1);
        for (int bi = 0; bi < nb; ++bi)
            for (int x : part.blocks[bi])
                (first_block[x] < 0 ? first_block[x] : second_block[x]) = bi;
        int next = nb;
        for (int v = 0; v < g.n; ++v) {
            if (block_count[v] == 2)
                h.add_edge(first_block[v], second_block[v]);
            else if (block_count[v] == 1)
                h.add_edge(first_block[v], next++);
            else if (g.degree(v) == 0) {
                h.add_edge(next, next + 1);
                next += 2;
            }
        }
        std::string form = canonical_form(h).bytes;
        if (seen.insert(form).second) out.emplace_back(std::move(form), std::move(h));
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<Graph> roots;
    roots.reserve(out.size());
    for (auto& [form, h] : out) roots.push_back(std::move(h));
    return roots;
}

}  // namespace lg3
