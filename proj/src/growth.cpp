#include <algorithm>
#include <bit>
#include <cstdint>
#include <iterator>
#include <set>
#include <stdexcept>
#include <utility>

#include "lg3/growth.hpp"
#include "lg3/spectra.hpp"

namespace lg3 {

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

std::uint64_t mask_of(const std::vector<int>& vs) {
    std::uint64_t m = 0;
    for (int v : vs) m |= bit(v);
    return m;
}

int block_degree(const KrauszPartition& part, int v) {
    int d = 0;
    for (const auto& b : part.blocks)
        d += std::binary_search(b.begin(), b.end(), v);
    return d;
}

Graph with_vertex(const Graph& g, std::uint64_t nbrs) {
    Graph out(g.n + 1);
    for (int u = 0; u < g.n; ++u) out.adj[u] = g.adj[u];
    for (std::uint64_t rest = nbrs; rest;) {
        const int w = std::countr_zero(rest);
        rest &= rest - 1;
        out.add_edge(g.n, w);
    }
    return out;
}

void normalize(KrauszPartition& p) {
    for (auto& b : p.blocks) std::sort(b.begin(), b.end());
    std::sort(p.blocks.begin(), p.blocks.end());
}

struct CliqueSlot {
    std::uint64_t mask = 0;
    int block_index = -1;  // -1: a free slot at a vertex in fewer than two blocks
    int vertex = -1;       // that vertex, when block_index < 0
};

// Partition blocks plus one singleton slot per vertex in fewer than two
// blocks. In root-graph terms these are the stars of the root's vertices,
// with leaves and fresh endpoints contributing the singletons.
std::vector<CliqueSlot> clique_slots(const Graph& g, const KrauszPartition& part) {
    std::vector<CliqueSlot> slots;
    for (int i = 0; i < static_cast<int>(part.blocks.size()); ++i)
        slots.push_back({mask_of(part.blocks[i]), i, -1});
    for (int v = 0; v < g.n; ++v)
        if (block_degree(part, v) <= 1) slots.push_back({bit(v), -1, v});
    return slots;
}

void join_block(KrauszPartition& part, const CliqueSlot& slot, int x) {
    if (slot.block_index >= 0)
        part.blocks[slot.block_index].push_back(x);
    else
        part.blocks.push_back({slot.vertex, x});
}

int nontrivial_components(const Graph& g) {
    int count = 0;
    for (const auto& comp : connected_components(g)) count += comp.size() > 1;
    return count;
}

// Independent 3-sets containing every isolated vertex: exactly the triples
// that can play the original 3K1 on some growth path reaching g (new vertices
// always arrive with an edge, so only original roots can sit isolated).
std::vector<std::uint64_t> root_triples(const Graph& g) {
    std::uint64_t iso = 0;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) == 0) iso |= bit(v);
    std::vector<std::uint64_t> out;
    for (int a = 0; a < g.n; ++a)
        for (int b = a + 1; b < g.n; ++b) {
            if (g.has_edge(a, b)) continue;
            for (int c = b + 1; c < g.n; ++c) {
                if (g.has_edge(a, c) || g.has_edge(b, c)) continue;
                const std::uint64_t m = bit(a) | bit(b) | bit(c);
                if ((iso & ~m) == 0) out.push_back(m);
            }
        }
    return out;
}

}  // namespace

GrownState initial_state() { return {empty_graph(3), {0, 1, 2}, {}}; }

std::vector<GrownState> vertex_moves(const GrownState& s) {
    std::vector<GrownState> out;
    const Graph& g = s.graph;
    if (g.n >= kMaxVertices) return out;
    const int x = g.n;
    const std::vector<CliqueSlot> slots = clique_slots(g, s.partition);

    const auto emit = [&](std::uint64_t nbrs, KrauszPartition part) {
        Graph grown = with_vertex(g, nbrs);
        if (!lambda3_nonpositive(grown)) return;
        normalize(part);
        for (const GrownState& seen : out)
            if (seen.graph.adj == grown.adj && seen.partition == part) return;
        out.push_back({std::move(grown), s.roots, std::move(part)});
    };

    // M1: extend one block; on a free slot this is the pendant move
    for (const CliqueSlot& slot : slots) {
        KrauszPartition part = s.partition;
        join_block(part, slot, x);
        emit(slot.mask, std::move(part));
    }

    // M2: the new vertex glues two vertex-disjoint cliques (edges between
    // them are fine: those stay covered by their old blocks)
    for (std::size_t i = 0; i < slots.size(); ++i)
        for (std::size_t j = i + 1; j < slots.size(); ++j) {
            if (slots[i].mask & slots[j].mask) continue;
            KrauszPartition part = s.partition;
            join_block(part, slots[i], x);
            join_block(part, slots[j], x);
            emit(slots[i].mask | slots[j].mask, std::move(part));
        }
    return out;
}

std::vector<GrownState> edge_moves(const GrownState& s) {
    std::vector<GrownState> out;
    const Graph& g = s.graph;
    const auto is_root = [&](int v) {
        return v == s.roots[0] || v == s.roots[1] || v == s.roots[2];
    };
    for (int u = 0; u < g.n; ++u) {
        if (block_degree(s.partition, u) > 1) continue;
        for (int w = u + 1; w < g.n; ++w) {
            if (g.has_edge(u, w)) continue;
            if (block_degree(s.partition, w) > 1) continue;
            if (is_root(u) && is_root(w)) continue;
            Graph grown = g;
            grown.add_edge(u, w);
            if (!lambda3_nonpositive(grown)) continue;
            KrauszPartition part = s.partition;
            part.blocks.push_back({u, w});
            normalize(part);
            out.push_back({std::move(grown), s.roots, std::move(part)});
        }
    }
    return out;
}

EnumerationReport enumerate_to(int target_n, GrowthPolicy policy) {
    if (target_n < 3 || target_n > 13)
        throw std::invalid_argument("growth target must lie in 3..13");
    EnumerationReport report;
    report.target_n = target_n;
    report.policy = policy;

    std::map<std::string, Graph> level;
    {
        const Graph start = initial_state().graph;
        level.emplace(canonical_form(start).bytes, canonical_graph(start));
    }
    const auto store_level = [&](int k) {
        auto& dst = report.levels[k];
        for (const auto& [bytes, graph] : level) dst.push_back(graph);
    };
    store_level(3);

    for (int k = 3; k < target_n; ++k) {
        std::map<std::string, Graph> next;
        std::set<std::string> rejected;
        std::vector<Graph> fresh;  // accepted and awaiting edge expansion

        const auto consider = [&](const Graph& candidate) {
            if (policy == GrowthPolicy::single_component &&
                nontrivial_components(candidate) > 1)
                return;
            const std::string bytes = canonical_form(candidate).bytes;
            if (next.count(bytes) || rejected.count(bytes)) return;
            if (!lambda3_nonpositive(candidate)) {
                rejected.insert(bytes);
                return;
            }
            Graph canon = canonical_graph(candidate);
            fresh.push_back(canon);
            next.emplace(bytes, std::move(canon));
        };

        // vertex moves, over every Krausz partition of every survivor
        for (const auto& [bytes, g] : level) {
            std::set<std::uint64_t> nbr_masks;
            for (const KrauszPartition& part : krausz_partitions(g)) {
                const std::vector<CliqueSlot> slots = clique_slots(g, part);
                for (const CliqueSlot& slot : slots) nbr_masks.insert(slot.mask);
                for (std::size_t i = 0; i < slots.size(); ++i)
                    for (std::size_t j = i + 1; j < slots.size(); ++j)
                        if (!(slots[i].mask & slots[j].mask))
                            nbr_masks.insert(slots[i].mask | slots[j].mask);
            }
            for (std::uint64_t m : nbr_masks) consider(with_vertex(g, m));
        }

        // close the level under edge additions; a graph-level edge is allowed
        // when some partition leaves both endpoints in at most one block and
        // some root triple avoids having both endpoints
        while (!fresh.empty()) {
            const Graph g = std::move(fresh.back());
            fresh.pop_back();
            const std::vector<std::uint64_t> triples = root_triples(g);
            std::set<std::pair<int, int>> eligible;
            for (const KrauszPartition& part : krausz_partitions(g))
                for (int u = 0; u < g.n; ++u) {
                    if (block_degree(part, u) > 1) continue;
                    for (int w = u + 1; w < g.n; ++w) {
                        if (g.has_edge(u, w)) continue;
                        if (block_degree(part, w) > 1) continue;
                        eligible.insert({u, w});
                    }
                }
            for (const auto& [u, w] : eligible) {
                bool allowed = false;
                for (std::uint64_t m : triples)
                    if (!(m >> u & 1) || !(m >> w & 1)) {
                        allowed = true;
                        break;
                    }
                if (!allowed) continue;
                Graph grown = g;
                grown.add_edge(u, w);
                consider(grown);
            }
        }

        level = std::move(next);
        store_level(k + 1);
    }
    return report;
}

std::vector<CanonicalForm> oracle_enumerate(int max_n) {
    if (max_n < 0 || max_n > 7)
        throw std::invalid_argument("oracle is exhaustive only up to 7 vertices");
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < max_n; ++u)
        for (int v = u + 1; v < max_n; ++v) slots.emplace_back(u, v);

    std::set<std::string> cheap_survivors;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << slots.size()); ++bits) {
        Graph g(max_n);
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (bits >> i & 1) g.add_edge(slots[i].first, slots[i].second);

        // independent 3-set required
        bool alpha3 = false;
        const std::uint64_t all = g.vertex_mask();
        for (int a = 0; a < max_n && !alpha3; ++a)
            for (int b = a + 1; b < max_n && !alpha3; ++b) {
                if (g.has_edge(a, b)) continue;
                if (all & ~(g.adj[a] | g.adj[b]) & ~(bit(b + 1) - 1)) alpha3 = true;
            }
        if (!alpha3) continue;

        // line graphs are claw-free: reject an induced K_{1,3} early
        bool claw = false;
        for (int v = 0; v < max_n && !claw; ++v) {
            const std::uint64_t nb = g.adj[v];
            for (std::uint64_t ra = nb; ra && !claw;) {
                const int a = std::countr_zero(ra);
                ra &= ra - 1;
                const std::uint64_t others = nb & ~g.adj[a] & ~(bit(a + 1) - 1);
                for (std::uint64_t rb = others; rb && !claw;) {
                    const int b = std::countr_zero(rb);
                    rb &= rb - 1;
                    if (others & ~g.adj[b] & ~(bit(b + 1) - 1)) claw = true;
                }
            }
        }
        if (claw) continue;

        cheap_survivors.insert(canonical_form(g).bytes);
    }

    std::vector<CanonicalForm> out;
    for (const std::string& bytes : cheap_survivors) {
        const Graph g = parse_graph6(bytes);
        if (!lambda3_nonpositive(g)) continue;
        if (!is_line_graph(g)) continue;
        out.push_back({bytes});
    }
    return out;
}

std::vector<CatalogEntry> classify_terminal_catalog(const EnumerationReport& report) {
    std::vector<CatalogEntry> out;
    for (const Graph& g : report.terminal()) {
        CatalogEntry entry;
        entry.graph6 = canonical_form(g).bytes;
        std::vector<int> keep;
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) > 0) keep.push_back(v);
        entry.isolated = g.n - static_cast<int>(keep.size());
        const Graph part = induced_subgraph(g, keep);
        if (part.n >= 6 && are_isomorphic(part, gen_b3(part.n - 6))) {
            entry.matched = true;
            entry.params = {Family::b3, 0, part.n - 6, 0};
        }
        for (int m = 1; !entry.matched && m <= part.n; ++m) {
            const int n = part.n + 1 - m;
            if (n < 1 || n > m) continue;
            for (int p = 0; !entry.matched && p < n; ++p)
                if (are_isomorphic(part, gen_b4(m, n, p))) {
                    entry.matched = true;
                    entry.params = {Family::b4, m, n, p};
                }
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::vector<CanonicalForm> connected_nonbipartite_survivors(const EnumerationReport& report) {
    std::set<std::string> forms;
    for (const auto& [n, graphs] : report.levels)
        for (const Graph& g : graphs)
            if (is_connected(g) && !is_bipartite(complement(g)))
                forms.insert(canonical_form(g).bytes);
    std::vector<CanonicalForm> out;
    for (const std::string& f : forms) out.push_back({f});
    return out;
}

ComplementCensus complement_subgraph_census() {
    std::set<std::string> nonbip, disc;
    for (const Graph& host : {complement(gen_b1()), complement(gen_b2())}) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << host.n); ++mask) {
            std::vector<int> keep;
            for (int v = 0; v < host.n; ++v)
                if (mask >> v & 1) keep.push_back(v);
            const Graph sub = induced_subgraph(host, keep);
            if (is_bipartite(sub)) continue;
            const std::string bytes = canonical_form(sub).bytes;
            nonbip.insert(bytes);
            if (!is_connected(complement(sub))) disc.insert(bytes);
        }
    }
    ComplementCensus census;
    for (const std::string& f : nonbip) census.nonbipartite.push_back({f});
    for (const std::string& f : disc) census.disconnected_complement.push_back({f});
    return census;
}

OracleComparison compare_with_oracle(const EnumerationReport& report, int k) {
    if (report.policy != GrowthPolicy::unrestricted)
        throw std::invalid_argument("oracle comparison needs an unrestricted report");
    if (k < 3 || k > 7 || k > report.target_n)
        throw std::invalid_argument("oracle comparison covers levels 3..min(target, 7)");
    std::set<std::string> padded;
    for (int j = 3; j <= k; ++j)
        for (const Graph& g : report.levels.at(j))
            padded.insert(canonical_form(disjoint_union(g, empty_graph(k - g.n))).bytes);
    std::set<std::string> oracle;
    for (const CanonicalForm& f : oracle_enumerate(k)) oracle.insert(f.bytes);

    OracleComparison cmp;
    std::set_difference(padded.begin(), padded.end(), oracle.begin(), oracle.end(),
                        std::back_inserter(cmp.only_growth));
    std::set_difference(oracle.begin(), oracle.end(), padded.begin(), padded.end(),
                        std::back_inserter(cmp.only_oracle));
    cmp.equal = cmp.only_growth.empty() && cmp.only_oracle.empty();
    return cmp;
}

}  // namespace lg3
