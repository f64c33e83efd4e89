#include "lg3/canonical.hpp"

#include <algorithm>
#include <map>

namespace lg3 {

namespace {

// Equitable color refinement. New color ids follow the lexicographic order
// of (old color, sorted neighbor colors), which depends only on the colored
// isomorphism type, so refinement commutes with relabeling.
void refine(const Graph& g, std::vector<int>& colors) {
    const int n = g.n;
    int cells = 0;
    for (int v = 0; v < n; ++v) cells = std::max(cells, colors[v] + 1);
    for (;;) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int>& s = sig[v];
            s.push_back(colors[v]);
            std::uint64_t m = g.adj[v];
            while (m) {
                s.push_back(colors[std::countr_zero(m)]);
                m &= m - 1;
            }
            std::sort(s.begin() + 1, s.end());
        }
        std::map<std::vector<int>, int> rank;
        for (int v = 0; v < n; ++v) rank.emplace(sig[v], 0);
        int next = 0;
        for (auto& [key, id] : rank) id = next++;
        if (next == cells) return;  // no cell split further
        cells = next;
        for (int v = 0; v < n; ++v) colors[v] = rank[sig[v]];
    }
}

struct CanonSearch {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> generators;  // automorphisms of g
    std::vector<int> best_order;               // position -> vertex
    std::vector<std::uint64_t> best_key;
    bool have_best = false;
    std::vector<int> prefix;  // individualized vertices, outermost first

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.n) {}

    std::vector<std::uint64_t> key_of(const std::vector<int>& order) const {
        std::vector<std::uint64_t> key((static_cast<std::size_t>(n) * n + 63) / 64, 0);
        std::size_t bit = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++bit)
                if (g.has_edge(order[i], order[j]))
                    key[bit / 64] |= std::uint64_t{1} << (bit % 64);
        return key;
    }

    bool is_automorphism(const std::vector<int>& perm) const {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (g.has_edge(u, v) != g.has_edge(perm[u], perm[v])) return false;
        return true;
    }

    void leaf(const std::vector<int>& colors) {
        std::vector<int> order(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) order[colors[v]] = v;
        auto key = key_of(order);
        if (!have_best || key < best_key) {
            best_key = std::move(key);
            best_order = order;
            have_best = true;
        } else if (key == best_key) {
            // Two orderings with identical keys give an automorphism
            // order[i] -> best_order[i]; verified before use.
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) perm[order[i]] = best_order[i];
            if (is_automorphism(perm)) generators.push_back(std::move(perm));
        }
    }

    // Orbit of `seed` vertices under the generators that fix every vertex of
    // the current prefix pointwise.
    std::uint64_t orbit_closure(std::uint64_t seed) const {
        std::vector<const std::vector<int>*> usable;
        for (const auto& gen : generators) {
            bool fixes = true;
            for (int v : prefix)
                if (gen[v] != v) {
                    fixes = false;
                    break;
                }
            if (fixes) usable.push_back(&gen);
        }
        std::uint64_t orb = seed;
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto* gen : usable) {
                std::uint64_t m = orb;
                while (m) {
                    int v = std::countr_zero(m);
                    m &= m - 1;
                    std::uint64_t img = std::uint64_t{1} << (*gen)[v];
                    if (!(orb & img)) {
                        orb |= img;
                        grew = true;
                    }
                }
            }
        }
        return orb;
    }

    void descend(std::vector<int> colors) {
        refine(g, colors);
        int target = -1;
        {
            std::vector<int> count(static_cast<std::size_t>(n), 0);
            for (int v = 0; v < n; ++v) ++count[colors[v]];
            for (int c = 0; c < n; ++c)
                if (count[c] >= 2) {
                    target = c;
                    break;
                }
        }
        if (target == -1) {
            leaf(colors);
            return;
        }
        std::vector<int> cell;
        for (int v = 0; v < n; ++v)
            if (colors[v] == target) cell.push_back(v);

        std::uint64_t processed = 0;
        for (int v : cell) {
            if (processed && (orbit_closure(processed) >> v & 1)) continue;
            processed |= std::uint64_t{1} << v;
            std::vector<int> split(colors);
            for (int u = 0; u < n; ++u)
                if (split[u] > target || (split[u] == target && u != v)) ++split[u];
            prefix.push_back(v);
            descend(std::move(split));
            prefix.pop_back();
        }
    }
};

}  // namespace

Graph canonical_graph(const Graph& g) {
    if (g.n == 0) return g;
    CanonSearch search(g);
    search.descend(std::vector<int>(static_cast<std::size_t>(g.n), 0));
    Graph canon(g.n);
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (g.has_edge(search.best_order[i], search.best_order[j]))
                canon.add_edge(i, j);
    return canon;
}

CanonicalForm canonical_form(const Graph& g) {
    return CanonicalForm{write_graph6(canonical_graph(g))};
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

bool contains_induced(const Graph& host, const Graph& pattern,
                      std::vector<int>* witness) {
    if (pattern.n > host.n) return false;
    if (pattern.n == 0) {
        if (witness) witness->clear();
        return true;
    }
    // Order pattern vertices to keep the partial map connected where possible.
    std::vector<int> order;
    {
        std::vector<bool> used(static_cast<std::size_t>(pattern.n), false);
        for (int step = 0; step < pattern.n; ++step) {
            int best = -1, best_links = -1, best_deg = -1;
            for (int v = 0; v < pattern.n; ++v) {
                if (used[v]) continue;
                int links = 0;
                for (int u : order) links += pattern.has_edge(v, u);
                if (links > best_links ||
                    (links == best_links && pattern.degree(v) > best_deg)) {
                    best = v;
                    best_links = links;
                    best_deg = pattern.degree(v);
                }
            }
            used[best] = true;
            order.push_back(best);
        }
    }

    // Group pattern vertices into twin classes (swapping any two members is an
    // automorphism); forcing images to ascend within a class avoids re-trying
    // all permutations of interchangeable vertices.
    std::vector<int> cls(static_cast<std::size_t>(pattern.n), -1);
    {
        auto interchangeable = [&](int u, int v) {
            const std::uint64_t mask =
                ~((std::uint64_t{1} << u) | (std::uint64_t{1} << v));
            return (pattern.adj[u] & mask) == (pattern.adj[v] & mask);
        };
        int next_class = 0;
        for (int v = 0; v < pattern.n; ++v) {
            for (int c = 0; c < next_class && cls[v] < 0; ++c) {
                bool fits = true;
                for (int u = 0; u < v && fits; ++u)
                    if (cls[u] == c) fits = interchangeable(u, v);
                if (fits) cls[v] = c;
            }
            if (cls[v] < 0) cls[v] = next_class++;
        }
    }

    std::vector<int> image(static_cast<std::size_t>(pattern.n), -1);
    std::uint64_t taken = 0;

    auto extend = [&](auto&& self, int depth) -> bool {
        if (depth == pattern.n) return true;
        int pv = order[depth];
        int floor_c = -1;
        for (int d = 0; d < depth; ++d)
            if (cls[order[d]] == cls[pv]) floor_c = std::max(floor_c, image[order[d]]);
        for (int c = floor_c + 1; c < host.n; ++c) {
            if (taken >> c & 1) continue;
            if (host.degree(c) < pattern.degree(pv)) continue;
            bool ok = true;
            for (int d = 0; d < depth; ++d) {
                int pu = order[d];
                if (host.has_edge(c, image[pu]) != pattern.has_edge(pv, pu)) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            image[pv] = c;
            taken |= std::uint64_t{1} << c;
            if (self(self, depth + 1)) return true;
            taken &= ~(std::uint64_t{1} << c);
            image[pv] = -1;
        }
        return false;
    };

    if (!extend(extend, 0)) return false;
    if (witness) *witness = image;
    return true;
}

}  // namespace lg3
