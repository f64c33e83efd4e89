#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "lg3/canonical.hpp"
#include "lg3/graph.hpp"

using namespace lg3;
using namespace lg3::testing;

TEST_CASE("canonical form is relabeling-invariant") {
    std::mt19937_64 rng(201);
    Graph c5 = cycle(5);
    CanonicalForm base = canonical_form(c5);
    for (int t = 0; t < 50; ++t)
        CHECK(canonical_form(random_relabeling(rng, c5)) == base);

    for (int t = 0; t < 200; ++t) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 13));
        CHECK(canonical_form(random_relabeling(rng, g)) == canonical_form(g));
    }
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
    CHECK(canonical_form(complete(3)) != canonical_form(path(3)));
    CHECK(canonical_form(make_graph(4, {{0, 1}, {1, 2}, {2, 3}})) !=
          canonical_form(make_graph(4, {{0, 1}, {0, 2}, {0, 3}})));
    // same degree sequence, different graphs: C6 vs 2 triangles
    CHECK(canonical_form(cycle(6)) !=
          canonical_form(disjoint_union(complete(3), complete(3))));
}

TEST_CASE("canonical graph is a relabeling of its input") {
    std::mt19937_64 rng(202);
    for (int t = 0; t < 100; ++t) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 9));
        Graph c = canonical_graph(g);
        CHECK(c.n == g.n);
        CHECK(c.edge_count() == g.edge_count());
        CHECK(brute_force_isomorphic(g, c));
        CHECK(write_graph6(c) == canonical_form(g).bytes);
    }
}

TEST_CASE("isomorphism agrees with exhaustive permutation search") {
    std::mt19937_64 rng(203);
    for (int t = 0; t < 250; ++t) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph a = random_graph(rng, n);
        Graph b;
        switch (t % 3) {
            case 0: b = random_relabeling(rng, a); break;
            case 1: b = random_graph(rng, n); break;
            default: {
                // perturb one pair to get a near-miss
                b = random_relabeling(rng, a);
                if (n >= 2) {
                    int u = static_cast<int>(rng() % n), v = (u + 1) % n;
                    if (b.has_edge(u, v)) {
                        b.adj[u] &= ~(std::uint64_t{1} << v);
                        b.adj[v] &= ~(std::uint64_t{1} << u);
                    } else {
                        b.add_edge(u, v);
                    }
                }
            }
        }
        CHECK(are_isomorphic(a, b) == brute_force_isomorphic(a, b));
    }
}

TEST_CASE("canonical form is injective across all 7-vertex classes sampled") {
    // distinct classes must map to distinct forms: count classes two ways
    std::mt19937_64 rng(204);
    std::vector<Graph> reps;
    std::set<std::string> forms;
    for (int t = 0; t < 400; ++t) {
        Graph g = random_graph(rng, 7, 0.2 + 0.1 * (t % 7));
        bool known = false;
        for (const Graph& r : reps)
            if (brute_force_isomorphic(g, r)) {
                known = true;
                break;
            }
        if (!known) reps.push_back(g);
        forms.insert(canonical_form(g).bytes);
    }
    CHECK(forms.size() == reps.size());
}

TEST_CASE("contains_induced basics") {
    CHECK(contains_induced(cycle(7), path(6)));
    CHECK_FALSE(contains_induced(complete(4), empty_graph(2)));
    CHECK(contains_induced(complete(5), complete(3)));
    CHECK_FALSE(contains_induced(cycle(6), complete(3)));
    CHECK(contains_induced(path(4), empty_graph(0)));
    CHECK_FALSE(contains_induced(path(3), path(4)));  // pattern larger than host

    std::vector<int> witness;
    REQUIRE(contains_induced(cycle(7), path(6), &witness));
    REQUIRE(witness.size() == 6);
    Graph image = induced_subgraph(cycle(7), witness);
    CHECK(are_isomorphic(image, path(6)));
}

TEST_CASE("contains_induced agrees with exhaustive subset search") {
    std::mt19937_64 rng(205);
    for (int t = 0; t < 150; ++t) {
        int hn = 2 + static_cast<int>(rng() % 7);  // up to 8
        int pn = 1 + static_cast<int>(rng() % hn);
        Graph host = random_graph(rng, hn);
        Graph pattern = random_graph(rng, pn, 0.3 + 0.2 * (t % 3));
        CHECK(contains_induced(host, pattern) ==
              brute_force_contains_induced(host, pattern));
    }
}

TEST_CASE("witness is a faithful embedding") {
    std::mt19937_64 rng(206);
    int found = 0;
    for (int t = 0; t < 200 && found < 60; ++t) {
        Graph host = random_graph(rng, 8);
        Graph pattern = random_graph(rng, 2 + static_cast<int>(rng() % 4));
        std::vector<int> witness;
        if (!contains_induced(host, pattern, &witness)) continue;
        ++found;
        for (int i = 0; i < pattern.n; ++i)
            for (int j = i + 1; j < pattern.n; ++j)
                CHECK(pattern.has_edge(i, j) ==
                      host.has_edge(witness[i], witness[j]));
    }
    CHECK(found >= 30);
}
