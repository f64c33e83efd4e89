#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "lg3/canonical.hpp"
#include "lg3/families.hpp"
#include "lg3/graph.hpp"
#include "lg3/linegraph.hpp"
#include "lg3/spectra.hpp"

using namespace lg3;
using lg3::testing::random_connected_graph;

namespace {

Graph diamond() { return make_graph(4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}}); }

Graph three_k2() {
    return disjoint_union(complete(2), disjoint_union(complete(2), complete(2)));
}

// every valid (m, n, p) with m + n - 1 <= max_size
std::vector<FamilyParams> pair_param_box(Family f, int max_size) {
    std::vector<FamilyParams> out;
    for (int m = 1; m <= max_size; ++m)
        for (int n = 1; n <= m && m + n - 1 <= max_size; ++n)
            for (int p = 0; p < n; ++p) out.push_back({f, m, n, p});
    return out;
}

// the embedding must be an injective map onto an induced copy inside the witness
void check_membership_witness(const Graph& g, const Membership& r) {
    REQUIRE(r.verdict == Verdict::yes);
    const Graph host = gen_family(r.witness);
    REQUIRE(static_cast<int>(r.embedding.size()) == g.n);
    for (int i = 0; i < g.n; ++i) {
        REQUIRE(r.embedding[i] >= 0);
        REQUIRE(r.embedding[i] < host.n);
        for (int j = i + 1; j < g.n; ++j) {
            CHECK(r.embedding[i] != r.embedding[j]);
            CHECK(g.has_edge(i, j) == host.has_edge(r.embedding[i], r.embedding[j]));
        }
    }
}

}  // namespace

TEST_CASE("cs1 is the double star") {
    const Graph g = gen_cs1();
    CHECK(g.n == 6);
    CHECK(g.edge_count() == 5);
    CHECK(is_bipartite(g));
    CHECK(is_connected(g));
    std::vector<int> degs;
    for (int v = 0; v < g.n; ++v) degs.push_back(g.degree(v));
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{1, 1, 1, 1, 3, 3});
    CHECK(is_line_graph(complement(g)));
}

TEST_CASE("cs2 fixed instances") {
    CHECK(are_isomorphic(gen_cs2(0), three_k2()));
    CHECK(are_isomorphic(complement(gen_cs2(0)), line_graph(complete(4))));
    const Graph g = gen_cs2(2);
    CHECK(g.n == 8);
    CHECK(g.edge_count() == 9);
    CHECK(is_bipartite(g));
    CHECK_THROWS_AS(gen_cs2(-1), std::invalid_argument);
    CHECK_THROWS_AS(gen_cs2(57), std::invalid_argument);
}

TEST_CASE("cs2 grows monotonically") {
    for (int n = 0; n < 6; ++n) {
        // drop one core vertex from cs2(n+1) and land back on cs2(n)
        const Graph big = gen_cs2(n + 1);
        std::vector<int> keep;
        for (int v = 0; v < big.n; ++v)
            if (v != 3) keep.push_back(v);
        CHECK(are_isomorphic(induced_subgraph(big, keep), gen_cs2(n)));
        CHECK(contains_induced(gen_cs2(n + 1), gen_cs2(n)));
    }
}

TEST_CASE("cs3 fixed instances") {
    const Graph g = gen_cs3(3, 2, 1);
    CHECK(g.n == 4);
    CHECK(g.edge_count() == 1);
    CHECK(are_isomorphic(g, disjoint_union(complete(2), empty_graph(2))));
    CHECK(are_isomorphic(complement(g), diamond()));
    CHECK(are_isomorphic(complement(g), gen_b4(3, 2, 1)));
    CHECK_THROWS_AS(gen_cs3(2, 3, 0), std::invalid_argument);  // needs n <= m
    CHECK_THROWS_AS(gen_cs3(1, 1, 1), std::invalid_argument);  // needs p < n
    CHECK_THROWS_AS(gen_cs3(0, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_cs3(3, 2, -1), std::invalid_argument);
    CHECK_THROWS_AS(gen_cs3(40, 24, 0), std::invalid_argument);  // 63 vertices
}

TEST_CASE("cs family members are bipartite complements of line graphs") {
    CHECK(is_bipartite(gen_cs1()));
    CHECK(is_line_graph(complement(gen_cs1())));
    for (int n = 0; n <= 8; ++n) {
        const Graph g = gen_cs2(n);
        CHECK(is_bipartite(g));
        CHECK(is_line_graph(complement(g)));
    }
    for (const auto& fp : pair_param_box(Family::cs3, 13)) {
        const Graph g = gen_family(fp);
        CHECK(is_bipartite(g));
        CHECK(is_line_graph(complement(g)));
    }
}

TEST_CASE("b1 and b2 fixed structure") {
    const Graph b1 = gen_b1();
    CHECK(b1.n == 7);
    CHECK(b1.edge_count() == 12);
    CHECK(is_connected(b1));
    CHECK(is_line_graph(b1));
    CHECK(lambda3_nonpositive(b1));

    const Graph b2 = gen_b2();
    CHECK(b2.n == 9);
    CHECK(b2.edge_count() == 21);
    CHECK(is_connected(b2));
    CHECK(is_line_graph(b2));
    CHECK(lambda3_nonpositive(b2));

    // the complement of the double star sits strictly inside b2
    const Graph cc = complement(gen_cs1());
    CHECK(contains_induced(b2, cc));
    CHECK(!are_isomorphic(b2, cc));
}

TEST_CASE("b3 fixed instances") {
    const Graph g0 = gen_b3(0);
    CHECK(g0.n == 6);
    CHECK(g0.edge_count() == 12);
    for (int v = 0; v < g0.n; ++v) CHECK(g0.degree(v) == 4);
    CHECK(are_isomorphic(g0, complement(three_k2())));
    CHECK(lambda3_nonpositive(gen_b3(5)));
    CHECK_THROWS_AS(gen_b3(-2), std::invalid_argument);
    CHECK_THROWS_AS(gen_b3(57), std::invalid_argument);
}

TEST_CASE("b4 fixed instances") {
    CHECK(are_isomorphic(gen_b4(2, 1, 0), complete(2)));
    const Graph g = gen_b4(3, 2, 1);
    CHECK(g.n == 4);
    CHECK(g.edge_count() == 5);
    CHECK(are_isomorphic(g, diamond()));
    CHECK(is_line_graph(g));
    CHECK(lambda3_nonpositive(g));
    CHECK_THROWS_AS(gen_b4(1, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(gen_b4(2, 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(gen_b4(2, 2, -1), std::invalid_argument);
    CHECK_THROWS_AS(gen_b4(32, 32, 0), std::invalid_argument);  // 63 vertices
}

TEST_CASE("b family members are line graphs with at most two positive eigenvalues") {
    for (int n = 0; n <= 8; ++n) {
        const Graph g = gen_b3(n);
        CHECK(is_line_graph(g));
        CHECK(lambda3_nonpositive(g));
    }
    for (const auto& fp : pair_param_box(Family::b4, 13)) {
        const Graph g = gen_family(fp);
        CHECK(is_line_graph(g));
        CHECK(lambda3_nonpositive(g));
    }
}

TEST_CASE("the two sides are complements of each other") {
    for (int n = 0; n <= 8; ++n)
        CHECK(are_isomorphic(complement(gen_cs2(n)), gen_b3(n)));
    for (const auto& fp : pair_param_box(Family::cs3, 13)) {
        const Graph b = gen_b4(fp.m, fp.n, fp.p);
        CHECK(are_isomorphic(complement(gen_family(fp)), b));
    }
}

TEST_CASE("gen_family dispatches by name") {
    CHECK(are_isomorphic(gen_family({Family::cs1, 0, 0, 0}), gen_cs1()));
    CHECK(are_isomorphic(gen_family({Family::b3, 0, 2, 0}), gen_b3(2)));
    CHECK(are_isomorphic(gen_family({Family::b4, 4, 3, 2}), gen_b4(4, 3, 2)));
    CHECK(family_name(Family::cs2) == std::string("cs2"));
    CHECK(family_name(Family::b4) == std::string("b4"));
}

TEST_CASE("cs membership on fixed graphs") {
    const Membership hit = member_cs_family(three_k2());
    REQUIRE(hit.verdict == Verdict::yes);
    CHECK(hit.witness.family == Family::cs2);
    CHECK(hit.witness.n == 0);
    check_membership_witness(three_k2(), hit);

    CHECK(member_cs_family(complete(3)).verdict == Verdict::no);

    // cycles: the classifier must agree with the two-predicate description
    for (int k = 3; k <= 8; ++k) {
        const Graph c = cycle(k);
        const bool expected = is_bipartite(c) && is_line_graph(complement(c));
        CHECK((member_cs_family(c).verdict == Verdict::yes) == expected);
    }

    const Membership self = member_cs_family(gen_cs1());
    REQUIRE(self.verdict == Verdict::yes);
    check_membership_witness(gen_cs1(), self);
}

TEST_CASE("b membership on fixed graphs") {
    const Membership self = member_b_family(gen_b1());
    REQUIRE(self.verdict == Verdict::yes);
    CHECK(self.witness.family == Family::b1);
    check_membership_witness(gen_b1(), self);

    CHECK(member_b_family(cycle(5)).verdict == Verdict::no);

    const Graph b432 = gen_b4(4, 3, 2);
    for (int v = 0; v < b432.n; ++v) {
        std::vector<int> keep;
        for (int u = 0; u < b432.n; ++u)
            if (u != v) keep.push_back(u);
        const Membership r = member_b_family(induced_subgraph(b432, keep));
        CHECK(r.verdict == Verdict::yes);
    }
}

TEST_CASE("membership is undecided beyond the search budget") {
    CHECK(member_cs_family(empty_graph(21)).verdict == Verdict::undecided);
    CHECK(member_b_family(empty_graph(21)).verdict == Verdict::undecided);
    CHECK(member_cs_family(empty_graph(20)).verdict == Verdict::yes);
}

TEST_CASE("membership is hereditary under vertex deletion") {
    std::mt19937_64 rng(20240811);
    const std::vector<FamilyParams> seeds = {
        {Family::b2, 0, 0, 0},    {Family::b3, 0, 4, 0},   {Family::b4, 6, 4, 3},
        {Family::b4, 5, 5, 0},    {Family::cs2, 0, 5, 0},  {Family::cs3, 6, 5, 2},
        {Family::cs3, 7, 4, 0},   {Family::cs1, 0, 0, 0},  {Family::b1, 0, 0, 0},
    };
    for (const auto& fp : seeds) {
        const Graph host = gen_family(fp);
        const bool cs_side =
            fp.family == Family::cs1 || fp.family == Family::cs2 || fp.family == Family::cs3;
        for (int trial = 0; trial < 6; ++trial) {
            std::vector<int> keep;
            for (int v = 0; v < host.n; ++v)
                if (rng() % 4 != 0) keep.push_back(v);
            if (keep.empty()) keep.push_back(0);
            const Graph g = induced_subgraph(host, keep);
            const Membership r = cs_side ? member_cs_family(g) : member_b_family(g);
            REQUIRE(r.verdict == Verdict::yes);
            check_membership_witness(g, r);
            // witnesses stay inside the documented search windows
            const Family wf = r.witness.family;
            if (wf == Family::cs2 || wf == Family::b3) CHECK(r.witness.n <= g.n);
            if (wf == Family::cs3 || wf == Family::b4)
                CHECK(r.witness.m + r.witness.n - 1 <= 2 * g.n + 2);
        }
    }
}

TEST_CASE("b membership matches the exact spectral test on line graphs") {
    std::mt19937_64 rng(991);
    int yes_seen = 0, no_seen = 0, tested = 0;
    while (tested < 120) {
        const int nroot = 3 + static_cast<int>(rng() % 5);
        const Graph root = random_connected_graph(rng, nroot, rng() % 3);
        if (root.edge_count() < 2 || root.edge_count() > 9) continue;
        const Graph lg = line_graph(root);
        if (!is_connected(lg)) continue;
        ++tested;
        const bool spectral = lambda3_nonpositive(lg);
        const Membership r = member_b_family(lg);
        REQUIRE(r.verdict != Verdict::undecided);
        CHECK((r.verdict == Verdict::yes) == spectral);
        if (spectral)
            ++yes_seen;
        else
            ++no_seen;
        if (r.verdict == Verdict::yes) check_membership_witness(lg, r);
    }
    CHECK(yes_seen >= 10);
    CHECK(no_seen >= 10);
}
