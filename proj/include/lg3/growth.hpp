#ifndef LG3_GROWTH_HPP
#define LG3_GROWTH_HPP

#include <array>
#include <map>
#include <string>
#include <vector>

#include "lg3/canonical.hpp"
#include "lg3/families.hpp"
#include "lg3/graph.hpp"
#include "lg3/linegraph.hpp"

namespace lg3 {

// A line graph under construction: grown from 3K1, staying a line graph with
// at most two positive eigenvalues throughout.
struct GrownState {
    Graph graph;
    std::array<int, 3> roots{};  // the original 3K1; never pairwise adjacent
    KrauszPartition partition;   // clique cover witnessing line-graph-ness
};

GrownState initial_state();

// One new vertex: extend a clique (M1), glue two vertex-disjoint cliques
// through the new vertex (M2), or hang a pendant edge on a vertex lying in
// fewer than two blocks (M3 = M1 on a free slot). "Cliques" are the blocks
// plus a singleton free slot at every vertex in fewer than two blocks.
// Results with a third positive eigenvalue are dropped.
std::vector<GrownState> vertex_moves(const GrownState& s);

// One new edge between non-adjacent vertices that each lie in at most one
// block, never between two roots; the edge becomes its own block. Same prune.
std::vector<GrownState> edge_moves(const GrownState& s);

enum class GrowthPolicy {
    single_component,  // drop graphs with two or more non-trivial components
    unrestricted,      // keep everything (matches the exhaustive oracle)
};

struct EnumerationReport {
    int target_n = 0;
    GrowthPolicy policy = GrowthPolicy::single_component;
    // vertex count -> canonical representatives, sorted by canonical form
    std::map<int, std::vector<Graph>> levels;
    const std::vector<Graph>& terminal() const { return levels.at(target_n); }
};

// Breadth-first growth from 3K1: each level applies the vertex moves over
// every Krausz partition of every survivor, then closes the level under edge
// moves; dedupe is by canonical form. 3 <= target_n <= 13.
EnumerationReport enumerate_to(int target_n,
                               GrowthPolicy policy = GrowthPolicy::single_component);

// Ground truth at toy scale: every graph on exactly max_n <= 7 vertices that
// is a line graph, has at most two positive eigenvalues, and contains an
// induced 3K1. Sorted canonical forms.
std::vector<CanonicalForm> oracle_enumerate(int max_n);

struct CatalogEntry {
    std::string graph6;     // canonical encoding of the whole terminal graph
    int isolated = 0;       // isolated vertices stripped before matching
    bool matched = false;   // non-isolated part hit some family member
    FamilyParams params{};  // meaningful only when matched
};

// Split each terminal graph into (non-isolated part) + (isolated vertices)
// and match the part against b3/b4 by isomorphism; unmatched graphs are
// flagged, not dropped.
std::vector<CatalogEntry> classify_terminal_catalog(const EnumerationReport& report);

// Connected survivors at any level whose complements are not bipartite.
std::vector<CanonicalForm> connected_nonbipartite_survivors(const EnumerationReport& report);

struct ComplementCensus {
    // non-bipartite induced subgraphs of complement(b1) and complement(b2)
    std::vector<CanonicalForm> nonbipartite;
    // the subset whose own complements are disconnected
    std::vector<CanonicalForm> disconnected_complement;
};

ComplementCensus complement_subgraph_census();

struct OracleComparison {
    bool equal = false;
    std::vector<std::string> only_growth;  // padded growth forms the oracle lacks
    std::vector<std::string> only_oracle;  // oracle forms the growth run missed
};

// Pad every survivor of levels 3..k with isolated vertices up to k vertices
// and compare with oracle_enumerate(k). Needs an unrestricted report since
// the oracle has no component policy.
OracleComparison compare_with_oracle(const EnumerationReport& report, int k);

}  // namespace lg3

#endif
