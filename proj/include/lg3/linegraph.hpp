#ifndef LG3_LINEGRAPH_HPP
#define LG3_LINEGRAPH_HPP

#include <vector>

#include "lg3/graph.hpp"

namespace lg3 {

// Edge partition into cliques with every vertex in at most two blocks.
// Blocks have >= 2 vertices, are sorted, and the block list is sorted.
struct KrauszPartition {
    std::vector<std::vector<int>> blocks;
    bool operator==(const KrauszPartition&) const = default;
};

// Vertices of the result are g's edges in lexicographic order.
Graph line_graph(const Graph& g);

// All Krausz partitions of g; limit > 0 stops after that many, 0 means all.
// An edgeless graph has exactly one partition: the empty one.
std::vector<KrauszPartition> krausz_partitions(const Graph& g, int limit = 0);

bool is_line_graph(const Graph& g);

// Independent validity check used by tests; does not trust search bookkeeping.
bool is_valid_krausz(const Graph& g, const KrauszPartition& p);

// Non-isomorphic graphs h with line_graph(h) isomorphic to g. Each isolated
// vertex of g contributes a K2 component to every root, so the round trip
// line_graph(root) ~= g holds exactly. Sorted by canonical form.
std::vector<Graph> root_graphs(const Graph& g);

}  // namespace lg3

#endif
