#ifndef LG3_CANONICAL_HPP
#define LG3_CANONICAL_HPP

#include <compare>
#include <string>
#include <vector>

#include "lg3/graph.hpp"

namespace lg3 {

// Total-order key with equal keys exactly for isomorphic graphs.
struct CanonicalForm {
    std::string bytes;  // graph6 line of the canonically relabeled graph
    auto operator<=>(const CanonicalForm&) const = default;
};

CanonicalForm canonical_form(const Graph& g);
Graph canonical_graph(const Graph& g);  // the relabeling behind the form
bool are_isomorphic(const Graph& a, const Graph& b);

// Induced-subgraph containment. When found and witness != nullptr,
// *witness maps each pattern vertex to its host image.
bool contains_induced(const Graph& host, const Graph& pattern,
                      std::vector<int>* witness = nullptr);

}  // namespace lg3

#endif
