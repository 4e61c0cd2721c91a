#pragma once

#include <vector>

#include "inpp/graph.hpp"

namespace inpp {

inline constexpr int kDefaultEnumerationCap = 7;

/// One representative per root-preserving isomorphism class of rooted graphs
/// with exactly `order` vertices, in canonical labeling (root = vertex 0),
/// sorted by canonical form so the order is deterministic.
std::vector<RootedGraph> enumerate_rooted_graphs(int order, bool connected_only,
                                                 int cap = kDefaultEnumerationCap);

/// Union of the layers 1..max_order, smallest order first.
std::vector<RootedGraph> enumerate_rooted_graphs_up_to(int max_order, bool connected_only,
                                                       int cap = kDefaultEnumerationCap);

/// Unrooted isomorphism classes on exactly `order` vertices.
std::vector<Graph> enumerate_graphs(int order, int cap = kDefaultEnumerationCap);

}  // namespace inpp
