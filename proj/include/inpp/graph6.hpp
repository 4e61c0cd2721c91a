#pragma once

#include <string>
#include <string_view>

#include "inpp/graph.hpp"

namespace inpp {

/// Standard graph6 (without the optional ">>graph6<<" header).
Graph decode_graph6(std::string_view text);
std::string encode_graph6(const Graph& g);

/// "<graph6>@<root>" with a 1-based root.
RootedGraph decode_rooted_graph6(std::string_view text);
std::string encode_rooted_graph6(const RootedGraph& g);

}  // namespace inpp
