#pragma once

#include <json.hpp>
#include <string>
#include <string_view>

#include "inpp/graph.hpp"
#include "inpp/nullity.hpp"
#include "inpp/numeric.hpp"

namespace inpp {

/// Accepted forms (vertex labels and roots are 1-based):
///  - "<graph6>@<root>"
///  - "n=4; edges=1-2,2-3; root=1" (root defaults to 1)
///  - "<family>@<root>" with family one of kN, cN, pN, k1M (the star K_{1,M}),
///    paw, s211, and root an integer or one of leaf, center, pendant.
/// Family names are tried before graph6, so "k13" is always K_{1,3}.
RootedGraph parse_rooted_graph(std::string_view text);

/// "<graph6>@<root>".
std::string emit_rooted_graph(const RootedGraph& g);

/// "k,l".
NullityPair parse_pair(std::string_view text);

/// "cert:<name>" or a path to a rational-matrix JSON file.
RationalSymMatrix load_rational_matrix(const std::string& source);

/// Like load_rational_matrix, falling back to the float-matrix format.
FloatSymMatrix load_float_matrix(const std::string& source);

nlohmann::json graph_to_json(const RootedGraph& g);

}  // namespace inpp
