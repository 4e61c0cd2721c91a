#pragma once

#include <optional>
#include <vector>

#include "inpp/graph.hpp"

namespace inpp {

/// Shape of the subgraph induced on a vertex set.
struct Shape {
  bool is_path = false;                 // includes K_1 and K_2
  std::optional<Vertex> star_center;    // set iff a generalized star
  [[nodiscard]] bool is_generalized_star() const { return star_center.has_value(); }
};

Shape shape_of(const Graph& g, VertexSet within);

struct StructureProfile {
  bool connected = false;
  bool is_tree = false;
  bool is_path = false;
  std::optional<Vertex> star_center;
  bool is_yam = false;
  bool root_is_cut_vertex = false;
  /// Components of G - root in the original labels, ordered by smallest vertex.
  std::vector<std::vector<Vertex>> components_minus_root;
  /// Vertices of degree >= 3 in G.
  std::vector<Vertex> high_degree_vertices;

  [[nodiscard]] bool is_generalized_star() const { return star_center.has_value(); }
  [[nodiscard]] bool root_is_star_center(Vertex root) const { return star_center == root; }
};

/// Path / generalized-star / yam recognition. Shape flags describe the root's
/// component; a disconnected graph is never a yam graph.
StructureProfile classify_structure(const RootedGraph& g);

}  // namespace inpp
