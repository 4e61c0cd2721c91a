#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace inpp {

/// Vertices are 0-based inside the library; text formats use 1-based labels.
using Vertex = int;

/// Subset of vertices as a bitmask (bit v set iff v is a member).
using VertexSet = std::uint64_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1, adjacency stored as bitmasks.
class Graph {
 public:
  static constexpr int kMaxOrder = 64;

  Graph() = default;
  explicit Graph(int order);
  Graph(int order, std::span<const Edge> edges);

  [[nodiscard]] int order() const { return static_cast<int>(adj_.size()); }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const;
  [[nodiscard]] VertexSet neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  [[nodiscard]] int degree(Vertex v) const;
  [[nodiscard]] int edge_count() const;
  /// Edges with u < v, sorted lexicographically.
  [[nodiscard]] std::vector<Edge> edges() const;
  [[nodiscard]] VertexSet all_vertices() const;

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);

  /// Graph with vertex v removed; later vertices shift down by one.
  [[nodiscard]] Graph without_vertex(Vertex v) const;
  /// Induced subgraph on `keep`, vertices relabeled in increasing order.
  [[nodiscard]] Graph induced(VertexSet keep) const;
  /// Vertex p of the result is vertex perm[p] of this graph.
  [[nodiscard]] Graph permuted(std::span<const Vertex> perm) const;

  /// Connected components, each as a vertex set, ordered by smallest member.
  [[nodiscard]] std::vector<VertexSet> components() const;
  [[nodiscard]] std::vector<VertexSet> components_within(VertexSet within) const;
  [[nodiscard]] VertexSet component_of(Vertex v) const;
  [[nodiscard]] bool connected() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(Vertex v) const;
  std::vector<VertexSet> adj_;
};

/// A graph with a distinguished root vertex.
class RootedGraph {
 public:
  RootedGraph();  // K_1 rooted at its only vertex
  RootedGraph(Graph graph, Vertex root);
  RootedGraph(int order, std::span<const Edge> edges, Vertex root);

  [[nodiscard]] const Graph& graph() const { return graph_; }
  [[nodiscard]] Vertex root() const { return root_; }
  [[nodiscard]] int order() const { return graph_.order(); }
  [[nodiscard]] RootedGraph with_root(Vertex root) const { return {graph_, root}; }
  /// G - root as an unrooted graph.
  [[nodiscard]] Graph minus_root() const { return graph_.without_vertex(root_); }

  friend bool operator==(const RootedGraph&, const RootedGraph&) = default;

 private:
  Graph graph_;
  Vertex root_ = 0;
};

enum class Family { complete, cycle, path, star, paw, s211, empty };

/// How to place the root in a family graph. `index` is 0-based.
struct RootSpec {
  enum class Kind { index, leaf, center, pendant, standard } kind = Kind::standard;
  Vertex index = 0;

  static RootSpec at(Vertex v) { return {Kind::index, v}; }
  static RootSpec leaf() { return {Kind::leaf, 0}; }
  static RootSpec center() { return {Kind::center, 0}; }
  static RootSpec pendant() { return {Kind::pendant, 0}; }
};

/// Named rooted graphs. Layouts (1-based in the comments):
///  - complete/cycle/path/empty: vertices 1..n, path and cycle along 1-2-...-n
///  - star: n total vertices, center n, leaves 1..n-1
///  - paw: triangle {2,3,4} plus edge {1,2}, default root 1
///  - s211: path 1-2-3 with leaves 4,5 on vertex 3, default root 1
/// `standard` picks vertex 1 everywhere. For even paths `center` picks the
/// lower-indexed of the two middle vertices.
RootedGraph build_family(Family kind, int n, RootSpec root = {});

std::string to_string(Family kind);

}  // namespace inpp
