#pragma once

#include <unordered_map>
#include <vector>

#include "inpp/canonical.hpp"
#include "inpp/graph.hpp"

namespace inpp {

struct MinorOp {
  enum class Kind { delete_edge, contract_edge, delete_isolated_vertex };
  Kind kind = Kind::delete_edge;
  Vertex u = 0;
  Vertex v = 0;  // unused for delete_isolated_vertex

  static MinorOp delete_edge(Vertex a, Vertex b) { return {Kind::delete_edge, a, b}; }
  static MinorOp contract_edge(Vertex a, Vertex b) { return {Kind::contract_edge, a, b}; }
  static MinorOp delete_isolated_vertex(Vertex a) { return {Kind::delete_isolated_vertex, a, a}; }
};

/// Applies one rooted-minor operation. Contracting {u,v} keeps the merged
/// vertex at position min(u,v) and removes max(u,v); the merged vertex is the
/// root when the contracted edge touches the root. The root is never deleted.
RootedGraph apply_minor_op(const RootedGraph& g, const MinorOp& op);

/// Every graph reachable from `g` by one operation, without deduplication.
std::vector<RootedGraph> one_step_minors(const RootedGraph& g);

/// True iff `target` is a rooted minor of `host` (breadth-first search over
/// the minors of `host`, deduplicated by canonical form).
bool has_rooted_minor(const RootedGraph& host, const RootedGraph& target);

/// Memoised containment test for one fixed connected target. Minor ops on
/// components that do not hold the root can only be used to delete them, so
/// every state is reduced to the root's component before lookup.
class MinorContainment {
 public:
  explicit MinorContainment(const RootedGraph& target);

  [[nodiscard]] const RootedGraph& target() const { return target_; }
  bool contained_in(const RootedGraph& host);

 private:
  bool search(const RootedGraph& reduced, const CanonicalForm& key);

  RootedGraph target_;
  CanonicalForm target_key_;
  int target_edges_ = 0;
  std::unordered_map<CanonicalForm, bool, CanonicalFormHash> memo_;
};

/// The root's connected component, relabeled in increasing vertex order.
RootedGraph root_component(const RootedGraph& g);

}  // namespace inpp
