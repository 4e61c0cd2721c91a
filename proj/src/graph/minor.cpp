#include "inpp/minor.hpp"

#include <bit>
#include <deque>
#include <unordered_set>

#include "inpp/error.hpp"

namespace inpp {

namespace {

constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }

/// Index of vertex x after vertex `removed` is deleted.
Vertex shifted(Vertex x, Vertex removed) { return x > removed ? x - 1 : x; }

RootedGraph contract(const RootedGraph& g, Vertex a, Vertex b) {
  const Vertex keep = std::min(a, b);
  const Vertex drop = std::max(a, b);
  Graph h = g.graph();
  for (VertexSet nb = h.neighbors(drop); nb; nb &= nb - 1) {
    const Vertex w = std::countr_zero(nb);
    if (w != keep) h.add_edge(keep, w);
  }
  const Vertex root = (g.root() == drop) ? keep : g.root();
  return {h.without_vertex(drop), shifted(root, drop)};
}

}  // namespace

RootedGraph apply_minor_op(const RootedGraph& g, const MinorOp& op) {
  const Graph& G = g.graph();
  const auto in_range = [&](Vertex x) { return x >= 0 && x < g.order(); };
  switch (op.kind) {
    case MinorOp::Kind::delete_edge: {
      if (!in_range(op.u) || !in_range(op.v) || op.u == op.v || !G.adjacent(op.u, op.v)) {
        throw DomainError("delete-edge: not an edge");
      }
      Graph h = G;
      h.remove_edge(op.u, op.v);
      return {std::move(h), g.root()};
    }
    case MinorOp::Kind::contract_edge:
      if (!in_range(op.u) || !in_range(op.v) || op.u == op.v || !G.adjacent(op.u, op.v)) {
        throw DomainError("contract-edge: not an edge");
      }
      return contract(g, op.u, op.v);
    case MinorOp::Kind::delete_isolated_vertex:
      if (!in_range(op.u)) throw DomainError("delete-isolated-vertex: vertex out of range");
      if (op.u == g.root()) throw DomainError("delete-isolated-vertex: the root is never deleted");
      if (G.degree(op.u) != 0) throw DomainError("delete-isolated-vertex: vertex is not isolated");
      return {G.without_vertex(op.u), shifted(g.root(), op.u)};
  }
  throw DomainError("unknown minor op");
}

std::vector<RootedGraph> one_step_minors(const RootedGraph& g) {
  std::vector<RootedGraph> out;
  const Graph& G = g.graph();
  for (const Edge& e : G.edges()) {
    out.push_back(apply_minor_op(g, MinorOp::delete_edge(e.u, e.v)));
    out.push_back(contract(g, e.u, e.v));
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (v != g.root() && G.degree(v) == 0) {
      out.push_back(apply_minor_op(g, MinorOp::delete_isolated_vertex(v)));
    }
  }
  return out;
}

RootedGraph root_component(const RootedGraph& g) {
  const VertexSet comp = g.graph().component_of(g.root());
  const int below = std::popcount(comp & (bit(g.root()) - 1));
  return {g.graph().induced(comp), below};
}

bool has_rooted_minor(const RootedGraph& host, const RootedGraph& target) {
  if (target.order() > host.order()) return false;
  const int target_edges = target.graph().edge_count();
  if (target.graph().connected()) {
    MinorContainment c(target);
    return c.contained_in(host);
  }
  const CanonicalForm goal = canonical_form(target);
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  std::deque<RootedGraph> queue;
  seen.insert(canonical_form(host));
  queue.push_back(host);
  while (!queue.empty()) {
    RootedGraph g = std::move(queue.front());
    queue.pop_front();
    if (g.order() == target.order() && g.graph().edge_count() == target_edges &&
        canonical_form(g) == goal) {
      return true;
    }
    for (RootedGraph& m : one_step_minors(g)) {
      if (m.order() < target.order() || m.graph().edge_count() < target_edges) continue;
      if (seen.insert(canonical_form(m)).second) queue.push_back(std::move(m));
    }
  }
  return false;
}

MinorContainment::MinorContainment(const RootedGraph& target)
    : target_(target), target_key_(canonical_form(target)), target_edges_(target.graph().edge_count()) {
  if (!target.graph().connected()) throw DomainError("MinorContainment needs a connected target");
}

bool MinorContainment::contained_in(const RootedGraph& host) {
  const RootedGraph reduced = root_component(host);
  if (reduced.order() < target_.order() || reduced.graph().edge_count() < target_edges_) return false;
  return search(reduced, canonical_form(reduced));
}

bool MinorContainment::search(const RootedGraph& g, const CanonicalForm& key) {
  if (key == target_key_) return true;
  // Every operation on a connected state removes at least one edge.
  if (g.order() < target_.order() || g.graph().edge_count() <= target_edges_) return false;
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  bool found = false;
  for (const RootedGraph& m : one_step_minors(g)) {
    const RootedGraph r = root_component(m);
    if (r.order() < target_.order() || r.graph().edge_count() < target_edges_) continue;
    if (search(r, canonical_form(r))) {
      found = true;
      break;
    }
  }
  memo_.emplace(key, found);
  return found;
}

}  // namespace inpp
