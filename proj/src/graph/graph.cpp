#include "inpp/graph.hpp"

#include <bit>

#include "inpp/error.hpp"

namespace inpp {

namespace {

constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }

}  // namespace

Graph::Graph(int order) {
  if (order < 0 || order > kMaxOrder) {
    throw DomainError("graph order must be in 0.." + std::to_string(kMaxOrder));
  }
  adj_.assign(static_cast<std::size_t>(order), 0);
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (const Edge& e : edges) {
    if (e.u == e.v) throw DomainError("loops are not allowed");
    check_vertex(e.u);
    check_vertex(e.v);
    if (adjacent(e.u, e.v)) throw DomainError("duplicate edge");
    add_edge(e.u, e.v);
  }
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= order()) {
    throw DomainError("vertex " + std::to_string(v + 1) + " out of range 1.." + std::to_string(order()));
  }
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

int Graph::degree(Vertex v) const {
  check_vertex(v);
  return std::popcount(adj_[static_cast<std::size_t>(v)]);
}

int Graph::edge_count() const {
  int twice = 0;
  for (VertexSet a : adj_) twice += std::popcount(a);
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v = u + 1; v < order(); ++v) {
      if (adj_[static_cast<std::size_t>(u)] & bit(v)) out.push_back({u, v});
    }
  }
  return out;
}

VertexSet Graph::all_vertices() const {
  return order() == 64 ? ~VertexSet{0} : bit(order()) - 1;
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("loops are not allowed");
  adj_[static_cast<std::size_t>(u)] |= bit(v);
  adj_[static_cast<std::size_t>(v)] |= bit(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  adj_[static_cast<std::size_t>(u)] &= ~bit(v);
  adj_[static_cast<std::size_t>(v)] &= ~bit(u);
}

Graph Graph::without_vertex(Vertex v) const {
  check_vertex(v);
  return induced(all_vertices() & ~bit(v));
}

Graph Graph::induced(VertexSet keep) const {
  std::vector<Vertex> kept;
  for (Vertex v = 0; v < order(); ++v) {
    if (keep & bit(v)) kept.push_back(v);
  }
  return permuted(kept);
}

Graph Graph::permuted(std::span<const Vertex> perm) const {
  Graph out(static_cast<int>(perm.size()));
  for (std::size_t p = 0; p < perm.size(); ++p) {
    for (std::size_t q = p + 1; q < perm.size(); ++q) {
      if (adjacent(perm[p], perm[q])) out.add_edge(static_cast<Vertex>(p), static_cast<Vertex>(q));
    }
  }
  return out;
}

VertexSet Graph::component_of(Vertex v) const {
  check_vertex(v);
  VertexSet seen = bit(v);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) {
      next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
    }
    frontier = next & ~seen;
    seen |= next;
  }
  return seen;
}

std::vector<VertexSet> Graph::components_within(VertexSet within) const {
  std::vector<VertexSet> out;
  VertexSet left = within;
  while (left) {
    const VertexSet start = left & (~left + 1);
    VertexSet seen = start;
    VertexSet frontier = start;
    while (frontier) {
      VertexSet next = 0;
      for (VertexSet f = frontier; f; f &= f - 1) {
        next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
      }
      next &= within;
      frontier = next & ~seen;
      seen |= next;
    }
    out.push_back(seen);
    left &= ~seen;
  }
  return out;
}

std::vector<VertexSet> Graph::components() const { return components_within(all_vertices()); }

bool Graph::connected() const { return order() == 0 || component_of(0) == all_vertices(); }

RootedGraph::RootedGraph() : graph_(1), root_(0) {}

RootedGraph::RootedGraph(Graph graph, Vertex root) : graph_(std::move(graph)), root_(root) {
  if (root_ < 0 || root_ >= graph_.order()) {
    throw DomainError("root " + std::to_string(root_ + 1) + " out of range 1.." +
                      std::to_string(graph_.order()));
  }
}

RootedGraph::RootedGraph(int order, std::span<const Edge> edges, Vertex root)
    : RootedGraph(Graph(order, edges), root) {}

std::string to_string(Family kind) {
  switch (kind) {
    case Family::complete: return "complete";
    case Family::cycle: return "cycle";
    case Family::path: return "path";
    case Family::star: return "star";
    case Family::paw: return "paw";
    case Family::s211: return "s211";
    case Family::empty: return "empty";
  }
  return "?";
}

RootedGraph build_family(Family kind, int n, RootSpec root) {
  const auto bad_size = [&](const std::string& need) {
    return DomainError(to_string(kind) + " needs " + need + ", got n=" + std::to_string(n));
  };
  const auto bad_root = [&] {
    return DomainError("root spec does not apply to " + to_string(kind));
  };

  Graph g;
  Vertex leaf = 0;
  Vertex center = -1;
  Vertex pendant = -1;
  switch (kind) {
    case Family::complete:
      if (n < 1) throw bad_size("n >= 1");
      g = Graph(n);
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
      leaf = -1;
      break;
    case Family::cycle:
      if (n < 3) throw bad_size("n >= 3");
      g = Graph(n);
      for (Vertex u = 0; u < n; ++u) g.add_edge(u, (u + 1) % n);
      leaf = -1;
      break;
    case Family::path:
      if (n < 1) throw bad_size("n >= 1");
      g = Graph(n);
      for (Vertex u = 0; u + 1 < n; ++u) g.add_edge(u, u + 1);
      center = (n - 1) / 2;
      break;
    case Family::star:
      if (n < 2) throw bad_size("n >= 2 vertices");
      g = Graph(n);
      for (Vertex u = 0; u + 1 < n; ++u) g.add_edge(u, n - 1);
      center = n - 1;
      break;
    case Family::paw: {
      if (n != 4) throw bad_size("n = 4");
      const Edge edges[] = {{0, 1}, {1, 2}, {1, 3}, {2, 3}};
      g = Graph(4, edges);
      pendant = 0;
      break;
    }
    case Family::s211: {
      if (n != 5) throw bad_size("n = 5");
      const Edge edges[] = {{0, 1}, {1, 2}, {2, 3}, {2, 4}};
      g = Graph(5, edges);
      center = 2;
      pendant = 0;
      break;
    }
    case Family::empty:
      if (n < 1) throw bad_size("n >= 1");
      g = Graph(n);
      leaf = -1;
      break;
  }

  Vertex r = 0;
  switch (root.kind) {
    case RootSpec::Kind::standard: r = 0; break;
    case RootSpec::Kind::index:
      if (root.index < 0 || root.index >= n) {
        throw DomainError("root index " + std::to_string(root.index + 1) + " out of range 1.." +
                          std::to_string(n));
      }
      r = root.index;
      break;
    case RootSpec::Kind::leaf:
      if (leaf < 0 || g.degree(leaf) != 1) throw bad_root();
      r = leaf;
      break;
    case RootSpec::Kind::center:
      if (center < 0) throw bad_root();
      r = center;
      break;
    case RootSpec::Kind::pendant:
      if (pendant < 0) throw bad_root();
      r = pendant;
      break;
  }
  return {std::move(g), r};
}

}  // namespace inpp
