#include "inpp/structure.hpp"

#include <bit>

namespace inpp {

namespace {

constexpr VertexSet bit(Vertex v) { return VertexSet{1} << v; }

std::vector<Vertex> members(VertexSet s) {
  std::vector<Vertex> out;
  for (; s; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

}  // namespace

Shape shape_of(const Graph& g, VertexSet within) {
  Shape s;
  const int n = std::popcount(within);
  if (n == 0 || g.components_within(within).size() != 1) return s;
  int twice_edges = 0;
  int high = 0;
  Vertex center = -1;
  for (Vertex v : members(within)) {
    const int d = std::popcount(g.neighbors(v) & within);
    twice_edges += d;
    if (d >= 3) {
      ++high;
      center = v;
    }
  }
  if (twice_edges / 2 != n - 1) return s;  // not a tree
  if (high == 0) s.is_path = true;
  if (high == 1) s.star_center = center;
  return s;
}

StructureProfile classify_structure(const RootedGraph& rg) {
  const Graph& g = rg.graph();
  const Vertex root = rg.root();
  StructureProfile p;
  p.connected = g.connected();

  const VertexSet comp = g.component_of(root);
  const int comp_edges = [&] {
    int twice = 0;
    for (Vertex v : members(comp)) twice += std::popcount(g.neighbors(v) & comp);
    return twice / 2;
  }();
  p.is_tree = comp_edges == std::popcount(comp) - 1;
  const Shape whole = shape_of(g, comp);
  p.is_path = whole.is_path;
  p.star_center = whole.star_center;

  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) >= 3) p.high_degree_vertices.push_back(v);
  }

  const VertexSet rest = g.all_vertices() & ~bit(root);
  const auto parts = g.components_within(rest);
  for (VertexSet part : parts) p.components_minus_root.push_back(members(part));
  const auto parts_in_comp = g.components_within(comp & ~bit(root));
  p.root_is_cut_vertex = parts_in_comp.size() >= 2;

  if (p.connected) {
    bool yam = true;
    for (VertexSet part : parts) {
      const Shape sh = shape_of(g, part);
      if (sh.is_generalized_star()) {
        if ((g.neighbors(root) & part) != bit(*sh.star_center)) yam = false;
      } else if (!sh.is_path) {
        yam = false;
      }
    }
    p.is_yam = yam;
  }
  return p;
}

}  // namespace inpp
