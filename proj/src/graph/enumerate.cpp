#include "inpp/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "inpp/canonical.hpp"
#include "inpp/error.hpp"

namespace inpp {

namespace {

void check_cap(int order, int cap) {
  if (order < 1) throw DomainError("enumeration order must be >= 1");
  if (order > cap) {
    throw DomainError("enumeration order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

std::vector<Graph> enumerate_graphs(int order, int cap) {
  check_cap(order, cap);
  // Grow layer by layer: every graph on k+1 vertices is some graph on k
  // vertices plus one vertex joined to a subset.
  std::vector<Graph> layer{Graph(1)};
  for (int k = 1; k < order; ++k) {
    std::map<CanonicalForm, Graph> next;
    for (const Graph& g : layer) {
      for (VertexSet subset = 0; subset < (VertexSet{1} << k); ++subset) {
        Graph h(k + 1);
        for (const Edge& e : g.edges()) h.add_edge(e.u, e.v);
        for (Vertex v = 0; v < k; ++v) {
          if (subset & (VertexSet{1} << v)) h.add_edge(v, k);
        }
        auto lab = canonical_labeling(h);
        next.try_emplace(std::move(lab.form), h.permuted(lab.perm));
      }
    }
    layer.clear();
    for (auto& [key, g] : next) layer.push_back(std::move(g));
  }
  return layer;
}

std::vector<RootedGraph> enumerate_rooted_graphs(int order, bool connected_only, int cap) {
  std::map<CanonicalForm, RootedGraph> classes;
  for (const Graph& g : enumerate_graphs(order, cap)) {
    if (connected_only && !g.connected()) continue;
    for (Vertex r = 0; r < order; ++r) {
      const RootedGraph rg(g, r);
      auto lab = canonical_labeling(rg);
      classes.try_emplace(std::move(lab.form), RootedGraph(g.permuted(lab.perm), 0));
    }
  }
  std::vector<RootedGraph> out;
  out.reserve(classes.size());
  for (auto& [key, g] : classes) out.push_back(std::move(g));
  return out;
}

std::vector<RootedGraph> enumerate_rooted_graphs_up_to(int max_order, bool connected_only, int cap) {
  check_cap(max_order, cap);
  std::vector<RootedGraph> out;
  for (int k = 1; k <= max_order; ++k) {
    auto layer = enumerate_rooted_graphs(k, connected_only, cap);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace inpp
