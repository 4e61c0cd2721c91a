#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "inpp/graph.hpp"

namespace inpp {

/// Isomorphism-invariant key of a (rooted) graph. Two graphs have equal keys
/// iff they are isomorphic (root-preserving when rooted).
struct CanonicalForm {
  int order = 0;
  bool rooted = false;
  /// Upper triangle of the canonically relabeled adjacency matrix, row-major.
  std::vector<std::uint64_t> words;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

struct CanonicalFormHash {
  std::size_t operator()(const CanonicalForm& f) const noexcept;
};

/// Canonical relabeling: vertex p of the canonical graph is vertex perm[p] of
/// the input. For rooted graphs the root always lands at position 0.
struct CanonicalLabeling {
  std::vector<Vertex> perm;
  CanonicalForm form;
};

/// Colour refinement followed by an individualisation search over the
/// remaining non-singleton cells; the root is a forced singleton colour.
CanonicalLabeling canonical_labeling(const Graph& g);
CanonicalLabeling canonical_labeling(const RootedGraph& g);

CanonicalForm canonical_form(const Graph& g);
CanonicalForm canonical_form(const RootedGraph& g);

/// The input relabeled canonically (root at vertex 0).
RootedGraph canonical_graph(const RootedGraph& g);

bool isomorphic(const RootedGraph& a, const RootedGraph& b);

}  // namespace inpp
