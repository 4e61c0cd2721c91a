#include "inpp/canonical.hpp"

#include <algorithm>
#include <bit>
#include <optional>

namespace inpp {

namespace {

using Colors = std::vector<int>;

/// Re-rank `keys` densely in sorted order; returns the number of classes.
template <typename Key>
int rank_keys(const std::vector<Key>& keys, Colors& out) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  out.resize(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    out[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) - sorted.begin());
  }
  return static_cast<int>(sorted.size());
}

/// Iterated degree refinement until the partition is equitable. Cell order is
/// preserved: a vertex's old colour is the leading part of its new key.
int refine(const Graph& g, Colors& colors) {
  const int n = g.order();
  int classes = rank_keys(colors, colors);
  std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
  for (;;) {
    for (Vertex v = 0; v < n; ++v) {
      auto& key = keys[static_cast<std::size_t>(v)];
      key.assign(1, colors[static_cast<std::size_t>(v)]);
      for (VertexSet nb = g.neighbors(v); nb; nb &= nb - 1) {
        key.push_back(colors[static_cast<std::size_t>(std::countr_zero(nb))]);
      }
      std::sort(key.begin() + 1, key.end());
    }
    Colors next;
    const int refined = rank_keys(keys, next);
    colors = std::move(next);
    if (refined == classes) return classes;
    classes = refined;
  }
}

std::vector<std::uint64_t> encode(const Graph& g, const std::vector<Vertex>& perm) {
  const int n = g.order();
  const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
  std::vector<std::uint64_t> words((bits + 63) / 64, 0);
  std::size_t k = 0;
  for (int p = 0; p < n; ++p) {
    const VertexSet nb = g.neighbors(perm[static_cast<std::size_t>(p)]);
    for (int q = p + 1; q < n; ++q, ++k) {
      if (nb & (VertexSet{1} << perm[static_cast<std::size_t>(q)])) {
        words[k / 64] |= std::uint64_t{1} << (63 - k % 64);
      }
    }
  }
  return words;
}

struct Search {
  const Graph& g;
  std::optional<std::vector<std::uint64_t>> best;
  std::vector<Vertex> best_perm;

  void run(Colors colors) {
    const int n = g.order();
    const int classes = refine(g, colors);
    if (classes == n) {
      std::vector<Vertex> perm(static_cast<std::size_t>(n));
      for (Vertex v = 0; v < n; ++v) perm[static_cast<std::size_t>(colors[static_cast<std::size_t>(v)])] = v;
      auto words = encode(g, perm);
      if (!best || words > *best) {
        best = std::move(words);
        best_perm = std::move(perm);
      }
      return;
    }
    // Target cell: the first colour class with more than one vertex.
    std::vector<int> size(static_cast<std::size_t>(classes), 0);
    for (int c : colors) ++size[static_cast<std::size_t>(c)];
    int target = 0;
    while (size[static_cast<std::size_t>(target)] < 2) ++target;
    for (Vertex v = 0; v < n; ++v) {
      if (colors[static_cast<std::size_t>(v)] != target) continue;
      Colors next(colors.size());
      for (Vertex x = 0; x < n; ++x) {
        const int c = colors[static_cast<std::size_t>(x)];
        next[static_cast<std::size_t>(x)] = 2 * c + (c == target && x != v ? 1 : 0);
      }
      run(std::move(next));
    }
  }
};

CanonicalLabeling label(const Graph& g, std::optional<Vertex> root) {
  const int n = g.order();
  Colors colors(static_cast<std::size_t>(n), 1);
  if (root) colors[static_cast<std::size_t>(*root)] = 0;
  CanonicalLabeling out;
  out.form.order = n;
  out.form.rooted = root.has_value();
  if (n == 0) return out;
  Search s{g, std::nullopt, {}};
  s.run(std::move(colors));
  out.perm = std::move(s.best_perm);
  out.form.words = std::move(*s.best);
  return out;
}

}  // namespace

std::size_t CanonicalFormHash::operator()(const CanonicalForm& f) const noexcept {
  std::size_t h = static_cast<std::size_t>(f.order) * 2 + (f.rooted ? 1 : 0);
  for (std::uint64_t w : f.words) {
    h ^= static_cast<std::size_t>(w) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

CanonicalLabeling canonical_labeling(const Graph& g) { return label(g, std::nullopt); }

CanonicalLabeling canonical_labeling(const RootedGraph& g) { return label(g.graph(), g.root()); }

CanonicalForm canonical_form(const Graph& g) { return canonical_labeling(g).form; }

CanonicalForm canonical_form(const RootedGraph& g) { return canonical_labeling(g).form; }

RootedGraph canonical_graph(const RootedGraph& g) {
  const auto lab = canonical_labeling(g);
  return {g.graph().permuted(lab.perm), 0};
}

bool isomorphic(const RootedGraph& a, const RootedGraph& b) {
  if (a.order() != b.order() || a.graph().edge_count() != b.graph().edge_count()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace inpp
