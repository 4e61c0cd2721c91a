#include "inpp/nullity.hpp"

#include <algorithm>

#include "inpp/error.hpp"

namespace inpp {

namespace {

void check_index(const RationalSymMatrix& m, int i) {
  if (i < 0 || i >= m.order()) {
    throw DomainError("index " + std::to_string(i + 1) + " out of range 1.." + std::to_string(m.order()));
  }
}

/// Block split around index i: the off-diagonal column b and C = m(i).
struct Bordered {
  Rational a;
  RationalVector b;
  RationalSymMatrix c;
};

Bordered split(const RationalSymMatrix& m, int i) {
  Bordered out{m(i, i), {}, principal_delete(m, {i})};
  for (int r = 0; r < m.order(); ++r) {
    if (r != i) out.b.push_back(m(r, i));
  }
  return out;
}

Rational dot(const RationalVector& x, const RationalVector& y) {
  Rational s = 0;
  for (std::size_t k = 0; k < x.size(); ++k) s += x[k] * y[k];
  return s;
}

}  // namespace

std::string to_string(NullityPair p) { return "(" + std::to_string(p.k) + "," + std::to_string(p.l) + ")"; }

std::string to_string(VertexClass c) {
  switch (c) {
    case VertexClass::upper: return "upper";
    case VertexClass::neutral: return "neutral";
    case VertexClass::downer: return "downer";
  }
  return "?";
}

int nullity(const RationalSymMatrix& m) { return m.order() - rank(m.matrix()); }

std::vector<RationalVector> nullspace_basis(const RationalSymMatrix& m) { return nullspace(m.matrix()); }

RationalSymMatrix principal_delete(const RationalSymMatrix& m, const std::vector<int>& indices) {
  std::vector<bool> drop(static_cast<std::size_t>(m.order()), false);
  for (int i : indices) {
    check_index(m, i);
    drop[static_cast<std::size_t>(i)] = true;
  }
  std::vector<int> keep;
  for (int i = 0; i < m.order(); ++i) {
    if (!drop[static_cast<std::size_t>(i)]) keep.push_back(i);
  }
  return m.permuted(keep);
}

NullityPair nullity_pair(const RationalSymMatrix& m, int i) {
  check_index(m, i);
  return {nullity(m), nullity(principal_delete(m, {i}))};
}

VertexClass classify_vertex(const RationalSymMatrix& m, int i) {
  if (m.order() == 0) throw DomainError("classify_vertex: empty matrix");
  check_index(m, i);
  const Bordered s = split(m, i);
  const auto x = solve(s.c.matrix(), s.b);
  if (!x) return VertexClass::upper;
  // x^T C x = x^T b does not depend on which solution was found.
  return s.a == dot(*x, s.b) ? VertexClass::downer : VertexClass::neutral;
}

Rational neutral_shift(const RationalSymMatrix& m, int i) {
  check_index(m, i);
  if (classify_vertex(m, i) != VertexClass::neutral) {
    throw DomainError("neutral_shift: index " + std::to_string(i + 1) + " is not neutral");
  }
  const Bordered s = split(m, i);
  const auto x = solve(s.c.matrix(), s.b);
  const Rational t = dot(*x, s.b) - s.a;
  RationalSymMatrix shifted = m;
  shifted.add_to_diagonal(i, t);
  if (sgn(t) == 0 || classify_vertex(shifted, i) != VertexClass::downer) {
    throw std::logic_error("neutral_shift: postcondition failed");
  }
  return t;
}

bool in_pattern(const RationalSymMatrix& m, const Graph& g, bool closed) {
  if (m.order() != g.order()) {
    throw DomainError("pattern check: matrix order " + std::to_string(m.order()) + " vs graph order " +
                      std::to_string(g.order()));
  }
  for (int p = 0; p < m.order(); ++p) {
    for (int q = p + 1; q < m.order(); ++q) {
      const bool nonzero = sgn(m(p, q)) != 0;
      const bool edge = g.adjacent(p, q);
      if (nonzero && !edge) return false;
      if (!closed && edge && !nonzero) return false;
    }
  }
  return true;
}

RationalSymMatrix direct_sum(const RationalSymMatrix& a, const RationalSymMatrix& b) {
  RationalSymMatrix out(a.order() + b.order());
  for (int p = 0; p < a.order(); ++p)
    for (int q = p; q < a.order(); ++q) out.set(p, q, a(p, q));
  for (int p = 0; p < b.order(); ++p)
    for (int q = p; q < b.order(); ++q) out.set(a.order() + p, a.order() + q, b(p, q));
  return out;
}

RationalSymMatrix adjacency_matrix(const Graph& g) {
  RationalSymMatrix out(g.order());
  for (const Edge& e : g.edges()) out.set(e.u, e.v, 1);
  return out;
}

RationalSymMatrix laplacian_matrix(const Graph& g) {
  RationalSymMatrix out(g.order());
  for (const Edge& e : g.edges()) out.set(e.u, e.v, -1);
  for (int v = 0; v < g.order(); ++v) out.set(v, v, g.degree(v));
  return out;
}

RationalSymMatrix dominant_matrix(const Graph& g) {
  RationalSymMatrix out = adjacency_matrix(g);
  int max_degree = 0;
  for (int v = 0; v < g.order(); ++v) max_degree = std::max(max_degree, g.degree(v));
  for (int v = 0; v < g.order(); ++v) out.set(v, v, 1 + max_degree);
  return out;
}

Graph pattern_graph(const RationalSymMatrix& m) {
  Graph g(m.order());
  for (int p = 0; p < m.order(); ++p) {
    for (int q = p + 1; q < m.order(); ++q) {
      if (sgn(m(p, q)) != 0) g.add_edge(p, q);
    }
  }
  return g;
}

}  // namespace inpp
