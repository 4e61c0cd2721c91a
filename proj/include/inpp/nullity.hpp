#pragma once

#include <compare>
#include <string>
#include <vector>

#include "inpp/graph.hpp"
#include "inpp/rational_matrix.hpp"

namespace inpp {

/// (null(A), null(A(i))) for a root i.
struct NullityPair {
  int k = 0;
  int l = 0;
  friend auto operator<=>(const NullityPair&, const NullityPair&) = default;
};

std::string to_string(NullityPair p);

/// Whether deleting index i raises (upper), keeps (neutral) or lowers (downer)
/// the nullity by one.
enum class VertexClass { upper, neutral, downer };

std::string to_string(VertexClass c);

/// Order-0 matrices have nullity 0.
int nullity(const RationalSymMatrix& m);

/// Exact basis of ker(m); its size is nullity(m).
std::vector<RationalVector> nullspace_basis(const RationalSymMatrix& m);

/// m with the listed rows and columns removed, remaining indices compacted.
RationalSymMatrix principal_delete(const RationalSymMatrix& m, const std::vector<int>& indices);

NullityPair nullity_pair(const RationalSymMatrix& m, int i);

VertexClass classify_vertex(const RationalSymMatrix& m, int i);

/// The unique nonzero t making i a downer index of m + t E_ii. Requires i to
/// be neutral; the result is re-checked before it is returned.
Rational neutral_shift(const RationalSymMatrix& m, int i);

/// closed=false tests membership in S(G): off-diagonal entries nonzero exactly
/// on edges. closed=true tests the closure: zero on every non-edge.
bool in_pattern(const RationalSymMatrix& m, const Graph& g, bool closed = false);

RationalSymMatrix direct_sum(const RationalSymMatrix& a, const RationalSymMatrix& b);

/// Adjacency matrix of g (0/1 entries).
RationalSymMatrix adjacency_matrix(const Graph& g);

/// Laplacian D - A of g.
RationalSymMatrix laplacian_matrix(const Graph& g);

/// Adjacency plus (1 + max row sum) on the diagonal: strictly diagonally
/// dominant, hence nonsingular, and in S(g).
RationalSymMatrix dominant_matrix(const Graph& g);

/// The graph whose edges are the nonzero off-diagonal entries of m.
Graph pattern_graph(const RationalSymMatrix& m);

}  // namespace inpp
