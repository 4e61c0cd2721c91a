#pragma once

#include <optional>
#include <string>
#include <vector>

#include "inpp/graph.hpp"
#include "inpp/nullity.hpp"
#include "inpp/numeric.hpp"

namespace inpp {

/// Matrix of (dB, dQ) -> dQ^T A + A dQ + dB.
/// Rows: symmetric coordinates (p,q), p <= q, lexicographic.
/// Columns: first the free entries (r,s) of dQ in row-major order (entries
/// (i,s) with s != i are fixed at zero), then the entries of dB: the diagonal
/// and the edges of G, as (p,q) with p <= q, lexicographic.
struct DerivativeOperator {
  FloatMatrix matrix;
  std::vector<Edge> row_coords;
  std::vector<Edge> q_columns;  // (r,s)
  std::vector<Edge> b_columns;  // (p,q), p <= q
};

DerivativeOperator assemble_derivative(const FloatSymMatrix& a, const Graph& g, Vertex i);

inline constexpr double kDefaultRankTol = 1e-8;

/// The derivative has full row rank n(n+1)/2 at relative tolerance tol.
bool snip_via_surjectivity(const FloatSymMatrix& a, const Graph& g, Vertex i, double tol = kDefaultRankTol);

struct NumericPair {
  NullityPair pair;
  bool ambiguous = false;
};
/// Nullities of a and a(i) from numerical ranks at relative tolerance tol,
/// flagged ambiguous when either rank gap is below 10^3.
NumericPair numerical_pair(const FloatSymMatrix& a, Vertex i, double tol = kDefaultRankTol);

struct LiftOptions {
  /// Magnitude of the new off-diagonal targets; 0 picks 10^-2 times the
  /// smallest edge entry of A.
  double eps = 0.0;
  /// Sign of each new-edge target, applied in the order of new edges; empty
  /// means all +1.
  std::vector<int> signs;
  int max_halvings = 6;
  int max_iterations = 60;
  double residual_tol = 1e-12;
  double rank_tol = kDefaultRankTol;
  double edge_tol = 1e-8;
};

struct LiftResult {
  FloatSymMatrix lifted;
  RootedGraph host;
  double residual = 0.0;
  double min_edge_magnitude = 0.0;
  /// Smallest |entry| over the edges the lift had to create.
  double min_new_edge_magnitude = 0.0;
  /// Largest |entry| over non-edges of the host before they are zeroed.
  double max_non_edge_magnitude = 0.0;
  bool pattern_ok = false;
  bool converged = false;
  NumericPair input_pair;
  NumericPair lifted_pair;
  bool pair_preserved = false;
  bool snip_after = false;
  int newton_iterations = 0;
  double eps_used = 0.0;
  int halvings = 0;
  std::string message;
};

/// Lift of A in S(G) to S(H) for a rooted supergraph H. Vertex v
/// of G is vertex embedding[v] of H (identity by default); extra vertices of H
/// are padded with 1 on the diagonal.
LiftResult supergraph_lift(const FloatSymMatrix& a, const RootedGraph& g, const RootedGraph& h,
                           const LiftOptions& opts = {}, std::optional<std::vector<Vertex>> embedding = std::nullopt);

/// Lift of A in S(G) to S(H) where G is H with the edge {u,v} contracted (the
/// merged vertex takes the smaller label, the larger one is removed). u and v
/// must have disjoint neighborhoods and the root of H must not be v. opts.eps
/// plays the role of the ratio delta.
LiftResult decontraction_lift(const FloatSymMatrix& a, const RootedGraph& g, const RootedGraph& h, Vertex u, Vertex v,
                              const LiftOptions& opts = {});

}  // namespace inpp
