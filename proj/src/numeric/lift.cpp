#include "inpp/lift.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "inpp/error.hpp"
#include "inpp/minor.hpp"

namespace inpp {

namespace {

constexpr double kZeroTol = 1e-9;

int coord_index(int n, int p, int q) {
  if (p > q) std::swap(p, q);
  return p * (2 * n - p + 1) / 2 + (q - p);
}

std::vector<Edge> sym_coords(int n) {
  std::vector<Edge> out;
  for (int p = 0; p < n; ++p) {
    for (int q = p; q < n; ++q) out.push_back({p, q});
  }
  return out;
}

std::vector<Edge> q_coords(int n, Vertex i) {
  std::vector<Edge> out;
  for (int r = 0; r < n; ++r) {
    for (int s = 0; s < n; ++s) {
      if (r == i && s != i) continue;
      out.push_back({r, s});
    }
  }
  return out;
}

std::vector<Edge> b_coords(const Graph& g) {
  std::vector<Edge> out;
  for (int p = 0; p < g.order(); ++p) {
    out.push_back({p, p});
    for (int q = p + 1; q < g.order(); ++q) {
      if (g.adjacent(p, q)) out.push_back({p, q});
    }
  }
  return out;
}

/// Extra data for the parallel-row perturbation (C + B_delta).
struct Parallel {
  int u = 0;
  int v = 0;
  int w = 0;
  std::vector<int> beta;
};

struct Problem {
  FloatSymMatrix a;
  Vertex root = 0;
  std::vector<Edge> b_cols;
  FloatSymMatrix target;
  std::optional<Parallel> parallel;
};

struct Solution {
  FloatSymMatrix c;  // Q^T A Q
  double delta = 0.0;
  double residual = std::numeric_limits<double>::infinity();
  int iterations = 0;
  bool converged = false;
};

FloatSymMatrix congruence(const FloatSymMatrix& a, const FloatMatrix& q) {
  return FloatSymMatrix::from_matrix(q.transposed() * (a.dense() * q));
}

double ratio(const FloatSymMatrix& c, const Parallel& par) { return c(par.v, par.w) / c(par.u, par.w); }

/// F(B,Q) = C + B (or C + B_delta(C)) in symmetric coordinates.
std::vector<double> evaluate(const Problem& pb, const FloatSymMatrix& c, const std::vector<double>& b, double delta) {
  const int n = pb.a.order();
  std::vector<double> f(static_cast<std::size_t>(n * (n + 1) / 2));
  for (int p = 0; p < n; ++p) {
    for (int q = p; q < n; ++q) f[static_cast<std::size_t>(coord_index(n, p, q))] = c(p, q);
  }
  for (std::size_t k = 0; k < pb.b_cols.size(); ++k) {
    const auto [p, q] = pb.b_cols[k];
    f[static_cast<std::size_t>(coord_index(n, p, q))] += b[k];
    if (pb.parallel && (p == pb.parallel->u || q == pb.parallel->u)) {
      const int x = p == pb.parallel->u ? q : p;
      const auto& beta = pb.parallel->beta;
      if (std::find(beta.begin(), beta.end(), x) != beta.end()) {
        f[static_cast<std::size_t>(coord_index(n, pb.parallel->v, x))] += delta * b[k];
      }
    }
  }
  return f;
}

/// Derivative at (B, Q) with P = A Q; dQ = E_rs gives dC(p,q) =
/// [p==s] P(r,q) + [q==s] P(r,p).
FloatMatrix jacobian(const Problem& pb, const FloatMatrix& q, const FloatSymMatrix& c, const std::vector<double>& b,
                     double delta) {
  const int n = pb.a.order();
  const FloatMatrix p_mat = pb.a.dense() * q;
  const auto qc = q_coords(n, pb.root);
  const int rows = n * (n + 1) / 2;
  FloatMatrix j(rows, static_cast<int>(qc.size() + pb.b_cols.size()));
  // B[u, x] for x in beta, needed for d(B_delta)/d(delta).
  std::vector<double> b_u(static_cast<std::size_t>(n), 0.0);
  if (pb.parallel) {
    for (std::size_t k = 0; k < pb.b_cols.size(); ++k) {
      const auto [p, qq] = pb.b_cols[k];
      if (p == pb.parallel->u && qq != p) b_u[static_cast<std::size_t>(qq)] = b[k];
      if (qq == pb.parallel->u && qq != p) b_u[static_cast<std::size_t>(p)] = b[k];
    }
  }
  for (std::size_t col = 0; col < qc.size(); ++col) {
    const auto [r, s] = qc[col];
    auto dc = [&](int p, int qq) {
      return (p == s ? p_mat(r, qq) : 0.0) + (qq == s ? p_mat(r, p) : 0.0);
    };
    for (int p = 0; p < n; ++p) {
      for (int qq = p; qq < n; ++qq) j(coord_index(n, p, qq), static_cast<int>(col)) = dc(p, qq);
    }
    if (pb.parallel) {
      const auto& par = *pb.parallel;
      const double d_delta = (dc(par.v, par.w) - delta * dc(par.u, par.w)) / c(par.u, par.w);
      for (int x : par.beta) j(coord_index(n, par.v, x), static_cast<int>(col)) += d_delta * b_u[static_cast<std::size_t>(x)];
    }
  }
  for (std::size_t k = 0; k < pb.b_cols.size(); ++k) {
    const int col = static_cast<int>(qc.size() + k);
    const auto [p, qq] = pb.b_cols[k];
    j(coord_index(n, p, qq), col) = 1.0;
    if (pb.parallel && p != qq && (p == pb.parallel->u || qq == pb.parallel->u)) {
      const int x = p == pb.parallel->u ? qq : p;
      const auto& beta = pb.parallel->beta;
      if (std::find(beta.begin(), beta.end(), x) != beta.end()) j(coord_index(n, pb.parallel->v, x), col) += delta;
    }
  }
  return j;
}

struct Iterate {
  FloatMatrix q;
  std::vector<double> b;
};

/// Fills c, delta and residual of `sol` at `x`; returns goal - F(x).
std::vector<double> residual_at(const Problem& pb, const Iterate& x, const std::vector<double>& goal, Solution& sol) {
  sol.c = congruence(pb.a, x.q);
  sol.delta = pb.parallel ? ratio(sol.c, *pb.parallel) : 0.0;
  const auto f = evaluate(pb, sol.c, x.b, sol.delta);
  std::vector<double> rhs(goal.size());
  double res = 0;
  for (std::size_t k = 0; k < goal.size(); ++k) {
    rhs[k] = goal[k] - f[k];
    res = std::max(res, std::abs(rhs[k]));
  }
  sol.residual = std::isfinite(res) ? res : std::numeric_limits<double>::infinity();
  return rhs;
}

/// Newton iteration with least-norm steps, halving a step (at most 8 times)
/// while it fails to reduce the residual.
Solution newton(const Problem& pb, int max_iterations, double tol) {
  const int n = pb.a.order();
  const auto qc = q_coords(n, pb.root);
  Iterate x{FloatMatrix::identity(n), std::vector<double>(pb.b_cols.size(), 0.0)};
  std::vector<double> goal(static_cast<std::size_t>(n * (n + 1) / 2));
  for (int p = 0; p < n; ++p) {
    for (int qq = p; qq < n; ++qq) goal[static_cast<std::size_t>(coord_index(n, p, qq))] = pb.target(p, qq);
  }
  Solution sol;
  auto rhs = residual_at(pb, x, goal, sol);
  for (int it = 0;; ++it) {
    sol.iterations = it;
    if (!std::isfinite(sol.residual)) return sol;
    if (sol.residual < tol) {
      sol.converged = true;
      return sol;
    }
    if (it == max_iterations) return sol;
    const auto step = least_norm_solve(jacobian(pb, x.q, sol.c, x.b, sol.delta), rhs, 1e-12);
    double scale = 1.0;
    for (int tries = 0;; ++tries, scale *= 0.5) {
      Iterate next = x;
      for (std::size_t k = 0; k < qc.size(); ++k) next.q(qc[k].u, qc[k].v) += scale * step[k];
      for (std::size_t k = 0; k < next.b.size(); ++k) next.b[k] += scale * step[qc.size() + k];
      Solution trial;
      auto trial_rhs = residual_at(pb, next, goal, trial);
      if (trial.residual < sol.residual || tries == 8) {
        x = std::move(next);
        rhs = std::move(trial_rhs);
        sol.c = std::move(trial.c);
        sol.delta = trial.delta;
        sol.residual = trial.residual;
        break;
      }
    }
  }
}

double min_abs_edge(const FloatSymMatrix& a, const Graph& g) {
  double m = std::numeric_limits<double>::infinity();
  for (const auto& e : g.edges()) m = std::min(m, std::abs(a(e.u, e.v)));
  return m;
}

void require_pattern(const FloatSymMatrix& a, const Graph& g, const char* what) {
  if (a.order() != g.order()) throw DomainError(std::string(what) + ": matrix order does not match the graph");
  for (int p = 0; p < a.order(); ++p) {
    for (int q = p + 1; q < a.order(); ++q) {
      if (g.adjacent(p, q) != (a(p, q) != 0.0)) {
        throw DomainError(std::string(what) + ": matrix is not in S(G) at (" + std::to_string(p + 1) + "," +
                          std::to_string(q + 1) + ")");
      }
    }
  }
}

/// Zeroes host non-edges and fills the pattern and pair diagnostics.
void finish(LiftResult& r, FloatSymMatrix lifted, const RootedGraph& h, const std::vector<Edge>& new_edges,
            const LiftOptions& opts) {
  const Graph& hg = h.graph();
  for (int p = 0; p < lifted.order(); ++p) {
    for (int q = p + 1; q < lifted.order(); ++q) {
      if (hg.adjacent(p, q)) continue;
      r.max_non_edge_magnitude = std::max(r.max_non_edge_magnitude, std::abs(lifted(p, q)));
      lifted.set(p, q, 0.0);
    }
  }
  r.min_edge_magnitude = min_abs_edge(lifted, hg);
  r.min_new_edge_magnitude = std::numeric_limits<double>::infinity();
  for (const auto& e : new_edges) r.min_new_edge_magnitude = std::min(r.min_new_edge_magnitude, std::abs(lifted(e.u, e.v)));
  r.pattern_ok = r.converged && r.min_edge_magnitude > opts.edge_tol && r.max_non_edge_magnitude < kZeroTol;
  r.lifted_pair = numerical_pair(lifted, h.root(), opts.rank_tol);
  r.pair_preserved = r.converged && !r.input_pair.ambiguous && !r.lifted_pair.ambiguous &&
                     r.input_pair.pair == r.lifted_pair.pair;
  r.snip_after = r.converged && snip_via_surjectivity(lifted, hg, h.root(), opts.rank_tol);
  r.lifted = std::move(lifted);
  r.host = h;
  if (r.message.empty()) {
    if (!r.converged) {
      r.message = "Newton iteration did not converge; try a smaller eps";
    } else if (!r.pattern_ok) {
      r.message = "lifted matrix misses the host pattern at the edge tolerance";
    } else if (!r.pair_preserved) {
      r.message = r.lifted_pair.ambiguous || r.input_pair.ambiguous ? "ambiguous numerical rank" : "pair changed";
    } else {
      r.message = "ok";
    }
  }
}

double default_eps(const FloatSymMatrix& a, const Graph& g, const LiftOptions& opts) {
  if (opts.eps > 0) return opts.eps;
  const double m = min_abs_edge(a, g);
  return std::isfinite(m) ? 1e-2 * m : 1e-2;
}

}  // namespace

DerivativeOperator assemble_derivative(const FloatSymMatrix& a, const Graph& g, Vertex i) {
  const int n = a.order();
  if (g.order() != n) throw DomainError("assemble_derivative: matrix order does not match the graph");
  if (i < 0 || i >= n) throw DomainError("assemble_derivative: root out of range");
  Problem pb;
  pb.a = a;
  pb.root = i;
  pb.b_cols = b_coords(g);
  DerivativeOperator d;
  d.matrix = jacobian(pb, FloatMatrix::identity(n), a, std::vector<double>(pb.b_cols.size(), 0.0), 0.0);
  d.row_coords = sym_coords(n);
  d.q_columns = q_coords(n, i);
  d.b_columns = pb.b_cols;
  return d;
}

bool snip_via_surjectivity(const FloatSymMatrix& a, const Graph& g, Vertex i, double tol) {
  const int n = a.order();
  return numerical_rank(assemble_derivative(a, g, i).matrix, tol) == n * (n + 1) / 2;
}

NumericPair numerical_pair(const FloatSymMatrix& a, Vertex i, double tol) {
  if (i < 0 || i >= a.order()) throw DomainError("numerical_pair: root out of range");
  const RankInfo whole = rank_info(a.dense(), tol);
  const RankInfo minus = rank_info(a.without(i).dense(), tol);
  NumericPair p;
  p.pair = {a.order() - whole.rank, a.order() - 1 - minus.rank};
  p.ambiguous = whole.ambiguous || minus.ambiguous;
  return p;
}

LiftResult supergraph_lift(const FloatSymMatrix& a, const RootedGraph& g, const RootedGraph& h, const LiftOptions& opts,
                           std::optional<std::vector<Vertex>> embedding) {
  const int n = g.order();
  const int nh = h.order();
  require_pattern(a, g.graph(), "supergraph_lift");
  std::vector<Vertex> emb(static_cast<std::size_t>(n));
  if (embedding) {
    emb = *embedding;
  } else {
    for (int v = 0; v < n; ++v) emb[static_cast<std::size_t>(v)] = v;
  }
  if (nh < n || static_cast<int>(emb.size()) != n) throw DomainError("supergraph_lift: G is not a subgraph of H");
  std::vector<bool> used(static_cast<std::size_t>(nh), false);
  for (Vertex x : emb) {
    if (x < 0 || x >= nh || used[static_cast<std::size_t>(x)]) throw DomainError("supergraph_lift: bad embedding");
    used[static_cast<std::size_t>(x)] = true;
  }
  if (emb[static_cast<std::size_t>(g.root())] != h.root()) throw DomainError("supergraph_lift: roots differ");
  Graph image(nh);
  for (const auto& e : g.graph().edges()) {
    const Vertex x = emb[static_cast<std::size_t>(e.u)];
    const Vertex y = emb[static_cast<std::size_t>(e.v)];
    if (!h.graph().adjacent(x, y)) throw DomainError("supergraph_lift: G is not a subgraph of H");
    image.add_edge(x, y);
  }

  FloatSymMatrix padded(nh);
  for (int x = 0; x < nh; ++x) {
    if (!used[static_cast<std::size_t>(x)]) padded.set(x, x, 1.0);
  }
  for (int p = 0; p < n; ++p) {
    for (int q = p; q < n; ++q) padded.set(emb[static_cast<std::size_t>(p)], emb[static_cast<std::size_t>(q)], a(p, q));
  }
  if (!snip_via_surjectivity(padded, image, h.root(), opts.rank_tol)) {
    throw DomainError("supergraph_lift: derivative is not surjective (A lacks the SNIP)");
  }
  std::vector<Edge> new_edges;
  for (const auto& e : h.graph().edges()) {
    if (!image.adjacent(e.u, e.v)) new_edges.push_back(e);
  }
  if (!opts.signs.empty() && opts.signs.size() != new_edges.size()) {
    throw DomainError("supergraph_lift: need one sign per new edge (" + std::to_string(new_edges.size()) + ")");
  }

  LiftResult r;
  r.input_pair = numerical_pair(a, g.root(), opts.rank_tol);
  Problem pb;
  pb.a = padded;
  pb.root = h.root();
  pb.b_cols = b_coords(image);
  const double eps0 = default_eps(a, g.graph(), opts);
  Solution sol;
  for (int halving = 0; halving <= opts.max_halvings; ++halving) {
    const double eps = std::ldexp(eps0, -halving);
    pb.target = padded;
    for (std::size_t k = 0; k < new_edges.size(); ++k) {
      const double sign = opts.signs.empty() ? 1.0 : (opts.signs[k] < 0 ? -1.0 : 1.0);
      pb.target.set(new_edges[k].u, new_edges[k].v, sign * eps);
    }
    sol = newton(pb, opts.max_iterations, opts.residual_tol);
    r.eps_used = eps;
    r.halvings = halving;
    r.newton_iterations = sol.iterations;
    if (sol.converged) break;
  }
  r.converged = sol.converged;
  r.residual = sol.residual;
  finish(r, sol.c, h, new_edges, opts);
  return r;
}

LiftResult decontraction_lift(const FloatSymMatrix& a, const RootedGraph& g, const RootedGraph& h, Vertex u, Vertex v,
                              const LiftOptions& opts) {
  const Graph& hg = h.graph();
  const int nh = h.order();
  if (u < 0 || v < 0 || u >= nh || v >= nh || u == v || !hg.adjacent(u, v)) {
    throw DomainError("decontraction_lift: {u,v} must be an edge of H");
  }
  if (h.root() == v) throw DomainError("decontraction_lift: the root must not be v (swap u and v)");
  const VertexSet nu = hg.neighbors(u) & ~(VertexSet{1} << v);
  const VertexSet nv = hg.neighbors(v) & ~(VertexSet{1} << u);
  if (nu & nv) throw DomainError("decontraction_lift: u and v share a neighbor");
  if (apply_minor_op(h, MinorOp::contract_edge(u, v)) != g) {
    throw DomainError("decontraction_lift: G is not H with {u,v} contracted");
  }
  require_pattern(a, g.graph(), "decontraction_lift");

  // G label of each H vertex other than v; u maps to the merged vertex.
  const Vertex removed = std::max(u, v);
  auto g_label = [&](Vertex x) {
    if (x == u || x == v) return std::min(u, v);
    return x < removed ? x : x - 1;
  };
  std::vector<Vertex> embedding(static_cast<std::size_t>(g.order()));
  for (Vertex x = 0; x < nh; ++x) {
    if (x != v) embedding[static_cast<std::size_t>(g_label(x))] = x;
  }
  if (nv == 0) return supergraph_lift(a, g, h, opts, embedding);

  // Normal form: other vertices in order, then u, then v.
  std::vector<Vertex> order;
  for (Vertex x = 0; x < nh; ++x) {
    if (x != u && x != v) order.push_back(x);
  }
  order.push_back(u);
  order.push_back(v);
  std::vector<int> pos(static_cast<std::size_t>(nh));
  for (int k = 0; k < nh; ++k) pos[static_cast<std::size_t>(order[static_cast<std::size_t>(k)])] = k;
  const int n = nh - 1;
  const int pu = n - 1;
  const int pv = n;

  FloatSymMatrix a1(nh);
  Graph g1(nh);
  for (int p = 0; p < n; ++p) {
    for (int q = p; q < n; ++q) {
      const Vertex gp = g_label(order[static_cast<std::size_t>(p)]);
      const Vertex gq = g_label(order[static_cast<std::size_t>(q)]);
      a1.set(p, q, a(gp, gq));
      if (p != q && g.graph().adjacent(gp, gq)) g1.add_edge(p, q);
    }
  }
  a1.set(pv, pv, 1.0);
  const Vertex root = pos[static_cast<std::size_t>(h.root())];
  if (!snip_via_surjectivity(a1, g1, root, opts.rank_tol)) {
    throw DomainError("decontraction_lift: derivative is not surjective (A lacks the SNIP)");
  }
  Parallel par;
  par.u = pu;
  par.v = pv;
  for (VertexSet s = nv; s; s &= s - 1) par.beta.push_back(pos[static_cast<std::size_t>(std::countr_zero(s))]);
  std::sort(par.beta.begin(), par.beta.end());
  par.w = par.beta.front();

  LiftResult r;
  r.input_pair = numerical_pair(a, g.root(), opts.rank_tol);
  Problem pb;
  pb.a = a1;
  pb.root = root;
  pb.b_cols = b_coords(g1);
  pb.parallel = par;
  const double delta0 = default_eps(a, g.graph(), opts);
  Solution sol;
  for (int halving = 0; halving <= opts.max_halvings; ++halving) {
    const double delta = std::ldexp(delta0, -halving);
    pb.target = a1;
    for (int x : par.beta) pb.target.set(pv, x, delta * a1(pu, x));
    sol = newton(pb, opts.max_iterations, opts.residual_tol);
    r.eps_used = delta;
    r.halvings = halving;
    r.newton_iterations = sol.iterations;
    if (sol.converged) break;
  }
  r.converged = sol.converged;
  r.residual = sol.residual;

  // A' = E^T C E with E = I (+) [[1, 0], [-1/delta, 1]].
  FloatMatrix e = FloatMatrix::identity(nh);
  e(pv, pu) = -1.0 / sol.delta;
  const FloatSymMatrix normal = FloatSymMatrix::from_matrix(e.transposed() * (sol.c.dense() * e));
  FloatSymMatrix lifted(nh);
  for (Vertex x = 0; x < nh; ++x) {
    for (Vertex y = x; y < nh; ++y) lifted.set(x, y, normal(pos[static_cast<std::size_t>(x)], pos[static_cast<std::size_t>(y)]));
  }
  std::vector<Edge> new_edges;
  for (Vertex x = 0; x < nh; ++x) {
    if (x != v && hg.adjacent(x, v)) new_edges.push_back({std::min(x, v), std::max(x, v)});
  }
  finish(r, std::move(lifted), h, new_edges, opts);
  return r;
}

}  // namespace inpp
