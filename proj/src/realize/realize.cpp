#include "inpp/realize.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <stdexcept>
#include <thread>

#include "inpp/error.hpp"
#include "inpp/rng.hpp"
#include "inpp/strong.hpp"

namespace inpp {

namespace {

int lowest(VertexSet s) { return std::countr_zero(s); }

std::vector<Vertex> members(VertexSet s) {
  std::vector<Vertex> out;
  while (s) {
    out.push_back(lowest(s));
    s &= s - 1;
  }
  return out;
}

/// Writes `block` (indexed by the members of `set` in increasing order) into m.
void place_block(RationalSymMatrix& m, VertexSet set, const RationalSymMatrix& block) {
  const auto vs = members(set);
  for (std::size_t p = 0; p < vs.size(); ++p) {
    for (std::size_t q = p; q < vs.size(); ++q) {
      m.set(vs[p], vs[q], block(static_cast<int>(p), static_cast<int>(q)));
    }
  }
}

void require_connected(const RootedGraph& g, const char* what) {
  if (!g.graph().connected()) throw DomainError(std::string(what) + ": graph must be connected");
}

/// Components of G - i, in the labels of G, with the one holding the
/// smallest-indexed neighbor of i first.
std::vector<VertexSet> root_components(const RootedGraph& g) {
  const Vertex i = g.root();
  const VertexSet rest = g.graph().all_vertices() & ~(VertexSet{1} << i);
  auto comps = g.graph().components_within(rest);
  const VertexSet nb = g.graph().neighbors(i);
  if (nb != 0) {
    const Vertex first = lowest(nb);
    std::stable_partition(comps.begin(), comps.end(),
                          [&](VertexSet c) { return (c >> first) & 1U; });
  }
  return comps;
}

/// Root row: 1 on every neighbor, diagonal a.
void place_root(RationalSymMatrix& m, const RootedGraph& g, const Rational& a) {
  const Vertex i = g.root();
  m.set(i, i, a);
  for (Vertex v : members(g.graph().neighbors(i))) m.set(i, v, 1);
}

/// Adjacency of K_{n-1} plus 1 on the first m+1 diagonal entries.
RationalSymMatrix b_matrix(int m, int n) {
  RationalSymMatrix b(n - 1);
  for (int p = 0; p < n - 1; ++p) {
    for (int q = p + 1; q < n - 1; ++q) b.set(p, q, 1);
    if (p <= m) b.set(p, p, 1);
  }
  return b;
}

/// [[1^T B 1, (B1)^T], [B1, B]]: realizes (m+1, m) on K_n rooted at 0.
RationalSymMatrix b_hat(int m, int n) {
  const RationalSymMatrix b = b_matrix(m, n);
  const RationalVector ones(static_cast<std::size_t>(n - 1), Rational(1));
  const RationalVector b1 = b.multiply(ones);
  Rational total = 0;
  for (const auto& x : b1) total += x;
  RationalSymMatrix out(n);
  out.set(0, 0, total);
  for (int p = 0; p < n - 1; ++p) {
    out.set(0, p + 1, b1[static_cast<std::size_t>(p)]);
    for (int q = p; q < n - 1; ++q) out.set(p + 1, q + 1, b(p, q));
  }
  return out;
}

}  // namespace

Realization make_realization(RationalSymMatrix matrix, const RootedGraph& g, NullityPair pair,
                             std::string provenance) {
  if (!in_pattern(matrix, g.graph())) throw std::logic_error(provenance + ": matrix is not in S(G)");
  const NullityPair got = nullity_pair(matrix, g.root());
  if (got != pair) {
    throw std::logic_error(provenance + ": expected pair " + to_string(pair) + ", got " + to_string(got));
  }
  Realization r{std::move(matrix), g, pair, false, std::move(provenance)};
  r.snip_verified = has_snip(r.matrix, g.graph(), g.root());
  return r;
}

Realization realize_trivial(const RootedGraph& g, NullityPair pair) {
  require_connected(g, "realize_trivial");
  const Graph& graph = g.graph();
  if (pair == NullityPair{0, 0} || pair == NullityPair{1, 0}) {
    RationalSymMatrix m = dominant_matrix(graph);
    if (pair.k == 1) m.add_to_diagonal(g.root(), neutral_shift(m, g.root()));
    return make_realization(std::move(m), g, pair, pair.k ? "trivial-downer-shift" : "trivial-dominant");
  }
  if (pair == NullityPair{0, 1}) {
    if (g.order() < 2) throw DomainError("realize_trivial: (0,1) needs at least two vertices");
    RationalSymMatrix m(g.order());
    const auto comps = root_components(g);
    place_block(m, comps.front(), laplacian_matrix(graph.induced(comps.front())));
    VertexSet others = 0;
    for (std::size_t c = 1; c < comps.size(); ++c) others |= comps[c];
    if (others) place_block(m, others, dominant_matrix(graph.induced(others)));
    place_root(m, g, 1);
    return make_realization(std::move(m), g, pair, "trivial-laplacian-border");
  }
  throw DomainError("realize_trivial: pair " + to_string(pair) + " is not one of (0,0), (1,0), (0,1)");
}

bool complete_pair_admissible(int n, NullityPair pair) {
  const auto [k, l] = pair;
  if (n < 2 || k < 0 || l < 0) return false;
  if (pair == NullityPair{0, 1}) return true;
  return std::abs(k - l) <= 1 && l <= n - 2 && k <= n - 1;
}

Realization realize_complete(int n, Vertex i, NullityPair pair) {
  if (n < 2 || n > Graph::kMaxOrder) throw DomainError("realize_complete: order out of range");
  if (i < 0 || i >= n) throw DomainError("realize_complete: root out of range");
  if (!complete_pair_admissible(n, pair)) {
    throw DomainError("realize_complete: pair " + to_string(pair) + " is not realizable on K_" + std::to_string(n));
  }
  const RootedGraph g = build_family(Family::complete, n, RootSpec::at(i));
  const RootedGraph g0 = g.with_root(0);
  const auto [k, l] = pair;
  RationalSymMatrix base;
  std::string name;
  if (pair == NullityPair{0, 0} || pair == NullityPair{1, 0} || pair == NullityPair{0, 1}) {
    base = realize_trivial(g0, pair).matrix;
    name = "complete-trivial";
  } else if (k == l + 1) {
    base = b_hat(l, n);
    name = "complete-bhat";
  } else if (k == l) {
    base = b_hat(l, n);
    base.add_to_diagonal(0, 1);
    name = "complete-bhat-shift";
  } else {
    // (l-1, l), l >= 2: border B-hat_{l-1, n-1} with y = (1, -1, ..., -1).
    const RationalSymMatrix inner = b_hat(l - 1, n - 1);
    base = RationalSymMatrix(n);
    base.set(0, 1, 1);
    for (int p = 2; p < n; ++p) base.set(0, p, -1);
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p; q < n - 1; ++q) base.set(p + 1, q + 1, inner(p, q));
    }
    name = "complete-bordered-bhat";
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) perm[static_cast<std::size_t>(p)] = p;
  std::swap(perm[0], perm[static_cast<std::size_t>(i)]);
  return make_realization(base.permuted(perm), g, pair, name);
}

bool star_pair_admissible(int leaves, StarRoot root, NullityPair pair) {
  const auto [k, l] = pair;
  const int n = leaves;
  if (n < 3 || k < 0 || l < 0) return false;
  if (pair == NullityPair{0, 0} || pair == NullityPair{1, 0} || pair == NullityPair{0, 1}) return true;
  if (root == StarRoot::center) return k == l - 1 && l >= 2 && l <= n;
  return (k == l + 1 || k == l) && l >= 1 && l <= n - 2;
}

Realization realize_star(int leaves, StarRoot root, NullityPair pair) {
  if (leaves < 3 || leaves + 1 > Graph::kMaxOrder) throw DomainError("realize_star: needs 3 to 63 leaves");
  if (!star_pair_admissible(leaves, root, pair)) {
    throw DomainError("realize_star: pair " + to_string(pair) + " is not realizable on this rooted star");
  }
  const int order = leaves + 1;
  const Vertex center = leaves;
  const RootedGraph g =
      build_family(Family::star, order, root == StarRoot::center ? RootSpec::center() : RootSpec::leaf());
  if (pair == NullityPair{0, 0} || pair == NullityPair{1, 0} || pair == NullityPair{0, 1}) {
    return realize_trivial(g, pair);
  }
  const auto [k, l] = pair;
  RationalSymMatrix m(order);
  for (Vertex v = 0; v < leaves; ++v) m.set(v, center, 1);
  // t leaves (lowest indices) get diagonal 0, the rest 1.
  int zero_leaves = 0;
  std::string name;
  if (root == StarRoot::center) {
    zero_leaves = l;
    m.set(center, center, 1);
    for (Vertex v = zero_leaves; v < leaves; ++v) m.set(v, v, 1);
    name = "star-center";
  } else if (k == l + 1) {
    zero_leaves = l + 2;
    for (Vertex v = zero_leaves; v < leaves; ++v) m.set(v, v, 1);
    name = "star-leaf-downer";
  } else {
    // Root leaf 0 gets diagonal 1; leaves 1..l+1 are zero.
    zero_leaves = l + 1;
    m.set(0, 0, 1);
    for (Vertex v = zero_leaves + 1; v < leaves; ++v) m.set(v, v, 1);
    name = "star-leaf-neutral";
  }
  return make_realization(std::move(m), g, pair, name);
}

Realization realize_cut_vertex(const RootedGraph& g) {
  require_connected(g, "realize_cut_vertex");
  const auto comps = root_components(g);
  if (comps.size() < 2) throw DomainError("realize_cut_vertex: root is not a cut vertex");
  const Graph& graph = g.graph();
  RationalSymMatrix m(g.order());
  place_block(m, comps[0], laplacian_matrix(graph.induced(comps[0])));
  place_block(m, comps[1], laplacian_matrix(graph.induced(comps[1])));
  VertexSet rest = 0;
  for (std::size_t c = 2; c < comps.size(); ++c) rest |= comps[c];
  if (rest) place_block(m, rest, dominant_matrix(graph.induced(rest)));
  place_root(m, g, 1);
  return make_realization(std::move(m), g, NullityPair{1, 2}, "cut-vertex-laplacians");
}

std::vector<std::string> certificate_names() {
  return {"ex2_4_star", "ex3_3", "ex3_7", "ex5_3_paw", "ex5_3_s211"};
}

Certificate certificate_matrix(std::string_view name) {
  Certificate c;
  c.name = std::string(name);
  if (name == "ex2_4_star") {
    c.matrix = {{0, 0, 0, 1}, {0, 0, 0, 1}, {0, 0, 0, 1}, {1, 1, 1, 0}};
    c.graph = build_family(Family::star, 4, RootSpec::leaf());
    c.pair = {2, 1};
    c.snip = true;
  } else if (name == "ex3_3") {
    c.matrix = {{0, 1, 1}, {1, 0, 0}, {1, 0, 0}};
    c.pair = {1, 2};
    c.snip = false;
  } else if (name == "ex3_7") {
    c.matrix = {{1, 0}, {0, 0}};
    c.pair = {1, 1};
    c.snip = false;
    c.sap = true;
    c.deleted_sap = true;
  } else if (name == "ex5_3_paw") {
    c.matrix = {{0, 1, 0, 0}, {1, 1, 1, 1}, {0, 1, 1, 1}, {0, 1, 1, 1}};
    c.pair = {1, 2};
    c.snip = true;
    c.deleted_sap = true;
  } else if (name == "ex5_3_s211") {
    c.matrix = {{0, 1, 0, 0, 0}, {1, 0, 0, 0, 1}, {0, 0, 0, 0, 1}, {0, 0, 0, 0, 1}, {0, 1, 1, 1, 0}};
    c.pair = {1, 2};
    c.snip = true;
    c.deleted_sap = true;
  } else {
    throw DomainError("unknown certificate '" + c.name + "'");
  }
  if (c.graph.order() != c.matrix.order()) c.graph = RootedGraph(pattern_graph(c.matrix), 0);
  return c;
}

namespace {

struct WorkerResult {
  std::optional<Realization> found;
  long iterations = 0;
};

/// Pushes null(C) toward `target` by diagonal shifts on neutral vertices
/// (raise) or downer vertices (lower). Returns false when stuck.
bool steer_nullity(RationalSymMatrix& c, int target, Rng& rng, std::int64_t radius) {
  int current = nullity(c);
  while (current != target) {
    const VertexClass want = current < target ? VertexClass::neutral : VertexClass::downer;
    std::vector<int> candidates;
    for (int v = 0; v < c.order(); ++v) {
      if (classify_vertex(c, v) == want) candidates.push_back(v);
    }
    if (candidates.empty()) return false;
    const int v = candidates[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(candidates.size()) - 1))];
    if (want == VertexClass::neutral) {
      c.add_to_diagonal(v, neutral_shift(c, v));
      ++current;
    } else {
      c.add_to_diagonal(v, Rational(rng.nonzero(radius)));
      --current;
    }
  }
  return true;
}

/// A border on the neighbor coordinates `nb` (indices into C) lying in
/// Col(C) = ker(C)^perp, with every neighbor coordinate nonzero.
std::optional<RationalVector> border_in_column_space(const RationalSymMatrix& c, const std::vector<int>& nb,
                                                     Rng& rng, std::int64_t radius) {
  const auto kernel = nullspace_basis(c);
  RationalVector b(static_cast<std::size_t>(c.order()), Rational(0));
  if (kernel.empty()) {
    for (int v : nb) b[static_cast<std::size_t>(v)] = rng.nonzero(radius);
    return b;
  }
  RationalMatrix k(static_cast<int>(kernel.size()), static_cast<int>(nb.size()));
  for (std::size_t r = 0; r < kernel.size(); ++r) {
    for (std::size_t j = 0; j < nb.size(); ++j) k(static_cast<int>(r), static_cast<int>(j)) = kernel[r][static_cast<std::size_t>(nb[j])];
  }
  const auto basis = nullspace(k);
  if (basis.empty()) return std::nullopt;
  RationalVector comb(nb.size(), Rational(0));
  for (const auto& v : basis) {
    const Rational coef = rng.nonzero(radius);
    for (std::size_t j = 0; j < nb.size(); ++j) comb[j] += coef * v[j];
  }
  for (std::size_t j = 0; j < nb.size(); ++j) {
    if (sgn(comb[j]) == 0) return std::nullopt;
    b[static_cast<std::size_t>(nb[j])] = comb[j];
  }
  return b;
}

WorkerResult search_worker(const SearchRequest& req, std::uint64_t seed, long budget,
                           const std::atomic<int>& best_worker, int worker) {
  WorkerResult out;
  Rng rng(seed);
  const RootedGraph& g = req.graph;
  const Vertex i = g.root();
  const int n = g.order();
  const Graph rest = g.minus_root();
  const auto rest_edges = rest.edges();
  // Index of each G vertex inside C = A(i).
  auto to_c = [i](Vertex v) { return v < i ? v : v - 1; };
  std::vector<int> nb;
  for (Vertex v : members(g.graph().neighbors(i))) nb.push_back(to_c(v));
  const auto [k, l] = req.pair;

  std::int64_t radius = 1;
  const long double_every = std::max(1L, budget / 4);
  RationalSymMatrix c(n - 1);
  for (long it = 0; it < budget; ++it) {
    if (best_worker.load(std::memory_order_relaxed) < worker) break;
    ++out.iterations;
    if (it > 0 && it % double_every == 0) radius *= 2;
    if (it % 4 == 0) {
      for (const auto& e : rest_edges) c.set(e.u, e.v, Rational(rng.nonzero(radius)));
    }
    for (int v = 0; v < n - 1; ++v) c.set(v, v, Rational(rng.uniform(-radius, radius)));
    if (!steer_nullity(c, l, rng, radius)) continue;

    RationalVector b;
    Rational a;
    if (k == l - 1) {
      b.assign(static_cast<std::size_t>(n - 1), Rational(0));
      for (int v : nb) b[static_cast<std::size_t>(v)] = rng.nonzero(radius);
      if (solve(c.matrix(), b)) continue;
      a = rng.uniform(-radius, radius);
    } else {
      auto border = border_in_column_space(c, nb, rng, radius);
      if (!border) continue;
      b = std::move(*border);
      const auto x = solve(c.matrix(), b);
      if (!x) continue;
      Rational s = 0;
      for (std::size_t j = 0; j < b.size(); ++j) s += (*x)[j] * b[j];
      if (k == l + 1) {
        a = s;
      } else {
        a = rng.uniform(-radius, radius);
        if (a == s) a += 1;
      }
    }

    RationalSymMatrix m(n);
    for (Vertex p = 0; p < n; ++p) {
      if (p == i) continue;
      for (Vertex q = p; q < n; ++q) {
        if (q != i) m.set(p, q, c(to_c(p), to_c(q)));
      }
      m.set(i, p, b[static_cast<std::size_t>(to_c(p))]);
    }
    m.set(i, i, a);
    if (!in_pattern(m, g.graph()) || nullity_pair(m, i) != req.pair) continue;
    if (req.require_snip && !has_snip(m, g.graph(), i)) continue;
    out.found = make_realization(std::move(m), g, req.pair, "search");
    return out;
  }
  return out;
}

}  // namespace

SearchOutcome realize_search(const SearchRequest& req) {
  const auto [k, l] = req.pair;
  if (k < 0 || l < 0) throw DomainError("realize_search: pair entries must be nonnegative");
  if (req.budget < 0) throw DomainError("realize_search: budget must be nonnegative");
  const int jobs = std::max(1, req.jobs);
  SearchOutcome outcome;
  if (std::abs(k - l) > 1 || l > req.graph.order() - 1) return outcome;

  std::atomic<int> best{jobs};
  std::vector<WorkerResult> results(static_cast<std::size_t>(jobs));
  const long per_worker = (req.budget + jobs - 1) / jobs;
  auto run = [&](int w) {
    const std::uint64_t seed = jobs == 1 ? req.seed : derive_seed(req.seed, static_cast<std::uint64_t>(w));
    results[static_cast<std::size_t>(w)] = search_worker(req, seed, jobs == 1 ? req.budget : per_worker, best, w);
    if (results[static_cast<std::size_t>(w)].found) {
      int cur = best.load();
      while (w < cur && !best.compare_exchange_weak(cur, w)) {
      }
    }
  };
  if (jobs == 1) {
    run(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(run, w);
  }
  for (int w = 0; w < jobs; ++w) {
    auto& r = results[static_cast<std::size_t>(w)];
    if (r.found) {
      outcome.found = std::move(r.found);
      outcome.iterations = r.iterations;
      outcome.winning_worker = w;
      return outcome;
    }
    outcome.iterations += r.iterations;
  }
  return outcome;
}

}  // namespace inpp
