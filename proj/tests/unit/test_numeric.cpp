#include <doctest.h>

#include <cmath>
#include <random>

#include "inpp/enumerate.hpp"
#include "inpp/error.hpp"
#include "inpp/lift.hpp"
#include "inpp/realize.hpp"
#include "inpp/strong.hpp"
#include "oracles.hpp"

using namespace inpp;

namespace {

RationalSymMatrix random_in_pattern(std::mt19937& rng, const Graph& g, int radius) {
  std::uniform_int_distribution<int> diag(-radius, radius);
  std::uniform_int_distribution<int> mag(1, radius);
  std::bernoulli_distribution sign(0.5);
  RationalSymMatrix m(g.order());
  for (int i = 0; i < g.order(); ++i) m.set(i, i, diag(rng));
  for (const auto& e : g.edges()) m.set(e.u, e.v, sign(rng) ? mag(rng) : -mag(rng));
  return m;
}

FloatSymMatrix congruent(const FloatSymMatrix& a, const FloatMatrix& q) {
  return FloatSymMatrix::from_matrix(q.transposed() * (a.dense() * q));
}

}  // namespace

TEST_CASE("derivative of K_2 with the all-ones matrix") {
  FloatSymMatrix a(2);
  a.set(0, 0, 1);
  a.set(0, 1, 1);
  a.set(1, 1, 1);
  const auto d = assemble_derivative(a, Graph(2, std::vector<Edge>{{0, 1}}), 0);
  // dQ columns (0,0), (1,0), (1,1); dB columns (0,0), (0,1), (1,1).
  CHECK(d.q_columns == std::vector<Edge>{{0, 0}, {1, 0}, {1, 1}});
  CHECK(d.b_columns == std::vector<Edge>{{0, 0}, {0, 1}, {1, 1}});
  const double want[3][6] = {{2, 2, 0, 1, 0, 0}, {1, 1, 1, 0, 1, 0}, {0, 0, 2, 0, 0, 1}};
  REQUIRE(d.matrix.rows() == 3);
  REQUIRE(d.matrix.cols() == 6);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 6; ++c) CHECK(d.matrix(r, c) == want[r][c]);
  }
}

TEST_CASE("derivative columns match finite differences") {
  std::mt19937 rng(5);
  const RootedGraph g = build_family(Family::paw, 4);
  const FloatSymMatrix a = FloatSymMatrix::from_rational(random_in_pattern(rng, g.graph(), 4));
  const auto d = assemble_derivative(a, g.graph(), g.root());
  const double h = 1e-6;
  for (std::size_t c = 0; c < d.q_columns.size(); ++c) {
    FloatMatrix plus = FloatMatrix::identity(4);
    FloatMatrix minus = FloatMatrix::identity(4);
    plus(d.q_columns[c].u, d.q_columns[c].v) += h;
    minus(d.q_columns[c].u, d.q_columns[c].v) -= h;
    const auto fp = congruent(a, plus);
    const auto fm = congruent(a, minus);
    for (std::size_t r = 0; r < d.row_coords.size(); ++r) {
      const auto [p, q] = d.row_coords[r];
      const double fd = (fp(p, q) - fm(p, q)) / (2 * h);
      CHECK(std::abs(fd - d.matrix(static_cast<int>(r), static_cast<int>(c))) < 1e-6);
    }
  }
}

TEST_CASE("numerical ranks") {
  CHECK(numerical_rank(FloatMatrix::identity(3), 1e-8) == 3);
  FloatMatrix ones(3, 3);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) ones(r, c) = 1;
  }
  CHECK(numerical_rank(ones, 1e-8) == 1);
  const FloatSymMatrix bhat = FloatSymMatrix::from_rational(RationalSymMatrix{{4, 2, 2}, {2, 1, 1}, {2, 1, 1}});
  const auto info = rank_info(bhat.dense(), 1e-8);
  CHECK(info.rank == 1);
  CHECK_FALSE(info.ambiguous);
  const FloatSymMatrix k4 = FloatSymMatrix::from_rational(realize_complete(4, 0, {1, 2}).matrix);
  const auto np = numerical_pair(k4, 0);
  CHECK(np.pair == NullityPair{1, 2});
  CHECK_FALSE(np.ambiguous);
}

TEST_CASE("svd reconstructs and solves") {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> x(-1, 1);
  FloatMatrix a(4, 7);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 7; ++c) a(r, c) = x(rng);
  }
  const Svd s = svd(a);
  for (std::size_t k = 1; k < s.sigma.size(); ++k) CHECK(s.sigma[k - 1] >= s.sigma[k]);
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 7; ++c) {
      double sum = 0;
      for (std::size_t k = 0; k < s.sigma.size(); ++k) sum += s.u(r, static_cast<int>(k)) * s.sigma[k] * s.v(c, static_cast<int>(k));
      CHECK(std::abs(sum - a(r, c)) < 1e-12);
    }
  }
  const std::vector<double> b{1, -2, 0.5, 3};
  const auto sol = least_norm_solve(a, b, 1e-12);
  for (int r = 0; r < 4; ++r) {
    double sum = 0;
    for (int c = 0; c < 7; ++c) sum += a(r, c) * sol[static_cast<std::size_t>(c)];
    CHECK(std::abs(sum - b[static_cast<std::size_t>(r)]) < 1e-12);
  }
}

TEST_CASE("surjectivity agrees with the exact SNIP") {
  for (const auto& name : certificate_names()) {
    const Certificate c = certificate_matrix(name);
    CHECK(snip_via_surjectivity(FloatSymMatrix::from_rational(c.matrix), c.graph.graph(), c.graph.root()) == c.snip);
  }
  std::mt19937 rng(2024);
  const auto graphs = enumerate_rooted_graphs_up_to(5, false);
  std::uniform_int_distribution<std::size_t> pick(0, graphs.size() - 1);
  int agree = 0;
  for (int t = 0; t < 200; ++t) {
    const RootedGraph& g = graphs[pick(rng)];
    // Radius 1 gives many singular matrices, where the two tests can differ.
    const auto m = random_in_pattern(rng, g.graph(), 1 + t % 3);
    const bool exact = has_snip(m, g.graph(), g.root());
    CHECK(exact == oracle::snip(m, g.graph(), g.root()));
    const bool numeric = snip_via_surjectivity(FloatSymMatrix::from_rational(m), g.graph(), g.root());
    CHECK(numeric == exact);
    agree += numeric == exact;
  }
  CHECK(agree == 200);
}

TEST_CASE("supergraph lift of the leaf-rooted K_{1,3}") {
  const RootedGraph star = build_family(Family::star, 4, RootSpec::leaf());
  const Realization r = realize_star(3, StarRoot::leaf, {2, 1});
  REQUIRE(r.snip_verified);
  Graph hg = star.graph();
  hg.add_edge(1, 2);
  const RootedGraph host(hg, star.root());
  const LiftResult lift = supergraph_lift(FloatSymMatrix::from_rational(r.matrix), star, host);
  CHECK(lift.converged);
  CHECK(lift.residual < 1e-10);
  CHECK(lift.min_new_edge_magnitude > 1e-4);
  CHECK(lift.pattern_ok);
  CHECK(lift.lifted_pair.pair == NullityPair{2, 1});
  CHECK(lift.pair_preserved);
  CHECK(lift.snip_after);
  CHECK(lift.lifted(0, 3) == doctest::Approx(r.matrix(0, 3).get_d()).epsilon(0.5));
  CHECK(lift.lifted(0, 1) == 0.0);
}

TEST_CASE("supergraph lift adds vertices and honours signs") {
  const RootedGraph k3 = build_family(Family::complete, 3);
  const Realization r = realize_complete(3, 0, {2, 1});
  REQUIRE(r.snip_verified);
  const RootedGraph host(Graph(5, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}), 0);
  LiftOptions opts;
  opts.signs = {-1, 1, -1};
  const LiftResult lift = supergraph_lift(FloatSymMatrix::from_rational(r.matrix), k3, host, opts);
  CHECK(lift.converged);
  CHECK(lift.pattern_ok);
  CHECK(lift.pair_preserved);
  CHECK(lift.lifted(0, 4) < 0);
  CHECK(lift.lifted(2, 3) > 0);
  CHECK(lift.lifted(3, 4) < 0);

  const LiftResult same = supergraph_lift(FloatSymMatrix::from_rational(r.matrix), k3, k3);
  CHECK(same.newton_iterations == 0);
  CHECK(same.pair_preserved);
}

TEST_CASE("supergraph lift rejects bad input") {
  const RootedGraph p3 = build_family(Family::path, 3);
  const auto a = FloatSymMatrix::from_rational(realize_cut_vertex(build_family(Family::path, 3, RootSpec::center())).matrix);
  // Not SNIP.
  const RootedGraph p3c = build_family(Family::path, 3, RootSpec::center());
  Graph tri = p3c.graph();
  tri.add_edge(0, 2);
  CHECK_THROWS_AS(supergraph_lift(a, p3c, RootedGraph(tri, p3c.root())), DomainError);
  // Not a subgraph.
  const RootedGraph k3 = build_family(Family::complete, 3);
  const auto b = FloatSymMatrix::from_rational(realize_complete(3, 0, {2, 1}).matrix);
  CHECK_THROWS_AS(supergraph_lift(b, k3, p3), DomainError);
  CHECK_THROWS_AS(supergraph_lift(b, k3, build_family(Family::complete, 4), LiftOptions{.signs = {1}}), DomainError);
}

TEST_CASE("decontraction lift of K_3 to C_4") {
  const RootedGraph k3 = build_family(Family::complete, 3);
  const RootedGraph c4 = build_family(Family::cycle, 4);
  const Realization r = realize_complete(3, 0, {2, 1});
  const LiftResult lift = decontraction_lift(FloatSymMatrix::from_rational(r.matrix), k3, c4, 2, 3);
  CHECK(lift.converged);
  CHECK(lift.residual < 1e-10);
  CHECK(lift.pattern_ok);
  CHECK(lift.max_non_edge_magnitude < 1e-9);
  CHECK(lift.lifted_pair.pair == NullityPair{2, 1});
  CHECK(lift.pair_preserved);
  for (int p = 0; p < 4; ++p) {
    for (int q = p + 1; q < 4; ++q) CHECK((lift.lifted(p, q) != 0.0) == c4.graph().adjacent(p, q));
  }

  CHECK_THROWS_AS(decontraction_lift(FloatSymMatrix::from_rational(r.matrix), k3, c4, 0, 2), DomainError);
  CHECK_THROWS_AS(decontraction_lift(FloatSymMatrix::from_rational(r.matrix), k3, c4.with_root(3), 2, 3), DomainError);
}

TEST_CASE("decontraction with a pendant new vertex falls back to a supergraph lift") {
  // Contracting the pendant edge {2,3} of the paw-like host gives K_3.
  const RootedGraph k3 = build_family(Family::complete, 3);
  const RootedGraph host(Graph(4, std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {2, 3}}), 0);
  const Realization r = realize_complete(3, 0, {2, 1});
  const LiftResult lift = decontraction_lift(FloatSymMatrix::from_rational(r.matrix), k3, host, 2, 3);
  CHECK(lift.converged);
  CHECK(lift.pattern_ok);
  CHECK(lift.pair_preserved);
}

TEST_CASE("lifts of random SNIP realizations keep the pair") {
  std::mt19937 rng(77);
  int tried = 0;
  for (const auto& g : enumerate_rooted_graphs(4, true)) {
    for (int t = 0; t < 4; ++t) {
      const auto m = random_in_pattern(rng, g.graph(), 3);
      if (!has_snip(m, g.graph(), g.root())) continue;
      Graph padded(5);
      for (const auto& e : g.graph().edges()) padded.add_edge(e.u, e.v);
      padded.add_edge(g.root(), 4);
      padded.add_edge(4, (g.root() + 1) % 4);
      const RootedGraph host(padded, g.root());
      const LiftResult lift = supergraph_lift(FloatSymMatrix::from_rational(m), g, host);
      ++tried;
      CHECK(lift.converged);
      CHECK(lift.pattern_ok);
      if (!lift.input_pair.ambiguous) {
        CHECK(lift.lifted_pair.pair == NullityPair{oracle::nullity(m), oracle::nullity(m, g.root())});
      }
    }
  }
  CHECK(tried > 10);
}

TEST_CASE("derivative edge cases") {
  const auto d1 = assemble_derivative(FloatSymMatrix(1), Graph(1), 0);
  CHECK(d1.matrix.rows() == 1);
  CHECK(d1.matrix.cols() == 2);
  CHECK(numerical_rank(d1.matrix, 1e-8) == 1);

  // Shape: dim S^cl(G) + n^2 - (n - 1) columns.
  std::mt19937 rng(3);
  const RootedGraph star = build_family(Family::star, 4, RootSpec::leaf());
  int surjective = 0;
  for (int t = 0; t < 20; ++t) {
    const auto m = random_in_pattern(rng, star.graph(), 3);
    const auto d = assemble_derivative(FloatSymMatrix::from_rational(m), star.graph(), star.root());
    CHECK(d.matrix.cols() == (4 + 3) + 16 - 3);
    if (!has_snip(m, star.graph(), star.root())) continue;
    CHECK(numerical_rank(d.matrix, 1e-8) == 10);
    ++surjective;
  }
  CHECK(surjective > 0);

  FloatSymMatrix diag(4);
  for (int p = 0; p < 4; ++p) diag.set(p, p, p + 1.5);
  CHECK(snip_via_surjectivity(diag, Graph(4), 0));
  CHECK_FALSE(snip_via_surjectivity(FloatSymMatrix::from_rational(certificate_matrix("ex3_7").matrix), Graph(2), 0));
}

TEST_CASE("float rank of B-hat matches the exact rank") {
  const RationalSymMatrix bhat{{4, 2, 2}, {2, 1, 1}, {2, 1, 1}};
  CHECK(numerical_rank(FloatSymMatrix::from_rational(bhat), 1e-8) == oracle::rank(oracle::rows_of(bhat)));
  const RationalSymMatrix k5 = realize_complete(5, 0, {2, 2}).matrix;
  CHECK(numerical_rank(FloatSymMatrix::from_rational(k5), 1e-8) == oracle::rank(oracle::rows_of(k5)));
}

TEST_CASE("lifts of nonsingular matrices keep (0,0)") {
  FloatSymMatrix diag(4);
  for (int p = 0; p < 4; ++p) diag.set(p, p, p + 2.0);
  const RootedGraph empty(Graph(4), 0);
  const RootedGraph host(Graph(4, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}}), 0);
  const LiftResult up = supergraph_lift(diag, empty, host);
  CHECK(up.pattern_ok);
  CHECK(up.lifted_pair.pair == NullityPair{0, 0});

  FloatSymMatrix k2(2);
  k2.set(0, 0, 2);
  k2.set(0, 1, 1);
  k2.set(1, 1, 3);
  // P_3 rooted at 1 with its far edge {2,3} contracted is K_2.
  const LiftResult dec = decontraction_lift(k2, build_family(Family::complete, 2), build_family(Family::path, 3), 1, 2);
  CHECK(dec.pattern_ok);
  CHECK(dec.pair_preserved);
  CHECK(dec.lifted_pair.pair == NullityPair{0, 0});

  // u and v share a neighbor in K_3.
  CHECK_THROWS_AS(decontraction_lift(k2, build_family(Family::complete, 2), build_family(Family::complete, 3), 1, 2),
                  DomainError);
}
