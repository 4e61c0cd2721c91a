#include <doctest.h>

#include <random>

#include "inpp/error.hpp"
#include "inpp/matrix_json.hpp"
#include "inpp/nullity.hpp"
#include "oracles.hpp"

using namespace inpp;

namespace {

RationalSymMatrix random_sym(std::mt19937& rng, int n, int radius, double zero_rate) {
  std::uniform_int_distribution<int> val(-radius, radius);
  std::bernoulli_distribution zero(zero_rate);
  RationalSymMatrix m(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) m.set(i, j, zero(rng) ? 0 : val(rng));
  }
  return m;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational("-4") == -4);
  CHECK(parse_rational("+2/3") == Rational(2, 3));
  CHECK(to_string(Rational(-6, 4)) == "-3/2");
  CHECK_THROWS_AS(parse_rational("1/0"), DomainError);
  CHECK_THROWS_AS(parse_rational("1.5"), DomainError);
  CHECK_THROWS_AS(parse_rational(""), DomainError);
}

TEST_CASE("rank and nullity agree with independent elimination") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 6;
    const RationalSymMatrix m = random_sym(rng, n, 2, 0.5);
    CHECK(nullity(m) == oracle::nullity(m));
    if (n <= 4) CHECK(rank(m.matrix()) == oracle::rank_by_minors(oracle::rows_of(m)));
    for (const auto& v : nullspace_basis(m)) {
      for (const auto& x : m.multiply(v)) CHECK(x == 0);
    }
    for (int i = 0; i < n; ++i) {
      const NullityPair p = nullity_pair(m, i);
      CHECK(p.k == oracle::nullity(m));
      CHECK(p.l == oracle::nullity(m, i));
      CHECK(std::abs(p.k - p.l) <= 1);
    }
  }
  CHECK(nullity(RationalSymMatrix(0)) == 0);
}

TEST_CASE("rank on rectangular and fractional input") {
  RationalMatrix m(2, 3);
  m(0, 0) = Rational(1, 2);
  m(0, 1) = Rational(1, 3);
  m(1, 0) = 3;
  m(1, 1) = 2;
  CHECK(rank(m) == 1);
  m(1, 2) = Rational(1, 7);
  CHECK(rank(m) == 2);
}

TEST_CASE("vertex trichotomy") {
  // diag(1,0): deleting the first index keeps nullity 1.
  const RationalSymMatrix d{{1, 0}, {0, 0}};
  CHECK(classify_vertex(d, 0) == VertexClass::neutral);
  CHECK(classify_vertex(d, 1) == VertexClass::downer);
  CHECK(neutral_shift(d, 0) == -1);
  // Center of the 3-vertex star: A(1) = O_2.
  const RationalSymMatrix s{{0, 1, 1}, {1, 0, 0}, {1, 0, 0}};
  CHECK(classify_vertex(s, 0) == VertexClass::upper);
  CHECK(nullity_pair(s, 0) == NullityPair{1, 2});
  CHECK_THROWS_AS(neutral_shift(s, 0), DomainError);

  std::mt19937 rng(11);
  int neutral_seen = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const RationalSymMatrix m = random_sym(rng, 2 + trial % 4, 2, 0.4);
    for (int i = 0; i < m.order(); ++i) {
      const VertexClass c = classify_vertex(m, i);
      const int k = oracle::nullity(m);
      const int l = oracle::nullity(m, i);
      CHECK((c == VertexClass::upper) == (l == k + 1));
      CHECK((c == VertexClass::downer) == (l == k - 1));
      if (c != VertexClass::neutral) continue;
      ++neutral_seen;
      RationalSymMatrix shifted = m;
      shifted.add_to_diagonal(i, neutral_shift(m, i));
      CHECK(classify_vertex(shifted, i) == VertexClass::downer);
      CHECK(oracle::nullity(shifted) == k + 1);
    }
  }
  CHECK(neutral_seen > 50);
}

TEST_CASE("pattern membership and helper matrices") {
  const Graph p3(3, std::vector<Edge>{{0, 1}, {1, 2}});
  const RationalSymMatrix a = adjacency_matrix(p3);
  CHECK(in_pattern(a, p3));
  RationalSymMatrix b = a;
  b.set(0, 1, 0);
  CHECK_FALSE(in_pattern(b, p3));
  CHECK(in_pattern(b, p3, true));
  b.set(0, 2, 5);
  CHECK_FALSE(in_pattern(b, p3, true));
  CHECK(pattern_graph(a) == p3);
  CHECK(nullity(laplacian_matrix(p3)) == 1);
  CHECK(nullity(dominant_matrix(p3)) == 0);
  CHECK(direct_sum(a, RationalSymMatrix::identity(2)).order() == 5);
  CHECK(principal_delete(a, {1}) == RationalSymMatrix(2));
}

TEST_CASE("matrix json") {
  const RationalSymMatrix m{{Rational(1, 2), 3}, {3, -1}};
  const auto j = to_json(m);
  CHECK(j["entries"][0][0] == "1/2");
  CHECK(rational_matrix_from_json(j) == m);
  auto bad = j;
  bad["entries"][0][1] = "2";
  CHECK_THROWS_AS(rational_matrix_from_json(bad), DomainError);
  CHECK(rational_matrix_from_json(nlohmann::json::parse(R"({"n":2,"entries":[[1,2],[2,0]]})"))(0, 1) == 2);
  CHECK_THROWS_AS(RationalSymMatrix({{1, 2}, {3, 4}}), DomainError);
}
