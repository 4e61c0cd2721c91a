#include <doctest.h>

#include "inpp/canonical.hpp"
#include "inpp/enumerate.hpp"
#include "inpp/error.hpp"
#include "inpp/graph6.hpp"
#include "inpp/minor.hpp"
#include "inpp/structure.hpp"
#include "oracles.hpp"

using namespace inpp;

TEST_CASE("graph basics") {
  const Graph g(4, std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(g.edge_count() == 4);
  CHECK(g.degree(1) == 3);
  CHECK(g.adjacent(3, 2));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.connected());
  const Graph h = g.without_vertex(1);
  CHECK(h.order() == 3);
  CHECK(h.edge_count() == 1);
  CHECK(h.components().size() == 2);
  CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{0, 0}}), DomainError);
  CHECK_THROWS_AS(Graph(3, std::vector<Edge>{{0, 3}}), DomainError);
}

TEST_CASE("family layouts") {
  const RootedGraph paw = build_family(Family::paw, 4);
  CHECK(paw.root() == 0);
  CHECK(paw.graph().edges() == std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {2, 3}});
  const RootedGraph star = build_family(Family::star, 4, RootSpec::center());
  CHECK(star.root() == 3);
  CHECK(star.graph().degree(3) == 3);
  CHECK(build_family(Family::star, 4, RootSpec::leaf()).root() == 0);
  CHECK(build_family(Family::cycle, 5).graph().edge_count() == 5);
  CHECK(build_family(Family::path, 5, RootSpec::center()).root() == 2);
  CHECK(build_family(Family::s211, 5).graph().degree(2) == 3);
}

TEST_CASE("canonical form agrees with brute-force isomorphism") {
  const auto all = enumerate_rooted_graphs_up_to(4, false);
  for (std::size_t a = 0; a < all.size(); ++a) {
    for (std::size_t b = a; b < all.size(); ++b) {
      CHECK(isomorphic(all[a], all[b]) == oracle::isomorphic(all[a], all[b]));
    }
  }
  // Relabeling never changes the form.
  const RootedGraph s211 = build_family(Family::s211, 5);
  const std::vector<Vertex> perm{4, 2, 0, 3, 1};
  const Graph permuted = s211.graph().permuted(perm);
  Vertex root = 0;
  for (Vertex p = 0; p < 5; ++p) {
    if (perm[static_cast<std::size_t>(p)] == s211.root()) root = p;
  }
  CHECK(canonical_form(RootedGraph(permuted, root)) == canonical_form(s211));
  CHECK(canonical_form(s211) != canonical_form(s211.with_root(3)));
}

TEST_CASE("rooted graph counts") {
  // Connected unrooted graphs on 1..6 vertices: 1, 1, 2, 6, 21, 112 (OEIS A001349).
  const std::vector<std::size_t> unrooted{1, 1, 2, 6, 21, 112};
  for (int n = 1; n <= 6; ++n) {
    std::size_t connected = 0;
    for (const Graph& g : enumerate_graphs(n)) connected += g.connected() ? 1 : 0;
    CHECK(connected == unrooted[static_cast<std::size_t>(n - 1)]);
  }
  // Connected rooted graphs: 1, 1, 3, 11, 58 (OEIS A126100).
  const std::vector<std::size_t> rooted_counts{1, 1, 3, 11, 58};
  for (int n = 1; n <= 5; ++n) {
    CHECK(enumerate_rooted_graphs(n, true).size() == rooted_counts[static_cast<std::size_t>(n - 1)]);
  }
  CHECK_THROWS_AS(enumerate_rooted_graphs(8, true), DomainError);
}

TEST_CASE("minor operations") {
  const RootedGraph paw = build_family(Family::paw, 4);
  const RootedGraph k3 = apply_minor_op(paw, MinorOp::contract_edge(0, 1));
  CHECK(k3.order() == 3);
  CHECK(k3.root() == 0);
  CHECK(k3.graph().edge_count() == 3);

  const RootedGraph c4 = build_family(Family::cycle, 4);
  const RootedGraph c4k3 = apply_minor_op(c4, MinorOp::contract_edge(2, 3));
  CHECK(isomorphic(c4k3, build_family(Family::complete, 3)));

  CHECK_THROWS_AS(apply_minor_op(paw, MinorOp::delete_isolated_vertex(2)), DomainError);
  CHECK(has_rooted_minor(paw, build_family(Family::complete, 3)));
  CHECK_FALSE(has_rooted_minor(build_family(Family::star, 4, RootSpec::center()), build_family(Family::complete, 3)));
  CHECK(has_rooted_minor(build_family(Family::star, 4, RootSpec::leaf()), build_family(Family::path, 2)));
}

TEST_CASE("minor containment agrees with the branch-set oracle") {
  const auto hosts = enumerate_rooted_graphs_up_to(5, true);
  const std::vector<RootedGraph> targets{
      build_family(Family::complete, 3),
      build_family(Family::star, 4, RootSpec::leaf()),
      build_family(Family::paw, 4),
      build_family(Family::path, 3, RootSpec::center()),
  };
  for (const auto& t : targets) {
    MinorContainment finder(t);
    for (const auto& h : hosts) {
      const bool oracle_says = oracle::rooted_minor(h, t);
      CHECK(finder.contained_in(h) == oracle_says);
      CHECK(has_rooted_minor(h, t) == oracle_says);
    }
  }
}

TEST_CASE("structure recognizers") {
  CHECK(classify_structure(build_family(Family::path, 5, RootSpec::center())).is_path);
  const auto star = classify_structure(build_family(Family::star, 5, RootSpec::center()));
  CHECK(star.is_generalized_star());
  CHECK(star.root_is_star_center(4));
  CHECK(star.is_yam);
  CHECK(star.root_is_cut_vertex);
  CHECK_FALSE(classify_structure(build_family(Family::paw, 4)).is_yam);
  CHECK_FALSE(classify_structure(build_family(Family::s211, 5)).is_yam);
  // Rooted at the center, S(2,1,1) minus root is paths only.
  CHECK(classify_structure(build_family(Family::s211, 5, RootSpec::center())).is_yam);
  CHECK(classify_structure(build_family(Family::cycle, 5)).is_yam);
  CHECK_FALSE(classify_structure(RootedGraph(Graph(2), 0)).is_yam);
}

TEST_CASE("graph6 round trip") {
  CHECK(encode_graph6(build_family(Family::complete, 4).graph()) == "C~");
  CHECK(decode_graph6("C~") == build_family(Family::complete, 4).graph());
  CHECK(decode_graph6(">>graph6<<C~") == build_family(Family::complete, 4).graph());
  for (const auto& g : enumerate_rooted_graphs_up_to(6, false)) {
    CHECK(decode_rooted_graph6(encode_rooted_graph6(g)) == g);
  }
  CHECK_THROWS_AS(decode_graph6("C"), DomainError);
  CHECK_THROWS_AS(decode_rooted_graph6("C~@5"), DomainError);
  CHECK_THROWS_AS(decode_rooted_graph6("C~@0"), DomainError);
}
