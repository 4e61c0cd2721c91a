#include <doctest.h>

#include "inpp/canonical.hpp"
#include "inpp/classify.hpp"
#include "inpp/enumerate.hpp"
#include "inpp/error.hpp"
#include "inpp/structure.hpp"
#include "oracles.hpp"

using namespace inpp;

namespace {

DecideOptions quick() {
  DecideOptions o;
  o.budget = 3000;
  return o;
}

bool same_set(const std::vector<RootedGraph>& got, const std::vector<RootedGraph>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    if (std::none_of(got.begin(), got.end(), [&](const RootedGraph& g) { return isomorphic(g, w); })) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("decisions on named graphs") {
  const RootedGraph p5 = build_family(Family::path, 5, RootSpec::center());
  CHECK(decide_allows(p5, {1, 2}, false).verdict == Verdict::yes);
  const Decision p5s = decide_allows(p5, {1, 2}, true);
  CHECK(p5s.verdict == Verdict::no);
  CHECK(p5s.justification == "Prop4.5");

  const RootedGraph k13c = build_family(Family::star, 4, RootSpec::center());
  CHECK(decide_allows(k13c, {2, 1}, false).verdict == Verdict::no);
  CHECK(decide_allows(k13c, {2, 1}, true).verdict == Verdict::no);

  const Decision paw = decide_allows(build_family(Family::paw, 4), {1, 2}, true);
  CHECK(paw.verdict == Verdict::yes);
  CHECK(paw.justification == "Thm5.8");
  REQUIRE(paw.witness);
  CHECK(paw.witness->provenance == "certificate:ex5_3_paw");
  CHECK(paw.witness->matrix == certificate_matrix("ex5_3_paw").matrix);
  CHECK(paw.minor_witness == std::optional<std::string>("Paw"));

  // G - 0 is one generalized star centered at 1; touching it off-center breaks the yam shape.
  const RootedGraph off_center(Graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {3, 4}, {1, 5}, {0, 5}}), 0);
  CHECK_FALSE(classify_structure(off_center).is_yam);
  const RootedGraph yam_true(Graph(6, std::vector<Edge>{{0, 1}, {1, 2}, {1, 3}, {1, 4}, {4, 5}}), 0);
  REQUIRE(classify_structure(yam_true).is_yam);
  const Decision y = decide_allows(yam_true, {1, 2}, false);
  CHECK(y.verdict == Verdict::no);

  CHECK(decide_allows(build_family(Family::cycle, 5), {2, 1}, true).verdict == Verdict::yes);
  CHECK(decide_allows(build_family(Family::cycle, 5), {1, 2}, false).verdict == Verdict::no);
  CHECK(decide_allows(build_family(Family::complete, 5), {3, 3}, true).verdict == Verdict::yes);
  CHECK(decide_allows(build_family(Family::complete, 5), {3, 4}, true).verdict == Verdict::no);
  CHECK(decide_allows(RootedGraph(), {0, 1}, true).verdict == Verdict::no);

  CHECK_THROWS_AS(decide_allows(build_family(Family::paw, 4), {0, 2}, true), DomainError);
  CHECK_THROWS_AS(decide_allows(RootedGraph(Graph(3), 0), {1, 1}, true), DomainError);
}

TEST_CASE("yes verdicts carry verified witnesses") {
  for (const auto& g : enumerate_rooted_graphs_up_to(4, true)) {
    for (int k = 0; k <= 3; ++k) {
      for (int l = std::max(0, k - 1); l <= k + 1; ++l) {
        for (bool snip : {false, true}) {
          const Decision d = decide_allows(g, {k, l}, snip, quick());
          if (d.verdict != Verdict::yes) continue;
          REQUIRE(d.witness);
          CHECK(oracle::nullity(d.witness->matrix) == k);
          CHECK(oracle::nullity(d.witness->matrix, d.witness->graph.root()) == l);
          CHECK(isomorphic(d.witness->graph, g));
          if (snip) CHECK(oracle::snip(d.witness->matrix, g.graph(), g.root()));
        }
      }
    }
  }
}

TEST_CASE("snip verdicts imply plain verdicts for (1,2)") {
  for (const auto& g : enumerate_rooted_graphs_up_to(6, true)) {
    DecideOptions o;
    o.want_certificate = false;
    const Verdict with = decide_allows(g, {1, 2}, true, o).verdict;
    const Verdict without = decide_allows(g, {1, 2}, false, o).verdict;
    if (with == Verdict::yes) CHECK(without == Verdict::yes);
    const auto p = classify_structure(g);
    const bool gap = with == Verdict::no && without == Verdict::yes;
    CHECK(gap == (p.is_yam && p.components_minus_root.size() >= 2));
  }
}

TEST_CASE("minor and structure characterizations agree up to six vertices") {
  for (const auto& g : enumerate_rooted_graphs_up_to(6, true)) {
    CHECK(allows_21_by_minors(g) == allows_21_by_structure(g));
    CHECK(allows_12_snip_by_minors(g) == allows_12_snip_by_structure(g));
  }
}

TEST_CASE("tree rules") {
  for (int n = 2; n <= 6; ++n) {
    for (const auto& g : enumerate_rooted_graphs(n, true)) {
      const auto p = classify_structure(g);
      if (!p.is_tree || p.is_path) continue;
      DecideOptions o;
      o.want_certificate = false;
      CHECK(decide_allows(g, {2, 2}, true, o).verdict == Verdict::no);
      CHECK(decide_allows(g, {3, 2}, true, o).verdict == Verdict::no);
      const bool other_high = std::any_of(p.high_degree_vertices.begin(), p.high_degree_vertices.end(),
                                          [&](Vertex v) { return v != g.root(); });
      CHECK((decide_allows(g, {2, 1}, true, o).verdict == Verdict::yes) == other_high);
    }
  }
}

TEST_CASE("minimal minors") {
  CHECK(same_set(search_minimal_minors({0, 0}, 3).minimal, {RootedGraph()}));
  CHECK(same_set(search_minimal_minors({1, 0}, 3).minimal, {RootedGraph()}));
  CHECK(same_set(search_minimal_minors({0, 1}, 3).minimal, {build_family(Family::complete, 2)}));
  const auto r21 = search_minimal_minors({2, 1}, 4);
  CHECK(same_set(r21.minimal, {build_family(Family::complete, 3), build_family(Family::star, 4, RootSpec::leaf())}));
  CHECK(r21.undecided.empty());
  DecideOptions par;
  par.jobs = 4;
  const auto r12 = search_minimal_minors({1, 2}, 5, par);
  CHECK(same_set(r12.minimal, {build_family(Family::paw, 4), build_family(Family::s211, 5)}));
  CHECK_THROWS_AS(search_minimal_minors({1, 2}, 8), DomainError);
}

TEST_CASE("monotonicity audit") {
  DecideOptions o;
  o.budget = 5000;
  const auto k3 = minor_monotonicity_audit(build_family(Family::complete, 3), {2, 1}, 6, o);
  CHECK(k3.base_witness);
  CHECK(k3.samples.size() == 6);
  CHECK(k3.violations() == 0);
  const auto k13 = minor_monotonicity_audit(build_family(Family::star, 4, RootSpec::leaf()), {2, 1}, 6, o);
  CHECK(k13.violations() == 0);
  const auto p3 = minor_monotonicity_audit(build_family(Family::path, 3), {2, 1}, 3, o);
  CHECK_FALSE(p3.base_witness);
}

TEST_CASE("no verdicts are never contradicted by a search") {
  std::uint64_t seed = 0;
  int searched = 0;
  for (const auto& g : enumerate_rooted_graphs_up_to(5, true)) {
    for (int k = 0; k <= 3; ++k) {
      for (int l = std::max(0, k - 1); l <= std::min(k + 1, g.order() - 1); ++l) {
        if (k > g.order()) continue;
        for (bool snip : {false, true}) {
          DecideOptions o;
          o.want_certificate = false;
          o.budget = 50;
          if (decide_allows(g, {k, l}, snip, o).verdict != Verdict::no) continue;
          const auto out = realize_search({g, {k, l}, snip, ++seed, 300, 1});
          CHECK_FALSE(out.found);
          ++searched;
        }
      }
    }
  }
  CHECK(searched > 100);
}
