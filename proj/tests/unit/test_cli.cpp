#include <doctest.h>

#include <sstream>

#include "inpp/canonical.hpp"
#include "inpp/cli.hpp"
#include "inpp/enumerate.hpp"
#include "inpp/error.hpp"
#include "inpp/io.hpp"

using namespace inpp;

namespace {

struct Run {
  int code;
  nlohmann::json report;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, out, err);
  nlohmann::json j;
  if (code == kExitOk || code == kExitUnknown) j = nlohmann::json::parse(out.str());
  return {code, j, err.str()};
}

const std::string kExamples = INPP_EXAMPLES_DIR;

}  // namespace

TEST_CASE("parse_rooted_graph") {
  const RootedGraph k2 = parse_rooted_graph("n=2; edges=1-2; root=1");
  CHECK(k2 == build_family(Family::complete, 2));
  CHECK(parse_rooted_graph("paw@1") == build_family(Family::paw, 4));
  CHECK(parse_rooted_graph("k13@leaf") == build_family(Family::star, 4, RootSpec::leaf()));
  CHECK(parse_rooted_graph("k13@center") == build_family(Family::star, 4, RootSpec::center()));
  CHECK(parse_rooted_graph("c4@2") == build_family(Family::cycle, 4, RootSpec::at(1)));
  CHECK(parse_rooted_graph("k1@1") == RootedGraph());
  CHECK(parse_rooted_graph(emit_rooted_graph(build_family(Family::paw, 4))) == build_family(Family::paw, 4));
  CHECK_THROWS_AS(parse_rooted_graph("n=4; edges=1-2; root=5"), DomainError);
  CHECK_THROWS_AS(parse_rooted_graph("C~@5"), DomainError);
  CHECK_THROWS_AS(parse_rooted_graph("C~"), DomainError);
  CHECK_THROWS_AS(parse_rooted_graph("n=3; edges=1-1"), DomainError);
  CHECK_THROWS_AS(parse_rooted_graph("C@1"), DomainError);
  CHECK(parse_pair("1,2") == NullityPair{1, 2});
  CHECK_THROWS_AS(parse_pair("1"), DomainError);
}

TEST_CASE("graph text round trip up to seven vertices") {
  for (int n = 1; n <= 7; ++n) {
    for (const auto& g : enumerate_rooted_graphs(n, false)) {
      REQUIRE(parse_rooted_graph(emit_rooted_graph(g)) == g);
      std::string literal = "n=" + std::to_string(n) + "; edges=";
      for (const auto& e : g.graph().edges()) literal += std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1) + ",";
      literal += "; root=" + std::to_string(g.root() + 1);
      REQUIRE(parse_rooted_graph(literal) == g);
    }
  }
}

TEST_CASE("documented invocations") {
  const Run snip = run({"snip", "--matrix", kExamples + "/ex2_4.json", "--graph", "k13@leaf", "--root", "1"});
  REQUIRE(snip.code == kExitOk);
  CHECK(snip.report["result"]["snip"] == true);
  CHECK(snip.report["command"] == "snip");

  const Run paw = run({"classify", "--graph", "paw@1", "--pair", "1,2", "--snip"});
  REQUIRE(paw.code == kExitOk);
  CHECK(paw.report["result"]["verdict"] == "yes");
  CHECK(paw.report["result"]["justification"] == "Thm5.8");
  CHECK(paw.report["result"]["certificate"]["provenance"] == "certificate:ex5_3_paw");

  const Run minors = run({"search-minors", "--pair", "1,2", "--max-n", "5"});
  REQUIRE(minors.code == kExitOk);
  std::vector<RootedGraph> got;
  for (const auto& g : minors.report["result"]["minimal"]) got.push_back(parse_rooted_graph(g["graph6"].get<std::string>()));
  REQUIRE(got.size() == 2);
  const bool paw_first = isomorphic(got[0], build_family(Family::paw, 4));
  CHECK(isomorphic(got[paw_first ? 0 : 1], build_family(Family::paw, 4)));
  CHECK(isomorphic(got[paw_first ? 1 : 0], build_family(Family::s211, 5)));
}

TEST_CASE("other subcommands") {
  const Run np = run({"nullity-pair", "--matrix", "cert:ex2_4_star", "--root", "1"});
  CHECK(np.report["result"]["pair"] == nlohmann::json::array({2, 1}));
  const Run cv = run({"classify-vertex", "--matrix", "cert:ex2_4_star", "--root", "1"});
  CHECK(cv.report["result"]["class"] == "downer");
  const Run sap = run({"sap", "--matrix", "cert:ex3_3"});
  CHECK(sap.code == kExitOk);
  const Run vm = run({"verification-matrix", "--matrix", kExamples + "/ex2_4.json", "--root", "1"});
  CHECK(vm.report["result"]["unknowns"].size() == 3);
  CHECK(vm.report["result"]["constraints"]["cols"] == 12);
  const Run real = run({"realize", "--graph", "c5@1", "--pair", "2,1", "--snip"});
  CHECK(real.code == kExitOk);
  CHECK(real.report["result"]["snip"] == true);
  const Run nope = run({"realize", "--graph", "p4@1", "--pair", "1,2", "--snip", "--budget", "200"});
  CHECK(nope.code == kExitUnknown);
  CHECK(nope.report["result"]["found"] == false);

  const Run dec = run({"decontract", "--matrix", kExamples + "/k3_21.json", "--graph", "k3@1", "--host", "c4@1",
                       "--edge", "3,4"});
  REQUIRE(dec.code == kExitOk);
  CHECK(dec.report["result"]["pair_preserved"] == true);
  CHECK(dec.report["result"]["lifted_pair"] == nlohmann::json::array({2, 1}));
  const Run lift = run({"lift", "--matrix", kExamples + "/k3_21.json", "--graph", "k3@1", "--host", "k4@1"});
  CHECK(lift.code == kExitOk);
  CHECK(lift.report["result"]["pattern_ok"] == true);

  const Run audit = run({"audit-monotonicity", "--graph", "k3@1", "--pair", "2,1", "--samples", "3"});
  CHECK(audit.report["result"]["violations"] == 0);
}

TEST_CASE("exit codes and determinism") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"classify", "--pair", "1,2"}).code == kExitUsage);
  CHECK(run({"classify", "--graph", "paw@1", "--pair", "1,2", "--bogus"}).code == kExitUsage);
  CHECK(run({"classify", "--graph", "paw@9", "--pair", "1,2"}).code == kExitDomain);
  CHECK(run({"snip", "--matrix", "/nonexistent.json", "--graph", "paw@1"}).code == kExitDomain);
  CHECK(run({"classify", "--graph", "paw@1", "--pair", "0,3"}).code == kExitDomain);

  auto strip = [](nlohmann::json j) {
    j["diagnostics"].erase("elapsed_ms");
    return j.dump();
  };
  const std::vector<std::string> args{"realize", "--graph", "n=5; edges=1-2,2-3,3-4,4-5,5-1,1-3; root=2", "--pair",
                                      "2,2", "--seed", "9", "--jobs", "3"};
  CHECK(strip(run(args).report) == strip(run(args).report));
}
