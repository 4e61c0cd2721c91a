#include "inpp/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>

#include "inpp/classify.hpp"
#include "inpp/error.hpp"
#include "inpp/io.hpp"
#include "inpp/lift.hpp"
#include "inpp/matrix_json.hpp"
#include "inpp/minor.hpp"
#include "inpp/strong.hpp"

namespace inpp {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Flags {
  std::string graph;
  std::string host;
  std::string matrix;
  std::string pair;
  std::string edge;
  std::string embedding;
  std::string signs;
  std::string format = "json";
  int root = 0;  // 1-based; 0 = take it from the graph
  bool snip = false;
  bool sap_mode = false;
  std::uint64_t seed = 1;
  long budget = 10000;
  int jobs = 1;
  int max_n = 5;
  int samples = 10;
  double tol = kDefaultRankTol;
  double eps = 0.0;
};

struct Outcome {
  nlohmann::json inputs;
  nlohmann::json result;
  int exit = kExitOk;
};

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw DomainError(std::string(what) + ": expected comma-separated integers");
    }
  }
  return out;
}

std::string need(const std::string& value, const char* flag) {
  if (value.empty()) throw UsageError(std::string("missing required flag ") + flag);
  return value;
}

RootedGraph graph_flag(const Flags& f, const std::string& text, const char* flag) {
  RootedGraph g = parse_rooted_graph(need(text, flag));
  if (f.root != 0) {
    if (f.root < 1 || f.root > g.order()) throw DomainError("root out of range");
    g = g.with_root(f.root - 1);
  }
  return g;
}

Vertex root_flag(const Flags& f, int order) {
  if (f.root == 0) throw UsageError("missing required flag --root");
  if (f.root < 1 || f.root > order) throw DomainError("root out of range");
  return f.root - 1;
}

nlohmann::json pair_json(NullityPair p) { return nlohmann::json::array({p.k, p.l}); }

nlohmann::json realization_json(const Realization& r) {
  return {{"matrix", to_json(r.matrix)},
          {"graph", graph_to_json(r.graph)},
          {"pair", pair_json(r.pair)},
          {"snip", r.snip_verified},
          {"provenance", r.provenance}};
}

DecideOptions decide_options(const Flags& f) {
  DecideOptions o;
  o.seed = f.seed;
  o.budget = f.budget;
  o.jobs = f.jobs;
  return o;
}

Outcome cmd_nullity_pair(const Flags& f) {
  const auto m = load_rational_matrix(need(f.matrix, "--matrix"));
  const Vertex i = root_flag(f, m.order());
  const NullityPair p = nullity_pair(m, i);
  return {{{"matrix", f.matrix}, {"root", i + 1}}, {{"pair", pair_json(p)}, {"null_A", p.k}, {"null_A_i", p.l}}};
}

Outcome cmd_classify_vertex(const Flags& f) {
  const auto m = load_rational_matrix(need(f.matrix, "--matrix"));
  const Vertex i = root_flag(f, m.order());
  const VertexClass c = classify_vertex(m, i);
  nlohmann::json result = {{"class", to_string(c)}, {"pair", pair_json(nullity_pair(m, i))}};
  if (c == VertexClass::neutral) result["neutral_shift"] = to_string(neutral_shift(m, i));
  return {{{"matrix", f.matrix}, {"root", i + 1}}, result};
}

/// Graph from --graph when given, otherwise the pattern of the matrix.
RootedGraph matrix_graph(const Flags& f, const RationalSymMatrix& m) {
  if (!f.graph.empty()) return graph_flag(f, f.graph, "--graph");
  return {pattern_graph(m), root_flag(f, m.order())};
}

Outcome cmd_snip(const Flags& f) {
  const auto m = load_rational_matrix(need(f.matrix, "--matrix"));
  const RootedGraph g = matrix_graph(f, m);
  return {{{"matrix", f.matrix}, {"graph", graph_to_json(g)}}, {{"snip", has_snip(m, g.graph(), g.root())}}};
}

Outcome cmd_sap(const Flags& f) {
  const auto m = load_rational_matrix(need(f.matrix, "--matrix"));
  const Graph g = f.graph.empty() ? pattern_graph(m) : parse_rooted_graph(f.graph).graph();
  nlohmann::json inputs = {{"matrix", f.matrix}};
  if (!f.graph.empty()) inputs["graph"] = f.graph;
  return {inputs, {{"sap", has_sap(m, g)}}};
}

Outcome cmd_verification_matrix(const Flags& f) {
  const auto m = load_rational_matrix(need(f.matrix, "--matrix"));
  Graph g;
  std::optional<Vertex> root;
  nlohmann::json inputs = {{"matrix", f.matrix}, {"mode", f.sap_mode ? "sap" : "snip"}};
  if (!f.graph.empty()) {
    const RootedGraph rg = graph_flag(f, f.graph, "--graph");
    g = rg.graph();
    root = rg.root();
    inputs["graph"] = graph_to_json(rg);
  } else {
    g = pattern_graph(m);
    if (!f.sap_mode) root = root_flag(f, m.order());
  }
  if (f.sap_mode) root.reset();
  const auto sys = build_verification_system(m, g, root);
  nlohmann::json unknowns = nlohmann::json::array();
  for (const auto& e : sys.unknowns) unknowns.push_back({e.u + 1, e.v + 1});
  nlohmann::json result = {{"unknowns", unknowns},
                           {"constraints", to_json(sys.constraints)},
                           {"trivial_kernel", sys.trivial_kernel()}};
  if (root) result["root"] = *root + 1;
  return {inputs, result};
}

Outcome cmd_realize(const Flags& f) {
  const RootedGraph g = graph_flag(f, f.graph, "--graph");
  const NullityPair p = parse_pair(need(f.pair, "--pair"));
  const auto w = find_witness(g, p, f.snip, decide_options(f));
  Outcome o{{{"graph", graph_to_json(g)}, {"pair", pair_json(p)}, {"snip", f.snip}}, {}};
  if (w) {
    o.result = realization_json(*w);
    o.result["found"] = true;
  } else {
    o.result = {{"found", false}, {"verdict", "unknown"}, {"budget_used", f.budget}};
    o.exit = kExitUnknown;
  }
  return o;
}

Outcome cmd_classify(const Flags& f) {
  const RootedGraph g = graph_flag(f, f.graph, "--graph");
  const NullityPair p = parse_pair(need(f.pair, "--pair"));
  const Decision d = decide_allows(g, p, f.snip, decide_options(f));
  Outcome o{{{"graph", graph_to_json(g)}, {"pair", pair_json(p)}, {"snip", f.snip}},
            {{"verdict", to_string(d.verdict)}, {"justification", d.justification}}};
  if (d.witness) o.result["certificate"] = realization_json(*d.witness);
  if (d.minor_witness) o.result["minor_witness"] = *d.minor_witness;
  if (d.verdict == Verdict::unknown) {
    o.result["budget_used"] = d.search_iterations;
    o.exit = kExitUnknown;
  }
  return o;
}

Outcome cmd_search_minors(const Flags& f) {
  const NullityPair p = parse_pair(need(f.pair, "--pair"));
  const auto r = search_minimal_minors(p, f.max_n, decide_options(f));
  nlohmann::json minimal = nlohmann::json::array();
  for (const auto& g : r.minimal) minimal.push_back(graph_to_json(g));
  nlohmann::json undecided = nlohmann::json::array();
  for (const auto& g : r.undecided) undecided.push_back(graph_to_json(g));
  Outcome o{{{"pair", pair_json(p)}, {"max_n", f.max_n}},
            {{"minimal", minimal}, {"undecided", undecided}, {"examined", r.examined}}};
  if (!r.undecided.empty()) o.exit = kExitUnknown;
  return o;
}

nlohmann::json lift_json(const LiftResult& r) {
  return {{"lifted", to_json(r.lifted)},
          {"host", graph_to_json(r.host)},
          {"converged", r.converged},
          {"residual", r.residual},
          {"min_edge_magnitude", r.min_edge_magnitude},
          {"min_new_edge_magnitude", r.min_new_edge_magnitude},
          {"max_non_edge_magnitude", r.max_non_edge_magnitude},
          {"pattern_ok", r.pattern_ok},
          {"input_pair", pair_json(r.input_pair.pair)},
          {"lifted_pair", pair_json(r.lifted_pair.pair)},
          {"pair_ambiguous", r.input_pair.ambiguous || r.lifted_pair.ambiguous},
          {"pair_preserved", r.pair_preserved},
          {"snip_after", r.snip_after},
          {"newton_iterations", r.newton_iterations},
          {"eps_used", r.eps_used},
          {"halvings", r.halvings},
          {"message", r.message}};
}

LiftOptions lift_options(const Flags& f) {
  LiftOptions o;
  o.eps = f.eps;
  o.rank_tol = f.tol;
  if (!f.signs.empty()) o.signs = parse_int_list(f.signs, "--signs");
  return o;
}

Outcome cmd_lift(const Flags& f) {
  const auto a = load_float_matrix(need(f.matrix, "--matrix"));
  const RootedGraph g = parse_rooted_graph(need(f.graph, "--graph"));
  const RootedGraph h = parse_rooted_graph(need(f.host, "--host"));
  std::optional<std::vector<Vertex>> emb;
  nlohmann::json inputs = {{"matrix", f.matrix}, {"graph", graph_to_json(g)}, {"host", graph_to_json(h)}, {"eps", f.eps}};
  if (!f.embedding.empty()) {
    emb = parse_int_list(f.embedding, "--embedding");
    for (auto& x : *emb) --x;
    inputs["embedding"] = f.embedding;
  }
  if (!f.signs.empty()) inputs["signs"] = f.signs;
  const LiftResult r = supergraph_lift(a, g, h, lift_options(f), emb);
  Outcome o{inputs, lift_json(r)};
  if (!r.converged) o.exit = kExitDomain;
  return o;
}

Outcome cmd_decontract(const Flags& f) {
  const auto a = load_float_matrix(need(f.matrix, "--matrix"));
  const RootedGraph g = parse_rooted_graph(need(f.graph, "--graph"));
  const RootedGraph h = parse_rooted_graph(need(f.host, "--host"));
  const auto uv = parse_int_list(need(f.edge, "--edge"), "--edge");
  if (uv.size() != 2) throw DomainError("--edge: expected u,v");
  const LiftResult r = decontraction_lift(a, g, h, uv[0] - 1, uv[1] - 1, lift_options(f));
  Outcome o{{{"matrix", f.matrix}, {"graph", graph_to_json(g)}, {"host", graph_to_json(h)}, {"edge", f.edge}, {"eps", f.eps}},
            lift_json(r)};
  if (!r.converged) o.exit = kExitDomain;
  return o;
}

Outcome cmd_audit(const Flags& f) {
  const RootedGraph g = graph_flag(f, f.graph, "--graph");
  const NullityPair p = parse_pair(need(f.pair, "--pair"));
  const auto r = minor_monotonicity_audit(g, p, f.samples, decide_options(f));
  nlohmann::json samples = nlohmann::json::array();
  for (const auto& s : r.samples) {
    samples.push_back({{"host", graph_to_json(s.host)},
                       {"operation", s.operation},
                       {"witness_found", s.witness_found},
                       {"iterations", s.iterations}});
  }
  return {{{"graph", graph_to_json(g)}, {"pair", pair_json(p)}, {"samples", f.samples}},
          {{"base_witness", r.base_witness}, {"violations", r.violations()}, {"samples", samples}}};
}

void print_table(const nlohmann::json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_table(v, prefix.empty() ? k : prefix + "." + k, out);
  } else {
    out << prefix << ": " << j.dump() << '\n';
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Nullity pairs, SNIP/SAP checks, realizations and lifts for rooted graphs", "inpp"};
  app.require_subcommand(1);
  Flags f;
  using Handler = std::function<Outcome(const Flags&)>;
  std::vector<std::pair<CLI::App*, Handler>> commands;

  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", f.format, "json or table")->check(CLI::IsMember({"json", "table"}));
    commands.emplace_back(sub, std::move(h));
    return sub;
  };
  auto matrix = [&](CLI::App* s) { s->add_option("--matrix", f.matrix, "matrix JSON file or cert:<name>"); };
  auto graph = [&](CLI::App* s) {
    s->add_option("--graph", f.graph, "rooted graph, e.g. paw@1 or \"n=3; edges=1-2,2-3; root=1\"");
  };
  auto root = [&](CLI::App* s) { s->add_option("--root", f.root, "root vertex (1-based)"); };
  auto pair = [&](CLI::App* s) { s->add_option("--pair", f.pair, "nullity pair k,l"); };
  auto search = [&](CLI::App* s) {
    s->add_option("--seed", f.seed, "random seed");
    s->add_option("--budget", f.budget, "total search iterations");
    s->add_option("--jobs", f.jobs, "worker threads")->check(CLI::Range(1, 256));
  };
  auto lifting = [&](CLI::App* s) {
    matrix(s);
    graph(s);
    s->add_option("--host", f.host, "rooted host graph H");
    s->add_option("--eps", f.eps, "perturbation size (0 = automatic)");
    s->add_option("--tol", f.tol, "relative rank tolerance");
    s->add_option("--signs", f.signs, "signs of the new edge entries, e.g. 1,-1");
  };

  auto* s = add("nullity-pair", "nullity pair (null A, null A(i))", cmd_nullity_pair);
  matrix(s);
  root(s);
  s = add("classify-vertex", "upper, neutral or downer", cmd_classify_vertex);
  matrix(s);
  root(s);
  s = add("snip", "strong nullity interlacing property", cmd_snip);
  matrix(s);
  graph(s);
  root(s);
  s = add("sap", "strong Arnold property", cmd_sap);
  matrix(s);
  graph(s);
  s = add("verification-matrix", "linear system behind the SNIP/SAP check", cmd_verification_matrix);
  matrix(s);
  graph(s);
  root(s);
  s->add_flag("--sap", f.sap_mode, "SAP system instead of SNIP");
  s = add("realize", "find a matrix with the given pair", cmd_realize);
  graph(s);
  root(s);
  pair(s);
  s->add_flag("--snip", f.snip, "require the SNIP");
  search(s);
  s = add("classify", "decide whether the rooted graph allows the pair", cmd_classify);
  graph(s);
  root(s);
  pair(s);
  s->add_flag("--snip", f.snip, "require the SNIP");
  search(s);
  s = add("search-minors", "minimal rooted minors allowing the pair with the SNIP", cmd_search_minors);
  pair(s);
  s->add_option("--max-n", f.max_n, "largest order searched")->check(CLI::Range(1, 7));
  search(s);
  s = add("lift", "lift a SNIP matrix to a rooted supergraph", cmd_lift);
  lifting(s);
  s->add_option("--embedding", f.embedding, "host vertex of each graph vertex, e.g. 1,2,4");
  s = add("decontract", "lift a SNIP matrix across an edge contraction", cmd_decontract);
  lifting(s);
  s->add_option("--edge", f.edge, "contracted host edge u,v (root must not be v)");
  s = add("audit-monotonicity", "look for SNIP witnesses on random supergraphs and splits", cmd_audit);
  graph(s);
  root(s);
  pair(s);
  s->add_option("--samples", f.samples, "number of sampled hosts")->check(CLI::Range(0, 100000));
  search(s);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  for (const auto& [sub, handler] : commands) {
    if (!sub->parsed()) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = handler(f);
    } catch (const UsageError& e) {
      err << "usage error: " << e.what() << '\n';
      return kExitUsage;
    } catch (const DomainError& e) {
      err << "error: " << e.what() << '\n';
      return kExitDomain;
    }
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    nlohmann::json report = {{"command", sub->get_name()},
                             {"inputs", o.inputs},
                             {"result", o.result},
                             {"diagnostics",
                              {{"seed", f.seed}, {"budget", f.budget}, {"jobs", f.jobs}, {"elapsed_ms", ms}}}};
    if (f.format == "table") {
      print_table(report, "", out);
    } else {
      out << report.dump(2) << '\n';
    }
    return o.exit;
  }
  return kExitUsage;
}

}  // namespace inpp
