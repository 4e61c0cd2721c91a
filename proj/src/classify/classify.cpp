#include "inpp/classify.hpp"

#include <algorithm>
#include <functional>
#include <thread>
#include <unordered_set>

#include "inpp/canonical.hpp"
#include "inpp/enumerate.hpp"
#include "inpp/error.hpp"
#include "inpp/minor.hpp"
#include "inpp/rng.hpp"
#include "inpp/strong.hpp"
#include "inpp/structure.hpp"

namespace inpp {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::yes:
      return "yes";
    case Verdict::no:
      return "no";
    case Verdict::unknown:
      return "unknown";
  }
  return "?";
}

namespace {

bool is_trivial(NullityPair p) { return p == NullityPair{0, 0} || p == NullityPair{1, 0} || p == NullityPair{0, 1}; }

bool is_complete(const Graph& g) { return g.edge_count() == g.order() * (g.order() - 1) / 2; }

bool is_cycle(const Graph& g) {
  if (g.order() < 3 || !g.connected()) return false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

/// Center of K_{1,m} with m >= 3, or -1.
Vertex star_center(const Graph& g) {
  const int n = g.order();
  if (n < 4 || g.edge_count() != n - 1) return -1;
  for (Vertex v = 0; v < n; ++v) {
    if (g.degree(v) == n - 1) return v;
  }
  return -1;
}

const RootedGraph& k3_rooted() {
  static const RootedGraph g = build_family(Family::complete, 3);
  return g;
}
const RootedGraph& k13_leaf() {
  static const RootedGraph g = build_family(Family::star, 4, RootSpec::leaf());
  return g;
}
const RootedGraph& paw_rooted() {
  static const RootedGraph g = build_family(Family::paw, 4);
  return g;
}
const RootedGraph& s211_rooted() {
  static const RootedGraph g = build_family(Family::s211, 5);
  return g;
}

Decision verdict(Verdict v, std::string why) {
  Decision d;
  d.verdict = v;
  d.justification = std::move(why);
  return d;
}

std::optional<std::string> first_minor(const RootedGraph& g,
                                       std::initializer_list<std::pair<const char*, const RootedGraph*>> targets) {
  for (const auto& [name, t] : targets) {
    if (has_rooted_minor(g, *t)) return std::string(name);
  }
  return std::nullopt;
}

/// The verdict alone, before any certificate is attached.
Decision decide_core(const RootedGraph& g, NullityPair pair, bool snip) {
  const Graph& graph = g.graph();
  const int n = g.order();
  const Vertex i = g.root();
  const auto [k, l] = pair;
  if (k > n || l > n - 1) return verdict(Verdict::no, "dimension");

  if (pair == NullityPair{0, 0} || pair == NullityPair{1, 0}) return verdict(Verdict::yes, "Remark5.1");
  if (pair == NullityPair{0, 1}) return verdict(n >= 2 ? Verdict::yes : Verdict::no, "Prop4.2");

  const StructureProfile prof = classify_structure(g);
  if (prof.is_path) {
    const bool internal = graph.degree(i) >= 2;
    const bool ok = !snip && internal && pair == NullityPair{1, 2};
    return verdict(ok ? Verdict::yes : Verdict::no, "Prop4.5");
  }
  if (is_complete(graph)) {
    const bool ok = std::abs(k - l) <= 1 && l <= n - 2;
    return verdict(ok ? Verdict::yes : Verdict::no, "Prop4.3");
  }
  if (is_cycle(graph)) {
    const bool ok = pair == NullityPair{1, 1} || pair == NullityPair{2, 1};
    return verdict(ok ? Verdict::yes : Verdict::no, "Prop4.4");
  }
  const Vertex center = star_center(graph);
  if (center >= 0 && !snip) {
    const StarRoot root = center == i ? StarRoot::center : StarRoot::leaf;
    return verdict(star_pair_admissible(n - 1, root, pair) ? Verdict::yes : Verdict::no, "Prop4.6");
  }

  if (prof.is_tree && snip) {
    const auto& high = prof.high_degree_vertices;
    const bool other_high = std::any_of(high.begin(), high.end(), [&](Vertex v) { return v != i; });
    const bool far_high = std::any_of(high.begin(), high.end(), [&](Vertex v) { return v != i && !graph.adjacent(v, i); });
    if (pair == NullityPair{1, 1} || pair == NullityPair{2, 1}) {
      return verdict(other_high ? Verdict::yes : Verdict::no, "Thm5.13");
    }
    if (pair == NullityPair{1, 2}) return verdict(far_high ? Verdict::yes : Verdict::no, "Thm5.13");
    return verdict(Verdict::no, "Thm5.13");
  }

  if (pair == NullityPair{1, 1} || pair == NullityPair{2, 1}) {
    const bool ok = !prof.is_path && !(prof.is_generalized_star() && prof.star_center == i);
    return verdict(ok ? Verdict::yes : Verdict::no, "Thm5.2");
  }
  if (pair == NullityPair{1, 2}) {
    if (snip) return verdict(prof.is_yam ? Verdict::no : Verdict::yes, "Thm5.8");
    const bool no = prof.is_yam && prof.components_minus_root.size() <= 1;
    return verdict(no ? Verdict::no : Verdict::yes, "Thm5.12");
  }
  return verdict(Verdict::unknown, "search-exhausted");
}

std::optional<Realization> try_make(const std::function<Realization()>& build, bool snip) {
  try {
    Realization r = build();
    if (!snip || r.snip_verified) return r;
  } catch (const DomainError&) {
  }
  return std::nullopt;
}

}  // namespace

Realization transport(const Realization& r, const RootedGraph& target) {
  if (!isomorphic(r.graph, target)) throw DomainError("transport: graphs are not isomorphic");
  const CanonicalLabeling src = canonical_labeling(r.graph);
  const CanonicalLabeling dst = canonical_labeling(target);
  const int n = target.order();
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int p = 0; p < n; ++p) {
    sigma[static_cast<std::size_t>(dst.perm[static_cast<std::size_t>(p)])] = src.perm[static_cast<std::size_t>(p)];
  }
  return make_realization(r.matrix.permuted(sigma), target, r.pair, r.provenance);
}

std::optional<Realization> find_witness(const RootedGraph& g, NullityPair pair, bool snip, const DecideOptions& opts,
                                        long* iterations) {
  if (iterations) *iterations = 0;
  const Graph& graph = g.graph();
  const int n = g.order();
  if (is_trivial(pair)) {
    if (auto r = try_make([&] { return realize_trivial(g, pair); }, snip)) return r;
  }
  if (n >= 2 && is_complete(graph) && complete_pair_admissible(n, pair)) {
    return realize_complete(n, g.root(), pair);
  }
  for (const auto& name : certificate_names()) {
    const Certificate c = certificate_matrix(name);
    if (c.pair != pair || (snip && !c.snip) || !isomorphic(c.graph, g)) continue;
    const Realization r = make_realization(c.matrix, c.graph, c.pair, "certificate:" + name);
    return transport(r, g);
  }
  const Vertex center = star_center(graph);
  if (center >= 0) {
    const StarRoot root = center == g.root() ? StarRoot::center : StarRoot::leaf;
    if (star_pair_admissible(n - 1, root, pair)) {
      if (auto r = try_make([&] { return transport(realize_star(n - 1, root, pair), g); }, snip)) return r;
    }
  }
  if (pair == NullityPair{1, 2} && graph.connected() && classify_structure(g).root_is_cut_vertex) {
    if (auto r = try_make([&] { return realize_cut_vertex(g); }, snip)) return r;
  }
  SearchRequest req;
  req.graph = g;
  req.pair = pair;
  req.require_snip = snip;
  req.seed = opts.seed;
  req.budget = opts.budget;
  req.jobs = opts.jobs;
  SearchOutcome out = realize_search(req);
  if (iterations) *iterations = out.iterations;
  return std::move(out.found);
}

Decision decide_allows(const RootedGraph& g, NullityPair pair, bool with_snip, const DecideOptions& opts) {
  if (pair.k < 0 || pair.l < 0 || std::abs(pair.k - pair.l) > 1) {
    throw DomainError("decide_allows: pair " + to_string(pair) + " violates |k - l| <= 1");
  }
  if (!g.graph().connected()) {
    throw DomainError("decide_allows: graph must be connected (restrict to the root's component first)");
  }
  Decision d = decide_core(g, pair, with_snip);

  if (d.verdict == Verdict::yes && (pair == NullityPair{1, 1} || pair == NullityPair{2, 1})) {
    d.minor_witness = first_minor(g, {{"K3", &k3_rooted()}, {"K13-leaf", &k13_leaf()}});
  } else if (d.verdict == Verdict::yes && pair == NullityPair{1, 2} && with_snip) {
    d.minor_witness = first_minor(g, {{"Paw", &paw_rooted()}, {"S211", &s211_rooted()}});
  }

  if (d.verdict == Verdict::unknown) {
    auto w = find_witness(g, pair, with_snip, opts, &d.search_iterations);
    if (w) {
      d.verdict = Verdict::yes;
      d.justification = "search-witness";
      d.witness = std::move(w);
    }
    return d;
  }
  if (d.verdict == Verdict::yes && opts.want_certificate) {
    d.witness = find_witness(g, pair, with_snip, opts, &d.search_iterations);
  }
  return d;
}

bool allows_21_by_minors(const RootedGraph& g) {
  static thread_local MinorContainment k3(k3_rooted());
  static thread_local MinorContainment k13(k13_leaf());
  const RootedGraph c = root_component(g);
  return k3.contained_in(c) || k13.contained_in(c);
}

bool allows_21_by_structure(const RootedGraph& g) {
  const StructureProfile p = classify_structure(g);
  return !p.is_path && !(p.is_generalized_star() && p.star_center == g.root());
}

bool allows_12_snip_by_minors(const RootedGraph& g) {
  static thread_local MinorContainment paw(paw_rooted());
  static thread_local MinorContainment s211(s211_rooted());
  const RootedGraph c = root_component(g);
  return paw.contained_in(c) || s211.contained_in(c);
}

bool allows_12_snip_by_structure(const RootedGraph& g) { return !classify_structure(g).is_yam; }

MinimalMinorResult search_minimal_minors(NullityPair pair, int max_n, const DecideOptions& opts) {
  if (max_n < 1 || max_n > kDefaultEnumerationCap) {
    throw DomainError("search_minimal_minors: max_n must be between 1 and " + std::to_string(kDefaultEnumerationCap));
  }
  const auto universe = enumerate_rooted_graphs_up_to(max_n, true);
  std::vector<Verdict> status(universe.size(), Verdict::unknown);
  const int jobs = std::max(1, opts.jobs);
  auto work = [&](int w) {
    for (std::size_t idx = static_cast<std::size_t>(w); idx < universe.size(); idx += static_cast<std::size_t>(jobs)) {
      DecideOptions o = opts;
      o.jobs = 1;
      o.want_certificate = false;
      o.seed = derive_seed(opts.seed, idx);
      status[idx] = decide_allows(universe[idx], pair, true, o).verdict;
    }
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::jthread> threads;
    for (int w = 0; w < jobs; ++w) threads.emplace_back(work, w);
  }

  MinimalMinorResult result;
  result.examined = universe.size();
  std::unordered_set<CanonicalForm, CanonicalFormHash> marked;
  for (std::size_t idx = 0; idx < universe.size(); ++idx) {
    if (status[idx] == Verdict::yes) marked.insert(canonical_form(universe[idx]));
    if (status[idx] == Verdict::unknown) result.undecided.push_back(universe[idx]);
  }
  std::vector<MinorContainment> found;
  for (std::size_t idx = 0; idx < universe.size(); ++idx) {
    if (status[idx] != Verdict::yes) continue;
    const RootedGraph& g = universe[idx];
    bool minimal = true;
    for (const RootedGraph& m : one_step_minors(g)) {
      if (marked.contains(canonical_form(root_component(m)))) {
        minimal = false;
        break;
      }
    }
    for (auto it = found.begin(); minimal && it != found.end(); ++it) {
      if (it->contained_in(g)) minimal = false;
    }
    if (!minimal) continue;
    found.emplace_back(g);
    result.minimal.push_back(g);
  }
  return result;
}

std::size_t AuditReport::violations() const {
  if (!base_witness) return 0;
  return static_cast<std::size_t>(std::count_if(samples.begin(), samples.end(), [](const AuditSample& s) { return !s.witness_found; }));
}

AuditReport minor_monotonicity_audit(const RootedGraph& g, NullityPair pair, int samples, const DecideOptions& opts) {
  if (g.order() > 6) throw DomainError("minor_monotonicity_audit: G must have at most 6 vertices");
  if (samples < 0) throw DomainError("minor_monotonicity_audit: sample count must be nonnegative");
  AuditReport report;
  report.base_witness = find_witness(g, pair, true, opts).has_value();
  if (!report.base_witness) return report;

  Rng rng(opts.seed);
  constexpr int kMaxHostOrder = 7;
  for (int s = 0; s < samples; ++s) {
    const Graph& base = g.graph();
    const int n = g.order();
    std::vector<Edge> non_edges;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!base.adjacent(u, v)) non_edges.push_back({u, v});
      }
    }
    int op = static_cast<int>(rng.uniform(0, 2));
    if (n >= kMaxHostOrder) {
      if (non_edges.empty()) break;
      op = 0;
    } else if (op == 0 && non_edges.empty()) {
      op = 1;
    }

    AuditSample sample;
    if (op == 0) {
      const Edge e = non_edges[static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(non_edges.size()) - 1))];
      Graph h = base;
      h.add_edge(e.u, e.v);
      sample.host = RootedGraph(h, g.root());
      sample.operation = "add-edge";
    } else {
      Graph h(n + 1);
      for (const Edge& e : base.edges()) h.add_edge(e.u, e.v);
      const Vertex u = static_cast<Vertex>(rng.uniform(0, n - 1));
      if (op == 1) {
        h.add_edge(u, n);
        sample.operation = "add-vertex";
      } else {
        for (Vertex w = 0; w < n; ++w) {
          if (base.adjacent(u, w) && rng.uniform(0, 1)) {
            h.remove_edge(u, w);
            h.add_edge(n, w);
          }
        }
        h.add_edge(u, n);
        sample.operation = "split-vertex";
      }
      sample.host = RootedGraph(h, g.root());
    }
    DecideOptions o = opts;
    o.seed = derive_seed(opts.seed, static_cast<std::uint64_t>(s));
    sample.witness_found = find_witness(sample.host, pair, true, o, &sample.iterations).has_value();
    report.samples.push_back(std::move(sample));
  }
  return report;
}

}  // namespace inpp
