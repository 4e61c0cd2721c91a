#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "inpp/graph.hpp"
#include "inpp/nullity.hpp"
#include "inpp/realize.hpp"

namespace inpp {

/// Maximum nullities and SAP-nullities the decision procedures rely on.
struct KnownFacts {
  static constexpr int max_nullity_path() { return 1; }
  static constexpr int max_nullity_cycle() { return 2; }
  static constexpr int max_nullity_complete(int n) { return n - 1; }
  static constexpr int max_nullity_star(int leaves) { return leaves - 1; }
  static constexpr int xi_tree_not_path() { return 2; }
};

enum class Verdict { yes, no, unknown };
std::string to_string(Verdict v);

struct Decision {
  Verdict verdict = Verdict::unknown;
  /// Theorem tag ("Thm5.2", "Prop4.4", ...), "search-witness" or
  /// "search-exhausted".
  std::string justification;
  std::optional<Realization> witness;
  /// Name of a forbidden/required rooted minor found in G, when the verdict
  /// came from a minor characterization.
  std::optional<std::string> minor_witness;
  long search_iterations = 0;
};

struct DecideOptions {
  std::uint64_t seed = 1;
  long budget = 10000;
  int jobs = 1;
  /// Attach a verified matrix to "yes" verdicts (may run a search).
  bool want_certificate = true;
};

/// Requires a connected G and |k - l| <= 1.
Decision decide_allows(const RootedGraph& g, NullityPair pair, bool with_snip, const DecideOptions& opts = {});

/// Some verified realization of the pair on g (SNIP verified when requested),
/// built from a family construction, the certificate library or a search.
std::optional<Realization> find_witness(const RootedGraph& g, NullityPair pair, bool with_snip,
                                        const DecideOptions& opts, long* iterations = nullptr);

/// Re-labels a realization onto an isomorphic rooted graph and re-verifies it.
Realization transport(const Realization& r, const RootedGraph& target);

/// The two sides of the (2,1) characterization, computed independently:
/// containment of (K_3, i) or (K_{1,3}, leaf) versus the path/star test.
bool allows_21_by_minors(const RootedGraph& g);
bool allows_21_by_structure(const RootedGraph& g);
/// The two sides of the (1,2)-with-SNIP characterization: containment of
/// (Paw, i) or (S(2,1,1), i) versus "not a yam graph".
bool allows_12_snip_by_minors(const RootedGraph& g);
bool allows_12_snip_by_structure(const RootedGraph& g);

struct MinimalMinorResult {
  std::vector<RootedGraph> minimal;
  /// Graphs whose status stayed unknown; minimality is relative to the rest.
  std::vector<RootedGraph> undecided;
  std::size_t examined = 0;
};

/// Minimal rooted minors (connected, up to max_n <= 7 vertices) allowing the
/// pair with the SNIP, each in canonical labeling with the root at vertex 0.
MinimalMinorResult search_minimal_minors(NullityPair pair, int max_n, const DecideOptions& opts = {});

struct AuditSample {
  RootedGraph host;
  std::string operation;  // "add-edge", "add-vertex" or "split-vertex"
  bool witness_found = false;
  long iterations = 0;
};

struct AuditReport {
  /// Set when G itself has no witness, which makes the audit vacuous.
  bool base_witness = false;
  std::vector<AuditSample> samples;
  [[nodiscard]] std::size_t violations() const;
};

/// Samples supergraphs and vertex splits H of G (up to 7 vertices) and looks
/// for a SNIP witness of the pair on each.
AuditReport minor_monotonicity_audit(const RootedGraph& g, NullityPair pair, int samples,
                                     const DecideOptions& opts = {});

}  // namespace inpp
