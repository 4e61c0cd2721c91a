#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "inpp/graph.hpp"
#include "inpp/nullity.hpp"
#include "inpp/rational_matrix.hpp"

namespace inpp {

/// A matrix in S(graph) with an exactly verified root nullity pair.
struct Realization {
  RationalSymMatrix matrix;
  RootedGraph graph;
  NullityPair pair;
  /// has_snip was evaluated exactly on `matrix` and holds.
  bool snip_verified = false;
  /// Construction name, "search" or "certificate:<name>".
  std::string provenance;
};

/// Re-verifies pattern membership and the pair with the exact routines and
/// evaluates the SNIP. Throws std::logic_error when the matrix misses `pair`.
Realization make_realization(RationalSymMatrix matrix, const RootedGraph& g, NullityPair pair,
                             std::string provenance);

/// The pairs (0,0), (1,0) and (0,1) on a connected graph.
Realization realize_trivial(const RootedGraph& g, NullityPair pair);

bool complete_pair_admissible(int n, NullityPair pair);
/// K_n rooted at i; every admissible pair.
Realization realize_complete(int n, Vertex i, NullityPair pair);

enum class StarRoot { center, leaf };
bool star_pair_admissible(int leaves, StarRoot root, NullityPair pair);
/// K_{1,leaves} in the star family layout (center last, leaf root = vertex 0).
Realization realize_star(int leaves, StarRoot root, NullityPair pair);

/// Pair (1,2) for a connected graph whose root is a cut vertex.
Realization realize_cut_vertex(const RootedGraph& g);

/// Matrices printed in the worked examples, with their stated properties.
struct Certificate {
  std::string name;
  RationalSymMatrix matrix;
  RootedGraph graph;
  NullityPair pair;
  bool snip = false;
  std::optional<bool> sap;          // SAP of the matrix, where stated
  std::optional<bool> deleted_sap;  // SAP of the matrix with the root deleted
};

std::vector<std::string> certificate_names();
Certificate certificate_matrix(std::string_view name);

struct SearchRequest {
  RootedGraph graph;
  NullityPair pair;
  bool require_snip = false;
  std::uint64_t seed = 1;
  long budget = 10000;
  int jobs = 1;
};

struct SearchOutcome {
  std::optional<Realization> found;
  /// Iterations used by the worker that produced the result (or by all
  /// workers together when nothing was found).
  long iterations = 0;
  int winning_worker = -1;
};

/// Seeded randomized exact search over small-integer matrices in S(G), with
/// diagonal shifts steering the nullity of A(i) and a root border chosen in or
/// out of Col(A(i)). Not finding a witness proves nothing.
SearchOutcome realize_search(const SearchRequest& request);

}  // namespace inpp
