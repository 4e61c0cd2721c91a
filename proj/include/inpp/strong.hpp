#pragma once

#include <optional>
#include <vector>

#include "inpp/graph.hpp"
#include "inpp/rational_matrix.hpp"

namespace inpp {

/// Linear system in the free entries of a symmetric X with A∘X = O and
/// I∘X = O. Row u of `constraints` holds the coefficients of unknown u in each
/// entry of AX (sap) or of (AX)(i,:] (snip).
struct VerificationSystem {
  /// Off-diagonal non-edges {p,q}, p < q, in lexicographic order.
  std::vector<Edge> unknowns;
  /// One column per entry (r,s), row-major, skipping r = root in snip mode.
  RationalMatrix constraints;
  /// Empty for sap mode.
  std::optional<Vertex> root;

  [[nodiscard]] bool trivial_kernel() const;
};

/// Requires A in the closure of S(G).
VerificationSystem build_verification_system(const RationalSymMatrix& a, const Graph& g,
                                             std::optional<Vertex> snip_root);

/// Strong Arnold property. Requires A in S(G).
bool has_sap(const RationalSymMatrix& a, const Graph& g);

/// i-strong nullity interlacing property. Requires A in S(G).
bool has_snip(const RationalSymMatrix& a, const Graph& g, Vertex i);

/// Decides the i-SNIP through the SAP of a related matrix, chosen by the
/// class of i: downer -> A, neutral -> A + t E_ii with the neutral shift t,
/// upper -> A(i) on G - i.
bool has_snip_characterized(const RationalSymMatrix& a, const Graph& g, Vertex i);

}  // namespace inpp
