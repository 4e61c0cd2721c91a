#include "inpp/strong.hpp"

#include "inpp/error.hpp"
#include "inpp/nullity.hpp"

namespace inpp {

namespace {

void require_strict(const RationalSymMatrix& a, const Graph& g) {
  if (!in_pattern(a, g, false)) throw DomainError("matrix is not in S(G) for the given graph");
}

}  // namespace

bool VerificationSystem::trivial_kernel() const {
  return rank(constraints) == static_cast<int>(unknowns.size());
}

VerificationSystem build_verification_system(const RationalSymMatrix& a, const Graph& g,
                                             std::optional<Vertex> snip_root) {
  const int n = a.order();
  if (!in_pattern(a, g, true)) throw DomainError("matrix is not in the closure of S(G)");
  if (snip_root && (*snip_root < 0 || *snip_root >= n)) {
    throw DomainError("root " + std::to_string(*snip_root + 1) + " out of range");
  }

  VerificationSystem sys;
  sys.root = snip_root;
  for (Vertex p = 0; p < n; ++p) {
    for (Vertex q = p + 1; q < n; ++q) {
      if (!g.adjacent(p, q)) sys.unknowns.push_back({p, q});
    }
  }

  // Column index of entry (r,s); -1 for the skipped root row.
  const auto column = [&](int r, int s) -> int {
    if (!snip_root) return r * n + s;
    if (r == *snip_root) return -1;
    return (r < *snip_root ? r : r - 1) * n + s;
  };
  const int rows_kept = snip_root ? n - 1 : n;
  sys.constraints = RationalMatrix(static_cast<int>(sys.unknowns.size()), rows_kept * n);

  // X = sum x_pq (E_pq + E_qp), so x_pq contributes A[r,p] to (AX)[r,q] and
  // A[r,q] to (AX)[r,p].
  for (std::size_t u = 0; u < sys.unknowns.size(); ++u) {
    const auto [p, q] = sys.unknowns[u];
    for (int r = 0; r < n; ++r) {
      if (const int c = column(r, q); c >= 0) sys.constraints(static_cast<int>(u), c) += a(r, p);
      if (const int c = column(r, p); c >= 0) sys.constraints(static_cast<int>(u), c) += a(r, q);
    }
  }
  return sys;
}

bool has_sap(const RationalSymMatrix& a, const Graph& g) {
  require_strict(a, g);
  return build_verification_system(a, g, std::nullopt).trivial_kernel();
}

bool has_snip(const RationalSymMatrix& a, const Graph& g, Vertex i) {
  require_strict(a, g);
  if (i < 0 || i >= a.order()) throw DomainError("root " + std::to_string(i + 1) + " out of range");
  return build_verification_system(a, g, i).trivial_kernel();
}

bool has_snip_characterized(const RationalSymMatrix& a, const Graph& g, Vertex i) {
  require_strict(a, g);
  if (i < 0 || i >= a.order()) throw DomainError("root " + std::to_string(i + 1) + " out of range");
  switch (classify_vertex(a, i)) {
    case VertexClass::downer:
      return has_sap(a, g);
    case VertexClass::neutral: {
      RationalSymMatrix shifted = a;
      shifted.add_to_diagonal(i, neutral_shift(a, i));
      return has_sap(shifted, g);
    }
    case VertexClass::upper:
      return has_sap(principal_delete(a, {i}), g.without_vertex(i));
  }
  return false;
}

}  // namespace inpp
