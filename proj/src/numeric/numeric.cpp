#include "inpp/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "inpp/error.hpp"

namespace inpp {

FloatMatrix FloatMatrix::identity(int n) {
  FloatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

FloatMatrix FloatMatrix::transposed() const {
  FloatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

FloatMatrix operator*(const FloatMatrix& a, const FloatMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product: dimension mismatch");
  FloatMatrix out(a.rows(), b.cols());
  for (int r = 0; r < a.rows(); ++r) {
    for (int k = 0; k < a.cols(); ++k) {
      const double x = a(r, k);
      if (x == 0.0) continue;
      for (int c = 0; c < b.cols(); ++c) out(r, c) += x * b(k, c);
    }
  }
  return out;
}

FloatSymMatrix FloatSymMatrix::from_rational(const RationalSymMatrix& m) {
  FloatSymMatrix f(m.order());
  for (int i = 0; i < m.order(); ++i) {
    for (int j = i; j < m.order(); ++j) f.set(i, j, m(i, j).get_d());
  }
  return f;
}

FloatSymMatrix FloatSymMatrix::from_matrix(const FloatMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("symmetric matrix must be square");
  FloatSymMatrix f(m.rows());
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = i; j < m.cols(); ++j) f.set(i, j, 0.5 * (m(i, j) + m(j, i)));
  }
  return f;
}

FloatMatrix FloatSymMatrix::dense() const {
  FloatMatrix d(n_, n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) d(i, j) = (*this)(i, j);
  }
  return d;
}

FloatSymMatrix FloatSymMatrix::without(int i) const {
  FloatSymMatrix out(n_ - 1);
  for (int p = 0, pp = 0; p < n_; ++p) {
    if (p == i) continue;
    for (int q = p, qq = pp; q < n_; ++q) {
      if (q == i) continue;
      out.set(pp, qq, (*this)(p, q));
      ++qq;
    }
    ++pp;
  }
  return out;
}

nlohmann::json to_json(const FloatSymMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.order(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.order(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return {{"n", m.order()}, {"entries", std::move(rows)}};
}

FloatSymMatrix float_matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("entries") || !j["n"].is_number_integer()) {
    throw DomainError("float matrix JSON needs an integer \"n\" and \"entries\"");
  }
  const int n = j["n"].get<int>();
  const auto& e = j["entries"];
  if (n < 0 || !e.is_array() || static_cast<int>(e.size()) != n) throw DomainError("float matrix JSON: bad row count");
  FloatSymMatrix m(n);
  for (int r = 0; r < n; ++r) {
    const auto& row = e[static_cast<std::size_t>(r)];
    if (!row.is_array() || static_cast<int>(row.size()) != n) throw DomainError("float matrix JSON: bad row length");
    for (int c = 0; c < n; ++c) {
      const auto& x = row[static_cast<std::size_t>(c)];
      if (!x.is_number()) throw DomainError("float matrix JSON: entries must be numbers");
      if (c >= r) {
        m.set(r, c, x.get<double>());
      } else if (x.get<double>() != m(c, r)) {
        throw DomainError("float matrix JSON: matrix is not symmetric");
      }
    }
  }
  return m;
}

namespace {

/// One-sided Jacobi on a tall matrix (rows >= cols).
Svd svd_tall(FloatMatrix a) {
  const int m = a.rows();
  const int n = a.cols();
  FloatMatrix v = FloatMatrix::identity(n);
  constexpr double kEps = std::numeric_limits<double>::epsilon();
  for (int sweep = 0; sweep < 80; ++sweep) {
    bool rotated = false;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        double alpha = 0;
        double beta = 0;
        double gamma = 0;
        for (int r = 0; r < m; ++r) {
          alpha += a(r, p) * a(r, p);
          beta += a(r, q) * a(r, q);
          gamma += a(r, p) * a(r, q);
        }
        if (gamma == 0.0 || std::abs(gamma) <= kEps * std::sqrt(alpha * beta)) continue;
        rotated = true;
        const double zeta = (beta - alpha) / (2 * gamma);
        const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1 + zeta * zeta));
        const double c = 1 / std::sqrt(1 + t * t);
        const double s = c * t;
        for (int r = 0; r < m; ++r) {
          const double x = a(r, p);
          const double y = a(r, q);
          a(r, p) = c * x - s * y;
          a(r, q) = s * x + c * y;
        }
        for (int r = 0; r < n; ++r) {
          const double x = v(r, p);
          const double y = v(r, q);
          v(r, p) = c * x - s * y;
          v(r, q) = s * x + c * y;
        }
      }
    }
    if (!rotated) break;
  }
  std::vector<double> norms(static_cast<std::size_t>(n));
  for (int c = 0; c < n; ++c) {
    double s = 0;
    for (int r = 0; r < m; ++r) s += a(r, c) * a(r, c);
    norms[static_cast<std::size_t>(c)] = std::sqrt(s);
  }
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) { return norms[static_cast<std::size_t>(x)] > norms[static_cast<std::size_t>(y)]; });
  Svd out;
  out.u = FloatMatrix(m, n);
  out.v = FloatMatrix(n, n);
  for (int k = 0; k < n; ++k) {
    const int c = order[static_cast<std::size_t>(k)];
    const double s = norms[static_cast<std::size_t>(c)];
    out.sigma.push_back(s);
    for (int r = 0; r < m; ++r) out.u(r, k) = s > 0 ? a(r, c) / s : 0.0;
    for (int r = 0; r < n; ++r) out.v(r, k) = v(r, c);
  }
  return out;
}

}  // namespace

Svd svd(const FloatMatrix& a) {
  if (a.rows() >= a.cols()) return svd_tall(a);
  Svd t = svd_tall(a.transposed());
  std::swap(t.u, t.v);
  return t;
}

RankInfo rank_info(const FloatMatrix& m, double tol, double gap_ratio) {
  if (tol <= 0) throw DomainError("rank tolerance must be positive");
  RankInfo info;
  info.gap = std::numeric_limits<double>::infinity();
  if (m.rows() == 0 || m.cols() == 0) return info;
  const Svd s = svd(m);
  const double top = s.sigma.front();
  if (top == 0.0) return info;
  for (double x : s.sigma) {
    if (x > tol * top) ++info.rank;
  }
  if (info.rank < static_cast<int>(s.sigma.size())) {
    const double dropped = s.sigma[static_cast<std::size_t>(info.rank)];
    if (dropped > 0) info.gap = s.sigma[static_cast<std::size_t>(info.rank - 1)] / dropped;
  }
  info.ambiguous = info.gap <= gap_ratio;
  return info;
}

int numerical_rank(const FloatMatrix& m, double tol) { return rank_info(m, tol).rank; }

int numerical_rank(const FloatSymMatrix& m, double tol) { return rank_info(m.dense(), tol).rank; }

std::vector<double> least_norm_solve(const FloatMatrix& a, const std::vector<double>& b, double tol) {
  if (static_cast<int>(b.size()) != a.rows()) throw DomainError("least_norm_solve: dimension mismatch");
  const Svd s = svd(a);
  std::vector<double> x(static_cast<std::size_t>(a.cols()), 0.0);
  if (s.sigma.empty() || s.sigma.front() == 0.0) return x;
  const double cut = tol * s.sigma.front();
  for (std::size_t k = 0; k < s.sigma.size(); ++k) {
    if (s.sigma[k] <= cut) break;
    double coef = 0;
    for (int r = 0; r < a.rows(); ++r) coef += s.u(r, static_cast<int>(k)) * b[static_cast<std::size_t>(r)];
    coef /= s.sigma[k];
    for (int c = 0; c < a.cols(); ++c) x[static_cast<std::size_t>(c)] += coef * s.v(c, static_cast<int>(k));
  }
  return x;
}

}  // namespace inpp
