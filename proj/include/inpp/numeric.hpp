#pragma once

#include <json.hpp>
#include <vector>

#include "inpp/rational_matrix.hpp"

namespace inpp {

/// Dense row-major double matrix.
class FloatMatrix {
 public:
  FloatMatrix() = default;
  FloatMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0.0) {}
  static FloatMatrix identity(int n);

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  double& operator()(int r, int c) { return data_[index(r, c)]; }
  [[nodiscard]] double operator()(int r, int c) const { return data_[index(r, c)]; }
  [[nodiscard]] FloatMatrix transposed() const;

 private:
  [[nodiscard]] std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<double> data_;
};

FloatMatrix operator*(const FloatMatrix& a, const FloatMatrix& b);

/// Symmetric double matrix; only the upper triangle is stored.
class FloatSymMatrix {
 public:
  FloatSymMatrix() = default;
  explicit FloatSymMatrix(int n) : n_(n), upper_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n + 1) / 2, 0.0) {}
  static FloatSymMatrix from_rational(const RationalSymMatrix& m);
  /// Symmetrizes (m + m^T) / 2.
  static FloatSymMatrix from_matrix(const FloatMatrix& m);

  [[nodiscard]] int order() const { return n_; }
  [[nodiscard]] double operator()(int i, int j) const { return upper_[slot(i, j)]; }
  void set(int i, int j, double x) { upper_[slot(i, j)] = x; }
  [[nodiscard]] FloatMatrix dense() const;
  /// Principal submatrix without index i.
  [[nodiscard]] FloatSymMatrix without(int i) const;

 private:
  [[nodiscard]] std::size_t slot(int i, int j) const {
    if (i > j) std::swap(i, j);
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(2 * n_ - i + 1) / 2 + static_cast<std::size_t>(j - i);
  }
  int n_ = 0;
  std::vector<double> upper_;
};

nlohmann::json to_json(const FloatSymMatrix& m);
/// {"n": int, "entries": [[double, ...], ...]}; symmetry is enforced.
FloatSymMatrix float_matrix_from_json(const nlohmann::json& j);

/// Thin SVD a = U diag(sigma) V^T by one-sided Jacobi rotations; sigma is
/// sorted in decreasing order.
struct Svd {
  std::vector<double> sigma;
  FloatMatrix u;  // rows(a) x k
  FloatMatrix v;  // cols(a) x k
};
Svd svd(const FloatMatrix& a);

struct RankInfo {
  int rank = 0;
  /// Smallest kept singular value over largest dropped one (infinite when
  /// nothing is dropped or the dropped values are exactly zero).
  double gap = 0.0;
  /// True when the gap is below the sanity ratio.
  bool ambiguous = false;
};

/// Singular values above tol * sigma_max count toward the rank.
RankInfo rank_info(const FloatMatrix& m, double tol, double gap_ratio = 1e3);
int numerical_rank(const FloatMatrix& m, double tol);
int numerical_rank(const FloatSymMatrix& m, double tol);

/// Least-norm solution of a x = b, truncating singular values below
/// tol * sigma_max.
std::vector<double> least_norm_solve(const FloatMatrix& a, const std::vector<double>& b, double tol);

}  // namespace inpp
