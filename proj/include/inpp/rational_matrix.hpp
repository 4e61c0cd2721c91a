#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace inpp {

/// Exact rational (GMP): always reduced, positive denominator.
using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

/// Dense row-major rational matrix of arbitrary shape.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(int rows, int cols);

  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  Rational& operator()(int r, int c) { return data_[index(r, c)]; }
  [[nodiscard]] const Rational& operator()(int r, int c) const { return data_[index(r, c)]; }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  [[nodiscard]] std::size_t index(int r, int c) const {
    return static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c);
  }
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

/// Rank by fraction-free (Bareiss) elimination on the row-scaled integer
/// matrix; the pivot is the first nonzero entry in column order.
int rank(const RationalMatrix& m);

/// Basis of {x : m x = 0} from the reduced row echelon form, one vector per
/// free column.
std::vector<RationalVector> nullspace(const RationalMatrix& m);

/// Some solution of m x = rhs, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs);

/// Symmetric matrix over the rationals; set() writes both mirror entries.
class RationalSymMatrix {
 public:
  RationalSymMatrix() = default;
  explicit RationalSymMatrix(int n) : m_(n, n) {}
  /// Throws DomainError when `rows` is not square or not symmetric.
  RationalSymMatrix(std::initializer_list<std::initializer_list<Rational>> rows);
  static RationalSymMatrix from_matrix(const RationalMatrix& m);
  static RationalSymMatrix identity(int n);
  static RationalSymMatrix diagonal(const RationalVector& d);

  [[nodiscard]] int order() const { return m_.rows(); }
  [[nodiscard]] const Rational& operator()(int i, int j) const { return m_(i, j); }
  void set(int i, int j, const Rational& value);
  void add_to_diagonal(int i, const Rational& value) { m_(i, i) += value; }

  [[nodiscard]] const RationalMatrix& matrix() const { return m_; }
  [[nodiscard]] RationalVector multiply(const RationalVector& x) const;
  /// Simultaneous row and column permutation: result(p,q) = this(perm[p], perm[q]).
  [[nodiscard]] RationalSymMatrix permuted(const std::vector<int>& perm) const;

  friend bool operator==(const RationalSymMatrix&, const RationalSymMatrix&) = default;

 private:
  RationalMatrix m_;
};

std::ostream& operator<<(std::ostream& os, const RationalSymMatrix& m);

}  // namespace inpp
