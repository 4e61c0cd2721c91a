#include "inpp/rational_matrix.hpp"

#include <cctype>
#include <ostream>
#include <utility>

#include "inpp/error.hpp"

namespace inpp {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw DomainError("empty rational literal");
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '/')) {
      throw DomainError("invalid rational literal '" + s + "'");
    }
  }
  if (s.front() == '+') s.erase(0, 1);
  Rational q;
  if (q.set_str(s, 10) != 0) throw DomainError("invalid rational literal '" + std::string(text) + "'");
  if (q.get_den() == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str(10);
}

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DomainError("negative matrix dimension");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

int rank(const RationalMatrix& m) {
  const int rows = m.rows();
  const int cols = m.cols();
  // Scale each row by the lcm of its denominators to get an integer matrix.
  std::vector<std::vector<mpz_class>> a(static_cast<std::size_t>(rows), std::vector<mpz_class>(static_cast<std::size_t>(cols)));
  for (int r = 0; r < rows; ++r) {
    mpz_class l = 1;
    for (int c = 0; c < cols; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
    auto& row = a[static_cast<std::size_t>(r)];
    for (int c = 0; c < cols; ++c) row[static_cast<std::size_t>(c)] = m(r, c).get_num() * (l / m(r, c).get_den());
  }

  int rk = 0;
  mpz_class prev = 1;
  mpz_class tmp;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int pivot = -1;
    for (int r = rk; r < rows; ++r) {
      if (sgn(a[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[static_cast<std::size_t>(pivot)], a[static_cast<std::size_t>(rk)]);
    const auto& prow = a[static_cast<std::size_t>(rk)];
    const mpz_class p = prow[static_cast<std::size_t>(c)];
    for (int r = rk + 1; r < rows; ++r) {
      auto& row = a[static_cast<std::size_t>(r)];
      const mpz_class f = row[static_cast<std::size_t>(c)];
      for (int k = c + 1; k < cols; ++k) {
        auto& x = row[static_cast<std::size_t>(k)];
        tmp = x * p - f * prow[static_cast<std::size_t>(k)];
        mpz_divexact(x.get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      row[static_cast<std::size_t>(c)] = 0;
    }
    prev = p;
    ++rk;
  }
  return rk;
}

namespace {

struct Echelon {
  RationalMatrix r;
  std::vector<int> pivot_cols;
};

/// Gauss-Jordan to reduced row echelon form.
Echelon rref(RationalMatrix a) {
  Echelon e;
  const int rows = a.rows();
  const int cols = a.cols();
  int rk = 0;
  for (int c = 0; c < cols && rk < rows; ++c) {
    int pivot = -1;
    for (int r = rk; r < rows; ++r) {
      if (sgn(a(r, c)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rk) {
      for (int k = 0; k < cols; ++k) std::swap(a(pivot, k), a(rk, k));
    }
    const Rational inv = 1 / a(rk, c);
    for (int k = c; k < cols; ++k) a(rk, k) *= inv;
    for (int r = 0; r < rows; ++r) {
      if (r == rk || sgn(a(r, c)) == 0) continue;
      const Rational f = a(r, c);
      for (int k = c; k < cols; ++k) a(r, k) -= f * a(rk, k);
    }
    e.pivot_cols.push_back(c);
    ++rk;
  }
  e.r = std::move(a);
  return e;
}

}  // namespace

std::vector<RationalVector> nullspace(const RationalMatrix& m) {
  const Echelon e = rref(m);
  const int cols = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : e.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<RationalVector> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    RationalVector x(static_cast<std::size_t>(cols), Rational(0));
    x[static_cast<std::size_t>(free)] = 1;
    for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
      x[static_cast<std::size_t>(e.pivot_cols[k])] = -e.r(static_cast<int>(k), free);
    }
    basis.push_back(std::move(x));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& m, const RationalVector& rhs) {
  if (static_cast<int>(rhs.size()) != m.rows()) throw DomainError("solve: dimension mismatch");
  RationalMatrix aug(m.rows(), m.cols() + 1);
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = rhs[static_cast<std::size_t>(r)];
  }
  const Echelon e = rref(aug);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  RationalVector x(static_cast<std::size_t>(m.cols()), Rational(0));
  for (std::size_t k = 0; k < e.pivot_cols.size(); ++k) {
    x[static_cast<std::size_t>(e.pivot_cols[k])] = e.r(static_cast<int>(k), m.cols());
  }
  return x;
}

RationalSymMatrix::RationalSymMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  const int n = static_cast<int>(rows.size());
  RationalMatrix m(n, n);
  int r = 0;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != n) throw DomainError("matrix rows must form a square");
    int c = 0;
    for (const Rational& x : row) m(r, c++) = x;
    ++r;
  }
  *this = from_matrix(m);
}

RationalSymMatrix RationalSymMatrix::from_matrix(const RationalMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("symmetric matrix must be square");
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = i + 1; j < m.cols(); ++j) {
      if (m(i, j) != m(j, i)) {
        throw DomainError("matrix is not symmetric at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
      }
    }
  }
  RationalSymMatrix s;
  s.m_ = m;
  return s;
}

RationalSymMatrix RationalSymMatrix::identity(int n) {
  RationalSymMatrix s(n);
  for (int i = 0; i < n; ++i) s.set(i, i, 1);
  return s;
}

RationalSymMatrix RationalSymMatrix::diagonal(const RationalVector& d) {
  RationalSymMatrix s(static_cast<int>(d.size()));
  for (std::size_t i = 0; i < d.size(); ++i) s.set(static_cast<int>(i), static_cast<int>(i), d[i]);
  return s;
}

void RationalSymMatrix::set(int i, int j, const Rational& value) {
  m_(i, j) = value;
  m_(j, i) = value;
}

RationalVector RationalSymMatrix::multiply(const RationalVector& x) const {
  if (static_cast<int>(x.size()) != order()) throw DomainError("multiply: dimension mismatch");
  RationalVector y(x.size(), Rational(0));
  for (int i = 0; i < order(); ++i) {
    for (int j = 0; j < order(); ++j) y[static_cast<std::size_t>(i)] += m_(i, j) * x[static_cast<std::size_t>(j)];
  }
  return y;
}

RationalSymMatrix RationalSymMatrix::permuted(const std::vector<int>& perm) const {
  RationalSymMatrix out(static_cast<int>(perm.size()));
  for (std::size_t p = 0; p < perm.size(); ++p) {
    for (std::size_t q = p; q < perm.size(); ++q) {
      out.set(static_cast<int>(p), static_cast<int>(q), m_(perm[p], perm[q]));
    }
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const RationalSymMatrix& m) {
  for (int i = 0; i < m.order(); ++i) {
    os << '[';
    for (int j = 0; j < m.order(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

}  // namespace inpp
