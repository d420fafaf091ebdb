#pragma once

// Exact rational scalars and dense matrices. Determinants go through a
// fraction-free (Bareiss) elimination over the integers; kernels and ranks
// use the same fraction-free echelon form followed by rational
// back-substitution. There is no floating-point path.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <regex>
#include <string>
#include <utility>
#include <vector>

#include "detsr/error.hpp"

namespace detsr {

/// Arbitrary-precision rational, always canonical (lowest terms, positive
/// denominator) after every arithmetic operation of gmpxx.
using Rational = mpq_class;
using Integer = mpz_class;
using Vector = std::vector<Rational>;

inline std::string to_string(const Rational& x) { return x.get_str(); }

/// Parses a decimal integer or "p/q" fraction with q > 0.
inline Rational parse_rational(const std::string& text) {
  static const std::regex pattern(R"(^-?[0-9]+(/[0-9]+)?$)");
  if (!std::regex_match(text, pattern)) throw InputError("invalid scalar \"" + text + "\"");
  Rational value;
  if (value.set_str(text, 10) != 0) throw InputError("invalid scalar \"" + text + "\"");
  if (value.get_den() == 0) throw InputError("zero denominator in \"" + text + "\"");
  value.canonicalize();
  return value;
}

inline bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw DomainError("Matrix::from_rows: ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  /// Submatrix made of the first `count` rows.
  Matrix top_rows(std::size_t count) const {
    Matrix out(count, cols_);
    std::copy(data_.begin(), data_.begin() + static_cast<std::ptrdiff_t>(count * cols_),
              out.data_.begin());
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

template <typename T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product: shape mismatch");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (sgn(a(i, k)) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

inline Vector operator*(const ExactMatrix& a, const Vector& x) {
  if (a.cols() != x.size()) throw DomainError("matrix-vector product: shape mismatch");
  Vector out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (sgn(a(i, j)) != 0 && sgn(x[j]) != 0) out[i] += a(i, j) * x[j];
  return out;
}

namespace detail {

struct Echelon {
  std::vector<std::size_t> pivot_cols;  // pivot of row k sits at (k, pivot_cols[k])
  int swap_sign = 1;
};

/// In-place fraction-free row echelon form. Pivot: first nonzero entry in
/// the column at or below the current row. Every division is exact.
inline Echelon fraction_free_echelon(IntegerMatrix& a) {
  Echelon info;
  Integer prev = 1;
  Integer tmp;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && sgn(a(piv, col)) == 0) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      a.swap_rows(piv, row);
      info.swap_sign = -info.swap_sign;
    }
    const Integer& p = a(row, col);
    for (std::size_t i = row + 1; i < a.rows(); ++i) {
      const Integer& lead = a(i, col);
      for (std::size_t j = col + 1; j < a.cols(); ++j) {
        mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), a(i, j).get_mpz_t());
        if (sgn(lead) != 0) mpz_submul(tmp.get_mpz_t(), lead.get_mpz_t(), a(row, j).get_mpz_t());
        mpz_divexact(a(i, j).get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, col) = 0;
    }
    prev = a(row, col);
    info.pivot_cols.push_back(col);
    ++row;
  }
  return info;
}

/// Multiplies every row by the lcm of its denominators.
inline IntegerMatrix clear_row_denominators(const ExactMatrix& m) {
  IntegerMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return out;
}

}  // namespace detail

/// Determinant of an integer matrix by Bareiss elimination.
inline Integer det_integer(IntegerMatrix a) {
  if (!a.square()) throw DomainError("det: matrix is not square");
  if (a.rows() == 0) return 1;
  const auto info = detail::fraction_free_echelon(a);
  if (info.pivot_cols.size() < a.rows()) return 0;
  const std::size_t n = a.rows() - 1;
  return info.swap_sign > 0 ? Integer(a(n, n)) : Integer(-a(n, n));
}

/// Exact determinant: denominators are cleared column by column, the
/// integer determinant is computed fraction-free, and the clearing factors
/// are divided back out.
inline Rational det_exact(const ExactMatrix& m) {
  if (!m.square()) throw DomainError("det: matrix is not square");
  IntegerMatrix a(m.rows(), m.cols());
  Integer scale = 1;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    Integer l = 1;
    for (std::size_t i = 0; i < m.rows(); ++i) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t i = 0; i < m.rows(); ++i) a(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  Rational result(det_integer(std::move(a)), scale);
  result.canonicalize();
  return result;
}

/// Number of linearly independent rows.
inline std::size_t rank_exact(const ExactMatrix& m) {
  auto a = detail::clear_row_denominators(m);
  return detail::fraction_free_echelon(a).pivot_cols.size();
}

/// Basis of the right null space, one primitive integer vector per free
/// column (ascending). Empty iff the columns are independent.
inline std::vector<Vector> kernel_basis(const ExactMatrix& m) {
  auto a = detail::clear_row_denominators(m);
  const auto info = detail::fraction_free_echelon(a);
  const auto& pivots = info.pivot_cols;

  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector x(m.cols());
    x[free] = 1;
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::size_t pc = pivots[k];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < m.cols(); ++j)
        if (sgn(x[j]) != 0 && sgn(a(k, j)) != 0) s += Rational(a(k, j)) * x[j];
      x[pc] = -s / Rational(a(k, pc));
    }
    // scale to a primitive integer vector
    Integer l = 1, g = 0;
    for (const auto& e : x) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), e.get_den_mpz_t());
    for (auto& e : x) {
      e *= l;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e.get_num_mpz_t());
    }
    for (auto& e : x) e /= g;
    basis.push_back(std::move(x));
  }
  return basis;
}

}  // namespace detsr
