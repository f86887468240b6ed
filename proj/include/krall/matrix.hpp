/*
   Copyright 2026 The krallpoly Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef KRALL_MATRIX_HPP
#define KRALL_MATRIX_HPP

#include <cstddef>
#include <type_traits>
#include <utility>
#include <vector>

#include "ratfunc.hpp"

namespace krall {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
      for (const auto& v : row) a_.push_back(v);
    }
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }

  /// Copy without row `r` and column `c`.
  Matrix minor(std::size_t r, std::size_t c) const {
    Matrix m(rows_ - 1, cols_ - 1);
    for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
      if (i == r) continue;
      for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
        if (j == c) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> a_;
};

using PolyMatrix = Matrix<Poly>;

namespace detail {

template <class T>
bool entry_is_zero(const T& v) {
  if constexpr (std::is_same_v<T, Rational>)
    return sgn(v) == 0;
  else
    return v.is_zero();
}

template <class T>
struct is_polynomial : std::false_type {};
template <class F>
struct is_polynomial<Polynomial<F>> : std::true_type {};

template <class T>
T cofactor_det(const Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  if (n == 2) return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  T acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (entry_is_zero(m(0, j))) continue;
    T term = m(0, j) * cofactor_det(m.minor(0, j));
    if (j % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

/// Fraction-free elimination; every division is exact in the ring.
template <class T>
T bareiss_det(Matrix<T> m) {
  const std::size_t n = m.rows();
  int sign = 1;
  T prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (entry_is_zero(m(k, k))) {
      std::size_t p = k + 1;
      while (p < n && entry_is_zero(m(p, k))) ++p;
      if (p == n) return T(0);
      m.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
        m(i, j) = exact_quotient(v, prev);
      }
      m(i, k) = T(0);
    }
    prev = m(k, k);
  }
  T d = m(n - 1, n - 1);
  return sign < 0 ? T(-d) : d;
}

/// Gaussian elimination over a field.
template <class T>
T gauss_det(Matrix<T> m) {
  const std::size_t n = m.rows();
  T det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && entry_is_zero(m(p, k))) ++p;
    if (p == n) return T(0);
    if (p != k) {
      m.swap_rows(k, p);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (entry_is_zero(m(i, k))) continue;
      T f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

}  // namespace detail

/// Exact determinant. Polynomial matrices use cofactor expansion below size 5
/// and Bareiss elimination above; scalar and rational-function matrices use
/// Gaussian elimination. The empty matrix has determinant 1.
template <class T>
T determinant(const Matrix<T>& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  if constexpr (detail::is_polynomial<T>::value) {
    if (m.rows() < 5) return detail::cofactor_det(m);
    return detail::bareiss_det(m);
  } else {
    return detail::gauss_det(m);
  }
}

/// Determinant of the square matrix whose first row is `first` and whose
/// remaining rows are `rest` (scalar entries), by expansion along the first
/// row. Used for Casorati-type determinants with a single polynomial row.
template <class T, class S>
T expand_first_row(const std::vector<T>& first, const Matrix<S>& rest) {
  const std::size_t n = first.size();
  if (rest.rows() + 1 != n || (rest.rows() && rest.cols() != n)) throw DimensionError("first-row expansion shape mismatch");
  T acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (detail::entry_is_zero(first[j])) continue;
    Matrix<S> minor(rest.rows(), n - 1);
    for (std::size_t i = 0; i < rest.rows(); ++i)
      for (std::size_t c = 0, mc = 0; c < n; ++c)
        if (c != j) minor(i, mc++) = rest(i, c);
    const S d = determinant(minor);
    if (detail::entry_is_zero(d)) continue;
    T term = first[j] * d;
    if (j % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

inline Matrix<Rational> evaluate(const PolyMatrix& m, const Rational& at) {
  Matrix<Rational> r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j)(at);
  return r;
}

/// Rescale a rational vector to coprime integers with a positive first
/// nonzero entry.
inline std::vector<Rational> primitive(std::vector<Rational> v) {
  Integer l(1), g(0);
  for (const auto& q : v) {
    if (sgn(q) == 0) continue;
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  }
  for (auto& q : v) q *= l;
  for (const auto& q : v) {
    if (sgn(q) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
  }
  if (g == 0) return v;
  int lead = 0;
  for (const auto& q : v)
    if (sgn(q) != 0) {
      lead = sgn(q);
      break;
    }
  Rational s(g);
  if (lead < 0) s = -s;
  for (auto& q : v) q /= s;
  return v;
}

/// Basis of {v : A v = 0} over Q, each vector in primitive integer form.
inline std::vector<std::vector<Rational>> nullspace(Matrix<Rational> a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a(p, c)) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(r, p);
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j) a(i, j) -= f * a(r, j);
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -a(i, free);
    basis.push_back(primitive(std::move(v)));
  }
  return basis;
}

}  // namespace krall

#endif  // KRALL_MATRIX_HPP
