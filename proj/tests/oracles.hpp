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

// Independent reference computations shared by the unit suites. Everything
// here is written directly from the defining sums, without going through the
// library's polynomial builders, so agreement is a genuine cross-check.

#ifndef KRALL_TESTS_ORACLES_HPP
#define KRALL_TESTS_ORACLES_HPP

#include <functional>
#include <vector>

#include "krall/polynomial.hpp"

namespace oracle {

using krall::Poly;
using krall::Rational;

inline Rational falling_binomial(const Rational& top, long k) {
  Rational num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= top - i;
    den *= i + 1;
  }
  return num / den;
}

inline Rational rising(const Rational& q, long n) {
  Rational r = 1;
  for (long i = 0; i < n; ++i) r *= q + i;
  return r;
}

inline Rational fact(long n) {
  Rational r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Rational power(const Rational& b, long e) {
  Rational r = 1;
  if (e >= 0)
    for (long i = 0; i < e; ++i) r *= b;
  else
    for (long i = 0; i < -e; ++i) r /= b;
  return r;
}

/// Term-by-term Meixner double sum at a rational point.
inline Rational meixner_at(long n, const Rational& a, const Rational& c, const Rational& x) {
  if (n < 0) return 0;
  Rational s = 0;
  for (long j = 0; j <= n; ++j)
    s += power(a, -j) * falling_binomial(x, j) * falling_binomial(-x - c, n - j);
  return s * power(a, n) / power(1 - a, n);
}

inline Rational laguerre_at(long n, const Rational& alpha, const Rational& x) {
  Rational s = 0;
  for (long j = 0; j <= n; ++j) s += power(-x, j) / fact(j) * falling_binomial(alpha + n, n - j);
  return s;
}

/// Lagrange interpolation through (xs[i], ys[i]).
inline Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  Poly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis(Rational(1));
    Rational den = 1;
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      basis *= Poly::linear(1, Rational(-xs[j]));
      den *= xs[i] - xs[j];
    }
    out += basis * Rational(ys[i] / den);
  }
  return out;
}

/// Polynomial of degree <= d recovered from values at 0..d.
inline Poly from_values(long d, const std::function<Rational(const Rational&)>& f) {
  std::vector<Rational> xs, ys;
  for (long i = 0; i <= d; ++i) {
    xs.emplace_back(i);
    ys.push_back(f(Rational(i)));
  }
  return interpolate(xs, ys);
}

/// Coefficients of p in a basis with deg basis[i] = i (triangular solve).
inline std::vector<Rational> expand_in_basis(Poly p, const std::vector<Poly>& basis) {
  std::vector<Rational> c(basis.size(), Rational(0));
  for (int d = p.degree(); d >= 0; --d) {
    if (static_cast<std::size_t>(d) >= basis.size()) return {};
    c[d] = p.coeff(d) / basis[d].leading();
    p -= basis[d] * c[d];
  }
  return c;
}

/// Cofactor expansion along the first row; reference for small determinants.
template <class T>
T cofactor(const std::vector<std::vector<T>>& m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  if (n == 1) return m[0][0];
  T acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<T>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<T> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      sub.push_back(row);
    }
    T term = m[0][j] * cofactor(sub);
    if (j % 2)
      acc -= term;
    else
      acc += term;
  }
  return acc;
}

}  // namespace oracle

#endif  // KRALL_TESTS_ORACLES_HPP
