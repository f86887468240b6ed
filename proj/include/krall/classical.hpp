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

#ifndef KRALL_CLASSICAL_HPP
#define KRALL_CLASSICAL_HPP

#include <vector>

#include "measure.hpp"
#include "polynomial.hpp"

namespace krall {

namespace detail {

inline void require_meixner_a(const Rational& a) {
  if (a == 0 || a == 1) throw DegenerateParameterError("Meixner parameter a must differ from 0 and 1");
}

inline Poly rising_poly(const Poly& base, unsigned n) { return rising<Poly>(base, n); }

}  // namespace detail

/**
 * Meixner polynomial
 *   m_n(x) = a^n/(1-a)^n sum_j a^{-j} C(x, j) C(-x-c, n-j).
 * Negative n gives the zero polynomial (convenient inside determinants).
 */
inline Poly meixner(long n, const Rational& a, const Rational& c) {
  detail::require_meixner_a(a);
  if (n < 0) return {};
  const Poly x = Poly::x();
  const Poly top = -x - Poly(c);
  Poly sum;
  const Rational inv = 1 / a;
  Rational w = 1;
  for (long j = 0; j <= n; ++j) {
    sum += binomial(x, static_cast<unsigned>(j)) * binomial(top, static_cast<unsigned>(n - j)) * w;
    w *= inv;
  }
  return sum * pow(Rational(a / (1 - a)), n);
}

/// m_n evaluated at a rational point, without building the polynomial.
inline Rational meixner_value(long n, const Rational& a, const Rational& c, const Rational& at) {
  detail::require_meixner_a(a);
  if (n < 0) return 0;
  const Rational top = -at - c;
  Rational sum = 0;
  const Rational inv = 1 / a;
  Rational w = 1;
  for (long j = 0; j <= n; ++j) {
    sum += binomial(at, static_cast<unsigned>(j)) * binomial(top, static_cast<unsigned>(n - j)) * w;
    w *= inv;
  }
  return sum * pow(Rational(a / (1 - a)), n);
}

/// Squared norm of m_n divided by Gamma(c) (1-a)^{-c}: a^n (c)_n / (n! (1-a)^{2n}).
inline Rational meixner_norm(long n, const Rational& a, const Rational& c) {
  if (is_nonpositive_integer(c)) throw DegenerateParameterError("Meixner norm needs c outside {0,-1,-2,...}");
  if (n < 0) throw IndexError("negative degree");
  const unsigned un = static_cast<unsigned>(n);
  return pow(a, n) * pochhammer(c, un) / (Rational(factorial(un)) * pow(Rational(1 - a), 2 * n));
}

/**
 * For c in {0,-1,...} and n >= 1-c the Meixner polynomial factors through a
 * genuine Meixner family with parameter 2-c. Returns whether
 *   m_n^{a,c}(x) prod_{j<=-c}(n-j) = prod_{j<=-c}(x-j) m_{n+c-1}^{a,2-c}(x+c-1).
 */
inline bool meixner_packing_check(long n, const Rational& a, long c) {
  if (c > 0) throw SchemaError("packing identity needs a nonpositive integer c");
  if (n < 1 - c) throw IndexError("packing identity needs n >= 1-c");
  Rational lhs_const = 1;
  Poly rhs_prod(Rational(1));
  for (long j = 0; j <= -c; ++j) {
    lhs_const *= Rational(n - j);
    rhs_prod *= Poly::linear(1, Rational(-j));
  }
  const Poly lhs = meixner(n, a, Rational(c)) * lhs_const;
  const Poly rhs = rhs_prod * shift(meixner(n + c - 1, a, Rational(2 - c)), c - 1);
  return lhs == rhs;
}

/// Laguerre polynomial sum_j (-x)^j / j! C(n+alpha, n-j); zero for n < 0.
inline Poly laguerre(long n, const Rational& alpha) {
  if (n < 0) return {};
  std::vector<Rational> c(n + 1);
  const Rational top = alpha + n;
  for (long j = 0; j <= n; ++j) {
    Rational t = binomial(top, static_cast<unsigned>(n - j)) / Rational(factorial(static_cast<unsigned>(j)));
    c[j] = (j % 2) ? Rational(-t) : t;
  }
  return Poly(std::move(c));
}

/// Hahn parameters; N is kept rational because the dual Hahn blocks use
/// values like -2-N.
struct HahnParams {
  Rational a;
  Rational b;
  Rational n;
};

inline bool in_negative_lattice(const Rational& q) { return is_integer(q) && sgn(q) < 0; }

/**
 * Hahn polynomial
 *   sum_j (-x)_j (N-n+1)_{n-j} (a+b+1)_{j+n} (a+j+1)_{n-j} / ((2+a+b+N)_n (n-j)! j!).
 */
inline Poly hahn(long n, const HahnParams& p) {
  if (in_negative_lattice(p.a + p.b + 1) || in_negative_lattice(p.a + p.b + p.n + 1))
    throw DegenerateParameterError("Hahn polynomials need a+b+1 and a+b+N+1 outside {-1,-2,...}");
  if (n < 0) return {};
  const unsigned un = static_cast<unsigned>(n);
  const Rational den = pochhammer(p.a + p.b + p.n + 2, un);
  if (den == 0) throw DegenerateParameterError("Hahn normalizing Pochhammer vanishes");
  const Poly mx = -Poly::x();
  Poly sum;
  for (unsigned j = 0; j <= un; ++j) {
    Rational c = pochhammer(p.n - n + 1, un - j) * pochhammer(p.a + p.b + 1, j + un) *
                 pochhammer(p.a + j + 1, un - j) /
                 (Rational(factorial(un - j)) * Rational(factorial(j)));
    if (c == 0) continue;
    sum += detail::rising_poly(mx, j) * c;
  }
  return sum / den;
}

/**
 * Monic dual Hahn polynomial
 *   R_n(x) = sum_j (-n)_j (-N+j)_{n-j} (a+j+1)_{n-j} / ((-1)^j j!) prod_{i<j} (x - i(i+a+b+1)).
 */
inline Poly dual_hahn(long n, const HahnParams& p) {
  if (n < 0) return {};
  const unsigned un = static_cast<unsigned>(n);
  Poly sum;
  Poly prod(Rational(1));
  for (unsigned j = 0; j <= un; ++j) {
    Rational c = pochhammer(Rational(-n), j) * pochhammer(-p.n + j, un - j) * pochhammer(p.a + j + 1, un - j) /
                 Rational(factorial(j));
    if (j % 2) c = -c;
    sum += prod * c;
    prod *= Poly::linear(1, -Rational(j) * (p.a + p.b + j + 1));
  }
  return sum;
}

/// Meixner measure with masses (c)_x a^x / x!, i.e. divided by Gamma(c).
inline DiscreteMeasure meixner_measure(const Rational& a, const Rational& c) {
  if (is_nonpositive_integer(c)) throw DegenerateParameterError("Meixner measure needs c outside {0,-1,-2,...}");
  if (!(sgn(a) != 0 && abs(a) < 1)) throw DegenerateParameterError("Meixner measure needs 0 < |a| < 1");
  if (is_integer(c)) {
    // (c)_x / x! = C(x+c-1, c-1) is a polynomial in x.
    const long ci = to_long(c);
    return DiscreteMeasure(GeometricMass{binomial(Poly::linear(1, Rational(ci - 1)), static_cast<unsigned>(ci - 1)), a});
  }
  return DiscreteMeasure(PochhammerMass{Poly(Rational(1)), c, a});
}

/// Hahn masses (a+1)_x (b+1)_{N-x} / (x! (N-x)!), i.e. divided by Gamma(a+1) Gamma(b+1).
inline DiscreteMeasure hahn_measure(const Rational& a, const Rational& b, long n) {
  if (n < 1) throw SchemaError("Hahn measure needs a positive integer N");
  auto in_range = [](const Rational& q, long lo, long hi) {
    return is_integer(q) && q >= lo && q <= hi;
  };
  if (in_range(a, -n, -1) || in_range(b, -n, -1) || in_range(a + b, -2 * n - 1, -1))
    throw DegenerateParameterError("Hahn measure parameter in the excluded lattice");
  std::vector<Rational> m(n + 1);
  for (long x = 0; x <= n; ++x)
    m[x] = pochhammer(a + 1, static_cast<unsigned>(x)) * pochhammer(b + 1, static_cast<unsigned>(n - x)) /
           (Rational(factorial(static_cast<unsigned>(x))) * Rational(factorial(static_cast<unsigned>(n - x))));
  return DiscreteMeasure(TableMass{std::move(m)});
}

inline bool hahn_measure_positive(const Rational& a, const Rational& b, long n) {
  return (a > -1 && b > -1) || (a < -n && b < -n);
}

inline Rational max_abs_coeff(const Poly& p) {
  Rational m = 0;
  for (const auto& c : p.coeffs())
    if (abs(c) > m) m = abs(c);
  return m;
}

/**
 * Meixner to Laguerre limit: for a = 1 - 2^{-t}, t = 1..steps, the largest
 * coefficient of (a-1)^n m_n^{a,c}(x/(1-a)) - L_n^{c-1}(x).
 */
inline std::vector<Rational> meixner_laguerre_limit_errors(long n, const Rational& c, int steps) {
  const Poly target = laguerre(n, c - 1);
  std::vector<Rational> out;
  for (int t = 1; t <= steps; ++t) {
    const Rational eps(Integer(1), Integer(1) << t);
    const Rational a = 1 - eps;
    Poly scaled = compose_linear(meixner(n, a, c), Rational(1 / eps), Rational(0)) * pow(Rational(-eps), n);
    out.push_back(max_abs_coeff(scaled - target));
  }
  return out;
}

}  // namespace krall

#endif  // KRALL_CLASSICAL_HPP
