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

#ifndef KRALL_MEASURE_HPP
#define KRALL_MEASURE_HPP

#include <string>
#include <variant>
#include <vector>

#include "ratfunc.hpp"
#include "sets.hpp"

namespace krall {

/// Exact sum over x >= 0 of p(x) a^x for |a| < 1, from the Newton expansion
/// p = sum_j (Delta^j p)(0) C(x, j) and sum_x C(x, j) a^x = a^j / (1-a)^(j+1).
inline Rational geometric_poly_sum(const Poly& p, const Rational& a) {
  if (abs(a) >= 1) throw DivergentSumError("geometric sum needs |a| < 1, got a = " + to_string(a));
  if (p.is_zero()) return 0;
  const int d = p.degree();
  std::vector<Rational> diff(d + 1);
  for (int i = 0; i <= d; ++i) diff[i] = p(Rational(i));
  Rational total = 0;
  const Rational one_minus = 1 - a;
  Rational apow = 1;
  Rational denom = one_minus;
  for (int j = 0; j <= d; ++j) {
    total += diff[0] * apow / denom;
    for (int i = 0; i < d - j; ++i) diff[i] = diff[i + 1] - diff[i];
    apow *= a;
    denom *= one_minus;
  }
  return total;
}

/// Mass w(x) a^x with polynomial w.
struct GeometricMass {
  Poly weight;
  Rational a;
};

/// Mass r(x) a^x with a rational function r.
struct RationalMass {
  RatFunc weight;
  Rational a;
};

/// Mass w(x) (c)_x a^x / x! (evaluated pointwise only).
struct PochhammerMass {
  Poly weight;
  Rational c;
  Rational a;
};

/// Explicit masses at x = 0..N.
struct TableMass {
  std::vector<Rational> masses;
};

/// Discrete measure on N \ A (or {0..N} \ A for a table), with a closed-form
/// mass. Points of `excluded` carry zero mass.
class DiscreteMeasure {
 public:
  using Form = std::variant<GeometricMass, RationalMass, PochhammerMass, TableMass>;

  DiscreteMeasure(Form form, FiniteSet excluded = {}) : form_(std::move(form)), excluded_(std::move(excluded)) {}

  const Form& form() const { return form_; }
  const FiniteSet& excluded() const { return excluded_; }
  bool finite() const { return std::holds_alternative<TableMass>(form_); }
  /// Largest support point of a finite measure.
  long last_point() const {
    if (!finite()) throw Error("last_point of an infinite measure");
    return static_cast<long>(std::get<TableMass>(form_).masses.size()) - 1;
  }

  Rational mass(long x) const {
    if (x < 0 || excluded_.contains(x)) return 0;
    return std::visit(
        [x](const auto& f) -> Rational {
          using F = std::decay_t<decltype(f)>;
          const Rational xr(x);
          if constexpr (std::is_same_v<F, GeometricMass>) {
            return f.weight(xr) * pow(f.a, x);
          } else if constexpr (std::is_same_v<F, RationalMass>) {
            return f.weight(xr) * pow(f.a, x);
          } else if constexpr (std::is_same_v<F, PochhammerMass>) {
            return Rational(f.weight(xr) * pochhammer(f.c, static_cast<unsigned>(x)) * pow(f.a, x) /
                            Rational(factorial(static_cast<unsigned>(x))));
          } else {
            return static_cast<std::size_t>(x) < f.masses.size() ? f.masses[x] : Rational(0);
          }
        },
        form_);
  }

 private:
  Form form_;
  FiniteSet excluded_;
};

/// Exact rational bound on a truncated infinite sum.
struct TailBound {
  long x0 = 0;
  Rational partial;
  Rational bound;
};

/// Exact <p, q> for polynomial-geometric or finite measures.
inline Rational inner_product_exact(const DiscreteMeasure& mu, const Poly& p, const Poly& q) {
  if (p.is_zero() || q.is_zero()) return 0;
  if (mu.finite()) {
    Rational s = 0;
    for (long x = 0; x <= mu.last_point(); ++x) {
      Rational m = mu.mass(x);
      if (sgn(m) == 0) continue;
      s += m * p(Rational(x)) * q(Rational(x));
    }
    return s;
  }
  const auto* g = std::get_if<GeometricMass>(&mu.form());
  if (!g) throw InvalidWeightError("exact inner product needs a polynomial-geometric or finite measure");
  Poly integrand = g->weight * p * q;
  Rational s = geometric_poly_sum(integrand, g->a);
  for (long x : mu.excluded())
    if (x >= 0) s -= integrand(Rational(x)) * pow(g->a, x);
  return s;
}

namespace detail {

inline Rational abs_coeff_sum(const Poly& p, int upto) {
  Rational s = 0;
  for (int i = 0; i <= upto && i <= p.degree(); ++i) s += abs(p.coeffs()[i]);
  return s;
}

inline RationalMass as_rational_mass(const DiscreteMeasure& mu) {
  if (const auto* g = std::get_if<GeometricMass>(&mu.form())) return {RatFunc(g->weight), g->a};
  if (const auto* r = std::get_if<RationalMass>(&mu.form())) return *r;
  throw InvalidWeightError("bounded inner product needs a geometric-type measure");
}

}  // namespace detail

/// Smallest integer above every real root of p (Cauchy bound).
inline long root_bound(const Poly& p) {
  if (p.degree() <= 0) return 0;
  Rational m = 0;
  for (int i = 0; i < p.degree(); ++i) {
    Rational r = abs(p.coeffs()[i] / p.leading());
    if (r > m) m = r;
  }
  Rational b = 1 + m;
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), b.get_num_mpz_t(), b.get_den_mpz_t());
  return c.get_si();
}

/// A truncation point that dominates the weight denominator in the sense of
/// inner_product_bounded (rho <= 1/2).
inline long default_truncation(const DiscreteMeasure& mu) {
  const Poly den = detail::as_rational_mass(mu).weight.den();
  if (den.degree() <= 0) return 10;
  const Rational r = 2 * detail::abs_coeff_sum(den, den.degree() - 1) / abs(den.leading());
  Integer c;
  mpz_cdiv_q(c.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return 10 + c.get_si();
}

/// Partial sum up to x0 plus an exact rational bound on |sum_{x > x0}|.
///
/// For x > x0 the weight numerator (times p q) is bounded by the sum of its
/// absolute coefficients times x^dN, and the denominator from below by
/// |lc| x^dD (1 - rho) with rho = sum_{i<dD} |d_i| / (|lc| x0). The remaining
/// series sum_{x > x0} x^E |a|^x is summed exactly.
inline TailBound inner_product_bounded(const DiscreteMeasure& mu, const Poly& p, const Poly& q, long x0) {
  TailBound out;
  out.x0 = x0;
  if (p.is_zero() || q.is_zero()) return out;
  if (x0 < 1) throw InvalidTruncationError("truncation point must be positive");
  const RationalMass rm = detail::as_rational_mass(mu);
  const Poly num = rm.weight.num() * p * q;
  const Poly& den = rm.weight.den();
  const int dd = den.degree();
  const Rational lc = abs(den.leading());
  const Rational rho = dd > 0 ? Rational(detail::abs_coeff_sum(den, dd - 1) / (lc * x0)) : Rational(0);
  if (rho >= 1)
    throw InvalidTruncationError("truncation point " + std::to_string(x0) +
                                 " does not dominate the weight denominator");
  Rational s = 0;
  Rational apow = 1;
  for (long x = 0; x <= x0; ++x, apow *= rm.a) {
    if (mu.excluded().contains(x)) continue;
    const Rational xr(x);
    const Rational dv = den(xr);
    if (sgn(dv) == 0) throw InvalidTruncationError("weight denominator vanishes at support point " + std::to_string(x));
    s += num(xr) / dv * apow;
  }
  out.partial = s;
  const Rational m = detail::abs_coeff_sum(num, num.degree()) / (lc * (1 - rho));
  const int e = std::max(num.degree() - dd, 0);
  const Rational absa = abs(rm.a);
  Poly shifted = Poly::linear(1, Rational(x0 + 1));
  Poly power(Rational(1));
  for (int i = 0; i < e; ++i) power *= shifted;
  out.bound = m * pow(absa, x0 + 1) * geometric_poly_sum(power, absa);
  return out;
}

/// Doubles the truncation point from `x0` until the bound drops below
/// `target`; gives up (returning the last attempt) after `max_doublings`.
inline TailBound inner_product_adaptive(const DiscreteMeasure& mu, const Poly& p, const Poly& q, long x0,
                                        const Rational& target, int max_doublings = 8) {
  TailBound t = inner_product_bounded(mu, p, q, x0);
  for (int i = 0; i < max_doublings && t.bound >= target; ++i) {
    x0 *= 2;
    t = inner_product_bounded(mu, p, q, x0);
  }
  return t;
}

}  // namespace krall

#endif  // KRALL_MEASURE_HPP
