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

#ifndef KRALL_QUADRATURE_HPP
#define KRALL_QUADRATURE_HPP

#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "sturm.hpp"

namespace krall {

using Real = boost::multiprecision::mpfr_float;

/// Working precision in bits, from KRALL_PRECISION_BITS (default 256).
inline unsigned precision_bits() {
  static const unsigned bits = [] {
    const char* env = std::getenv("KRALL_PRECISION_BITS");
    if (!env) return 256u;
    const long v = std::strtol(env, nullptr, 10);
    return v >= 64 && v <= 65536 ? static_cast<unsigned>(v) : 256u;
  }();
  return bits;
}

inline void init_real_precision() {
  static std::once_flag once;
  std::call_once(once, [] {
    Real::default_precision(static_cast<unsigned>(std::ceil(precision_bits() * 0.30103)) + 1);
  });
}

inline Real to_real(const Rational& q) {
  init_real_precision();
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

inline Real eval_real(const Poly& p, const Real& x) {
  Real acc = 0;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * x + to_real(*it);
  return acc;
}

/// Nodes and weights of the n-point Gauss-Laguerre rule for e^{-x} on [0, inf).
struct GaussLaguerreRule {
  std::vector<Real> nodes;
  std::vector<Real> weights;
};

namespace detail {

inline GaussLaguerreRule compute_gauss_laguerre(unsigned n) {
  init_real_precision();
  GaussLaguerreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const Real eps = boost::multiprecision::pow(Real(2), -static_cast<int>(precision_bits()) + 16);
  Real z = 0;
  for (unsigned i = 0; i < n; ++i) {
    // Initial guesses follow the classic asymptotic recipe for alpha = 0.
    if (i == 0) {
      z = Real(3) / (1 + 2.4 * n);
    } else if (i == 1) {
      z += Real(15) / (1 + 2.5 * n);
    } else {
      const double ai = i - 1;
      z += Real((1 + 2.55 * ai) / (1.9 * ai)) * (z - rule.nodes[i - 2]);
    }
    Real p1, p2, pp;
    for (int it = 0; it < 200; ++it) {
      p1 = 1;
      p2 = 0;
      for (unsigned j = 1; j <= n; ++j) {
        Real p3 = p2;
        p2 = p1;
        p1 = ((2 * j - 1 - z) * p2 - (j - 1) * p3) / j;
      }
      pp = (n * p1 - n * p2) / z;
      Real dz = p1 / pp;
      z -= dz;
      if (boost::multiprecision::abs(dz) <= eps * boost::multiprecision::abs(z)) break;
    }
    rule.nodes[i] = z;
    rule.weights[i] = -1 / (pp * n * p2);
  }
  Real total = 0;
  for (unsigned i = 0; i < n; ++i) {
    if (rule.weights[i] <= 0 || (i > 0 && rule.nodes[i] <= rule.nodes[i - 1]))
      throw Error("Gauss-Laguerre node computation did not separate the roots");
    total += rule.weights[i];
  }
  if (boost::multiprecision::abs(total - 1) > Real(1e-30)) throw Error("Gauss-Laguerre weights do not sum to 1");
  return rule;
}

}  // namespace detail

/// Cached rule; tables are computed once per size and shared read-only.
inline std::shared_ptr<const GaussLaguerreRule> gauss_laguerre(unsigned n) {
  static std::shared_mutex mutex;
  static std::map<unsigned, std::shared_ptr<const GaussLaguerreRule>> cache;
  {
    std::shared_lock lock(mutex);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  std::unique_lock lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto rule = std::make_shared<const GaussLaguerreRule>(detail::compute_gauss_laguerre(n));
  cache.emplace(n, rule);
  return rule;
}

/// Weight x^exponent e^{-x} / omega(x)^2 on [0, inf).
struct ContinuousWeight {
  long exponent = 0;
  Poly omega;
};

/// Throws InvalidWeightError unless omega has no root in [0, inf).
inline void validate_weight(const ContinuousWeight& w) {
  if (w.exponent < 0) throw InvalidWeightError("negative power of x in the weight");
  if (w.omega.is_zero()) throw InvalidWeightError("zero denominator polynomial");
  if (count_nonnegative_roots(w.omega) != 0)
    throw InvalidWeightError("weight denominator " + to_string(w.omega) + " vanishes on [0, inf)");
}

struct QuadratureValue {
  Real value;
  Real estimate;  // |Q_n - Q_2n|
  unsigned nodes = 0;
};

inline Real gauss_laguerre_sum(const ContinuousWeight& w, const Poly& p, const Poly& q, unsigned n) {
  auto rule = gauss_laguerre(n);
  Real s = 0;
  for (unsigned i = 0; i < n; ++i) {
    const Real& x = rule->nodes[i];
    Real om = eval_real(w.omega, x);
    Real f = eval_real(p, x) * eval_real(q, x) / (om * om);
    if (w.exponent) f *= boost::multiprecision::pow(x, static_cast<int>(w.exponent));
    s += rule->weights[i] * f;
  }
  return s;
}

/// Integral of p q w over [0, inf) by n-point Gauss-Laguerre, with the
/// difference to the 2n-point rule as convergence estimate.
inline QuadratureValue gauss_laguerre_inner(const ContinuousWeight& w, const Poly& p, const Poly& q,
                                            unsigned nodes = 128) {
  validate_weight(w);
  init_real_precision();
  QuadratureValue out;
  out.nodes = nodes;
  if (p.is_zero() || q.is_zero()) {
    out.value = 0;
    out.estimate = 0;
    return out;
  }
  out.value = gauss_laguerre_sum(w, p, q, nodes);
  out.estimate = boost::multiprecision::abs(out.value - gauss_laguerre_sum(w, p, q, 2 * nodes));
  return out;
}

inline std::string to_string(const Real& r, int digits = 20) { return r.str(digits, std::ios_base::scientific); }

}  // namespace krall

#endif  // KRALL_QUADRATURE_HPP
