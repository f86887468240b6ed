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

#ifndef KRALL_EXCEPTIONAL_LAGUERRE_HPP
#define KRALL_EXCEPTIONAL_LAGUERRE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "classical.hpp"
#include "exceptional_meixner.hpp"
#include "krall_meixner.hpp"
#include "matrix.hpp"
#include "quadrature.hpp"
#include "ratfunc.hpp"
#include "sets.hpp"
#include "sturm.hpp"

namespace krall {

namespace detail {

// Rows (L_f^alpha)^{(j)}(x) for F1 and L_f^{alpha+j}(-x) for F2, j = 0..cols-1.
inline PolyMatrix laguerre_rows(const FiniteSet& f1, const FiniteSet& f2, const Rational& alpha, std::size_t cols) {
  PolyMatrix m(f1.size() + f2.size(), cols);
  std::size_t row = 0;
  for (long f : f1) {
    const Poly p = laguerre(f, alpha);
    for (std::size_t j = 0; j < cols; ++j) m(row, j) = derivative(p, static_cast<unsigned>(j));
    ++row;
  }
  for (long f : f2) {
    for (std::size_t j = 0; j < cols; ++j)
      m(row, j) = compose_linear(laguerre(f, alpha + static_cast<long>(j)), Rational(-1), Rational(0));
    ++row;
  }
  return m;
}

}  // namespace detail

/// Wronskian-type determinant Omega_F^alpha (k x k).
inline Poly omega_laguerre(const FiniteSet& f1, const FiniteSet& f2, const Rational& alpha) {
  const std::size_t k = f1.size() + f2.size();
  if (k == 0) return Poly(1);
  return determinant(detail::laguerre_rows(f1, f2, alpha, k));
}

struct ExcLaguerreFamily {
  Rational alpha_hat;
  FiniteSet f1, f2;
  long k1 = 0, k2 = 0, k = 0;
  long u = 0;
  // H for c_hat = alpha_hat + 1, when alpha_hat <= -2 is an integer and the
  // containment condition holds.
  std::optional<FiniteSet> h;
  Poly omega;
  std::vector<Poly> cofactors;
};

inline ExcLaguerreFamily exc_laguerre_family(const Rational& alpha_hat, const FiniteSet& f1, const FiniteSet& f2) {
  require_positive(f1, "F1");
  require_positive(f2, "F2");
  ExcLaguerreFamily fam;
  fam.alpha_hat = alpha_hat;
  fam.f1 = f1;
  fam.f2 = f2;
  fam.k1 = static_cast<long>(f1.size());
  fam.k2 = static_cast<long>(f2.size());
  fam.k = fam.k1 + fam.k2;
  fam.u = u_of_pair(f1, f2);
  if (is_integer(alpha_hat) && alpha_hat <= -2 && containment_holds(to_long(alpha_hat) + 1, f1, f2))
    fam.h = hset(-(to_long(alpha_hat) + 1), f1, f2);
  fam.omega = omega_laguerre(f1, f2, alpha_hat);
  if (fam.omega.is_zero()) throw DegeneracyError("Omega vanishes identically for F1=" + f1.str() + ", F2=" + f2.str());
  const std::size_t k = static_cast<std::size_t>(fam.k);
  const PolyMatrix rest = detail::laguerre_rows(f1, f2, alpha_hat, k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    PolyMatrix minor(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = 0, mc = 0; c <= k; ++c)
        if (c != j) minor(i, mc++) = rest(i, c);
    Poly d = k ? determinant(minor) : Poly(1);
    fam.cofactors.push_back(j % 2 ? -d : d);
  }
  return fam;
}

/// The determinant at any n >= u_F (zero when n - u_F is in F1).
inline Poly exc_laguerre_det(const ExcLaguerreFamily& fam, long n) {
  if (n < fam.u) throw IndexError("degree index below u_F");
  const Poly first = laguerre(n - fam.u, fam.alpha_hat);
  Poly acc;
  for (std::size_t j = 0; j < fam.cofactors.size(); ++j)
    acc += derivative(first, static_cast<unsigned>(j)) * fam.cofactors[j];
  return acc;
}

inline Poly exc_laguerre_poly(const ExcLaguerreFamily& fam, long n) {
  if (n < 0 || !in_sigma(fam.f1, fam.f2, n))
    throw IndexError(std::to_string(n) + " is not in sigma_F for F1=" + fam.f1.str() + ", F2=" + fam.f2.str());
  return exc_laguerre_det(fam, n);
}

inline Rational exc_laguerre_leading(const ExcLaguerreFamily& fam, long n) {
  const long nu = n - fam.u;
  if (nu < 0) throw IndexError("degree index below u_F");
  Rational num = Rational(vandermonde(fam.f1) * vandermonde(fam.f2));
  if ((nu + fam.f1.sum()) % 2) num = -num;
  for (long f : fam.f1) num *= Rational(f - nu);
  Rational den(factorial(static_cast<unsigned>(nu)));
  for (long f : fam.f1) den *= Rational(factorial(static_cast<unsigned>(f)));
  for (long f : fam.f2) den *= Rational(factorial(static_cast<unsigned>(f)));
  return num / den;
}

/// x p'' + a1 p' + a0 p.
struct SecondOrderDifferentialOp {
  Poly a2;
  RatFunc a1, a0;

  RatFunc apply(const Poly& p) const {
    return RatFunc(a2 * derivative(p, 2)) + a1 * RatFunc(derivative(p)) + a0 * RatFunc(p);
  }
};

inline SecondOrderDifferentialOp second_order_differential_op(const ExcLaguerreFamily& fam) {
  const Poly x = Poly::x();
  const Poly& om = fam.omega;
  const RatFunc r1(derivative(om), om), r2(derivative(om, 2), om);
  SecondOrderDifferentialOp op;
  op.a2 = x;
  op.a1 = RatFunc(Poly(Rational(fam.alpha_hat + fam.k + 1)) - x) - RatFunc(x * 2) * r1;
  op.a0 = RatFunc(Poly(-fam.k1 - fam.u)) + RatFunc(x - Poly(Rational(fam.alpha_hat + fam.k))) * r1 + RatFunc(x) * r2;
  return op;
}

inline RatFunc eigen_residual(const SecondOrderDifferentialOp& op, const Poly& p, const Rational& lambda) {
  return op.apply(p) - RatFunc(p * lambda);
}

/// L_{u_F} against (-1)^{C(s,2) + s k1} Omega_{F reduced}^{alpha + s}, s = s_{F1}.
struct LowestDegreeIdentity {
  long s = 0;
  FiniteSet g1, g2;
  Poly lowest, reduced;
  bool holds() const { return lowest == reduced; }
};

inline LowestDegreeIdentity lowest_degree_identity(const ExcLaguerreFamily& fam) {
  LowestDegreeIdentity out;
  out.s = s_of(fam.f1);
  out.g1 = downarrow(fam.f1);
  out.g2 = fam.f2;
  out.lowest = exc_laguerre_poly(fam, fam.u);
  Poly om = omega_laguerre(out.g1, out.g2, fam.alpha_hat + out.s);
  if ((binomial2(out.s) + out.s * fam.k1) % 2) om = -om;
  out.reduced = om;
  return out;
}

struct LaguerreLimitRow {
  int t = 0;
  Rational a;
  Rational error;  // max coefficient deviation from the signed limit
};

/// (a-1)^{n-(k1+1)k2} m_n^{a, alpha_hat+1; F}(x/(1-a)) against
/// (-1)^{C(k+1,2) + sum F2} L_n^{alpha_hat; F}(x) for a = 1 - 2^{-t}.
inline std::vector<LaguerreLimitRow> limit_from_meixner(const ExcLaguerreFamily& fam, long n, int steps) {
  const Poly target = exc_laguerre_poly(fam, n) * Rational((binomial2(fam.k + 1) + fam.f2.sum()) % 2 ? -1 : 1);
  std::vector<LaguerreLimitRow> out;
  for (int t = 1; t <= steps; ++t) {
    const Rational eps(1, 1L << t);
    const Rational a = 1 - eps;
    const ExcMeixnerFamily mf = exc_meixner_family(a, fam.alpha_hat + 1, fam.f1, fam.f2);
    Poly p = compose_linear(exc_meixner_poly(mf, n), Rational(1 / eps), Rational(0));
    p *= pow(Rational(-eps), n - (fam.k1 + 1) * fam.k2);
    LaguerreLimitRow row;
    row.t = t;
    row.a = a;
    row.error = max_abs_coeff(p - target);
    out.push_back(row);
  }
  return out;
}

struct PositivityEquivalence {
  bool admissible = false;       // Pi_H(x-h) >= 0 on N \ F1
  int nonnegative_roots = 0;     // distinct roots of Omega in [0, inf)
  bool agree() const { return admissible == (nonnegative_roots == 0); }
};

inline PositivityEquivalence positivity_equivalence_check(const ExcLaguerreFamily& fam) {
  if (!fam.h) throw NotRepresentableError("positivity equivalence needs an integer alpha_hat <= -2 and containment");
  PositivityEquivalence out;
  const auto km = krall_meixner_family(Rational(1, 2), to_long(fam.alpha_hat) + 1, fam.f1, fam.f2);
  out.admissible = admissible_meixner(km).measure_positive;
  out.nonnegative_roots = count_nonnegative_roots(fam.omega);
  return out;
}

/// Follows the reduction alpha -> alpha + s_F, F -> F reduced while the new
/// parameter stays <= -2, checking that admissibility is inherited, and
/// finally the Christoffel admissibility once the parameter is >= 0. Returns
/// false as soon as a step fails (including alpha + s_F = -1).
inline bool reduction_chain_admissible(const ExcLaguerreFamily& fam) {
  long alpha = to_long(fam.alpha_hat);
  FiniteSet f1 = fam.f1, f2 = fam.f2;
  for (;;) {
    const long s = s_of(f1);
    const long next = alpha + s;
    if (next == -1) return false;
    f1 = downarrow(f1);
    if (next >= 0) {
      if (f1.empty() && f2.empty()) return true;
      return christoffel_admissibility(Rational(1, 2), Rational(next + 1), f1, f2).measure_positive;
    }
    if (!containment_holds(next + 1, f1, f2)) return false;
    if (f1.empty() && f2.empty()) return true;
    if (!admissible_meixner(krall_meixner_family(Rational(1, 2), next + 1, f1, f2)).measure_positive) return false;
    alpha = next;
  }
}

inline ContinuousWeight laguerre_weight(const ExcLaguerreFamily& fam) {
  if (!is_integer(fam.alpha_hat) || fam.alpha_hat + fam.k < 0)
    throw InvalidWeightError("weight needs an integer alpha_hat with alpha_hat + k >= 0");
  return ContinuousWeight{to_long(fam.alpha_hat) + fam.k, fam.omega};
}

/// Closed-form squared norm prod_{h in H}(n - u_F - h).
inline Rational exc_laguerre_norm(const ExcLaguerreFamily& fam, long n) {
  if (!fam.h) throw NotRepresentableError("closed-form norm needs an integer alpha_hat <= -2 and containment");
  Rational r = 1;
  for (long hv : *fam.h) r *= Rational(n - fam.u - hv);
  return r;
}

struct LaguerreNormRow {
  long n = 0, m = 0;
  Real value;
  Real estimate;
  Rational expected;
  unsigned nodes = 0;
  bool ok = false;
};

/// Gauss-Laguerre inner products for n <= m in sigma_F up to n_max. The
/// diagonal must match the closed form within `tol` relative, the rest must
/// be below `tol` times the geometric mean of the two norms. Nodes double
/// from 128 until the doubling estimate drops below tol / 10 (up to 1024).
inline std::vector<LaguerreNormRow> exc_laguerre_norm_check(const ExcLaguerreFamily& fam, long n_max,
                                                            double tol = 1e-9) {
  const ContinuousWeight w = laguerre_weight(fam);
  validate_weight(w);
  init_real_precision();
  const std::vector<long> idx = sigma_of_pair(fam.f1, fam.f2, n_max);
  std::vector<Poly> ps;
  std::vector<Rational> norms;
  for (long n : idx) {
    ps.push_back(exc_laguerre_poly(fam, n));
    norms.push_back(exc_laguerre_norm(fam, n));
  }
  std::vector<LaguerreNormRow> out;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i; j < idx.size(); ++j) {
      LaguerreNormRow row;
      row.n = idx[i];
      row.m = idx[j];
      row.expected = i == j ? norms[i] : Rational(0);
      const Real scale = i == j ? Real(abs(to_real(norms[i]))) : Real(sqrt(abs(to_real(norms[i]) * to_real(norms[j]))));
      QuadratureValue q;
      for (unsigned nodes = 128; nodes <= 1024; nodes *= 2) {
        q = gauss_laguerre_inner(w, ps[i], ps[j], nodes);
        if (q.estimate < tol / 10 * scale) break;
      }
      row.value = q.value;
      row.estimate = q.estimate;
      row.nodes = q.nodes;
      row.ok = Real(abs(q.value - to_real(row.expected))) < tol * scale;
      out.push_back(row);
    }
  return out;
}

}  // namespace krall

#endif  // KRALL_EXCEPTIONAL_LAGUERRE_HPP
