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

#ifndef KRALL_EXCEPTIONAL_MEIXNER_HPP
#define KRALL_EXCEPTIONAL_MEIXNER_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "classical.hpp"
#include "krall_meixner.hpp"
#include "matrix.hpp"
#include "measure.hpp"
#include "ratfunc.hpp"
#include "sets.hpp"

namespace krall {

/// Casorati-type determinant with columns x + offset for the given offsets.
inline Poly meixner_casorati(const FiniteSet& f1, const FiniteSet& f2, const Rational& a, const Rational& c,
                             const std::vector<long>& offsets) {
  const std::size_t k = f1.size() + f2.size();
  if (offsets.size() != k) throw DimensionError("casorati: need one column per row");
  if (k == 0) return Poly(1);
  PolyMatrix m(k, k);
  std::size_t row = 0;
  for (long f : f1) {
    const Poly p = meixner(f, a, c);
    for (std::size_t j = 0; j < k; ++j) m(row, j) = shift(p, offsets[j]);
    ++row;
  }
  const Rational inv = 1 / a;
  for (long f : f2) {
    const Poly p = meixner(f, inv, c);
    for (std::size_t j = 0; j < k; ++j) m(row, j) = shift(p, offsets[j]) * pow(inv, offsets[j]);
    ++row;
  }
  return determinant(m);
}

/// Lambda: columns x, ..., x+k-2, x+k (x+k-1 skipped). Zero for k = 0.
inline Poly lambda_det(const FiniteSet& f1, const FiniteSet& f2, const Rational& a, const Rational& c) {
  const long k = static_cast<long>(f1.size() + f2.size());
  if (k == 0) return Poly();
  std::vector<long> offs;
  for (long j = 0; j + 2 <= k; ++j) offs.push_back(j);
  offs.push_back(k);
  return meixner_casorati(f1, f2, a, c, offs);
}

struct ExcMeixnerFamily {
  Rational a;
  Rational c_hat;
  FiniteSet f1, f2;
  long k1 = 0, k2 = 0, k = 0;
  long u = 0;  // u_F
  // Only for integer c_hat <= -1 with the containment condition; the
  // determinants themselves make sense without it.
  std::optional<FiniteSet> h;
  Poly omega, lambda;
  // Signed cofactors of the first row of the (k+1) x (k+1) determinant.
  std::vector<Poly> cofactors;
};

inline ExcMeixnerFamily exc_meixner_family(const Rational& a, const Rational& c_hat, const FiniteSet& f1,
                                           const FiniteSet& f2) {
  detail::require_meixner_a(a);
  require_nonnegative(f1, "F1");
  require_nonnegative(f2, "F2");
  ExcMeixnerFamily fam;
  fam.a = a;
  fam.c_hat = c_hat;
  fam.f1 = f1;
  fam.f2 = f2;
  fam.k1 = static_cast<long>(f1.size());
  fam.k2 = static_cast<long>(f2.size());
  fam.k = fam.k1 + fam.k2;
  fam.u = u_of_pair(f1, f2);
  if (is_integer(c_hat) && c_hat <= -1 && containment_holds(to_long(c_hat), f1, f2))
    fam.h = hset(-to_long(c_hat), f1, f2);
  fam.omega = omega_meixner(f1, f2, a, c_hat);
  if (fam.omega.is_zero()) throw DegeneracyError("Omega vanishes identically for F1=" + f1.str() + ", F2=" + f2.str());
  fam.lambda = lambda_det(f1, f2, a, c_hat);

  const std::size_t k = static_cast<std::size_t>(fam.k);
  PolyMatrix rest(k, k + 1);
  std::size_t row = 0;
  for (long f : f1) {
    const Poly p = meixner(f, a, c_hat);
    for (std::size_t j = 0; j <= k; ++j) rest(row, j) = shift(p, static_cast<long>(j));
    ++row;
  }
  const Rational inv = 1 / a;
  for (long f : f2) {
    const Poly p = meixner(f, inv, c_hat);
    for (std::size_t j = 0; j <= k; ++j) rest(row, j) = shift(p, static_cast<long>(j)) * pow(inv, static_cast<long>(j));
    ++row;
  }
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

/// The determinant at any n >= u_F; it vanishes when n - u_F lies in F1.
inline Poly exc_meixner_det(const ExcMeixnerFamily& fam, long n) {
  if (n < fam.u) throw IndexError("degree index below u_F");
  const Poly first = meixner(n - fam.u, fam.a, fam.c_hat);
  Poly acc;
  for (std::size_t j = 0; j < fam.cofactors.size(); ++j)
    acc += shift(first, static_cast<long>(j)) * fam.cofactors[j];
  return acc;
}

inline Poly exc_meixner_poly(const ExcMeixnerFamily& fam, long n) {
  if (n < 0 || !in_sigma(fam.f1, fam.f2, n))
    throw IndexError(std::to_string(n) + " is not in sigma_F for F1=" + fam.f1.str() + ", F2=" + fam.f2.str());
  return exc_meixner_det(fam, n);
}

/// The alternative determinant whose rows carry shifted parameters c_hat + j.
inline Poly exc_meixner_poly_alt(const ExcMeixnerFamily& fam, long n) {
  if (n < 0 || !in_sigma(fam.f1, fam.f2, n)) throw IndexError(std::to_string(n) + " is not in sigma_F");
  const std::size_t k = static_cast<std::size_t>(fam.k);
  PolyMatrix m(k + 1, k + 1);
  const Rational ratio = (1 - fam.a) / fam.a;
  for (std::size_t j = 0; j <= k; ++j) {
    const long jl = static_cast<long>(j);
    const Rational cj = fam.c_hat + jl;
    m(0, j) = meixner(n - fam.u - jl, fam.a, cj);
    std::size_t row = 1;
    for (long f : fam.f1) m(row++, j) = meixner(f - jl, fam.a, cj);
    for (long f : fam.f2) m(row++, j) = meixner(f, 1 / fam.a, cj) * pow(ratio, jl);
  }
  return determinant(m);
}

/// Closed-form leading coefficient of m_n.
inline Rational exc_meixner_leading(const ExcMeixnerFamily& fam, long n) {
  const long k1 = fam.k1, k2 = fam.k2;
  const long nu = n - fam.u;
  if (nu < 0) throw IndexError("degree index below u_F");
  const long e = k2 * (k1 + 1);
  Rational num = Rational(e % 2 ? -1 : 1) * pow(Rational(fam.a - 1), e);
  num *= Rational(vandermonde(fam.f1) * vandermonde(fam.f2));
  for (long f : fam.f1) num *= Rational(f - nu);
  Rational den = pow(fam.a, k2 * k1 + binomial2(k2 + 1)) * Rational(factorial(static_cast<unsigned>(nu)));
  for (long f : fam.f1) den *= Rational(factorial(static_cast<unsigned>(f)));
  for (long f : fam.f2) den *= Rational(factorial(static_cast<unsigned>(f)));
  return num / den;
}

/// Sum_{l=-1..1} h_l(x) p(x + l).
struct SecondOrderDifferenceOp {
  RatFunc h_minus, h_zero, h_plus;

  RatFunc apply(const Poly& p) const {
    return h_minus * RatFunc(shift(p, -1L)) + h_zero * RatFunc(p) + h_plus * RatFunc(shift(p, 1L));
  }
};

inline SecondOrderDifferenceOp second_order_difference_op(const ExcMeixnerFamily& fam) {
  const Poly x = Poly::x();
  const Rational am1 = fam.a - 1;
  const Poly& om = fam.omega;
  const Poly om1 = shift(om, 1L);
  const Rational kc = fam.c_hat + fam.k;
  SecondOrderDifferenceOp op;
  op.h_minus = RatFunc(x * om1, om * am1);
  const RatFunc g(fam.a * (x + Poly(Rational(kc - 1))) * fam.lambda, om * am1);
  const Poly base = -((1 + fam.a) * (x + Poly(fam.k)) + Poly(Rational(fam.a * fam.c_hat))) / am1 + Poly(fam.u);
  op.h_zero = RatFunc(base) + forward_difference(g);
  op.h_plus = RatFunc(fam.a * (x + Poly(kc)) * om, om1 * am1);
  return op;
}

/// D p - lambda p, zero exactly when p is an eigenfunction.
inline RatFunc eigen_residual(const SecondOrderDifferenceOp& op, const Poly& p, const Rational& lambda) {
  return op.apply(p) - RatFunc(p * lambda);
}

/// Omega(n) Omega(n+1) > 0 for every n >= 0, decided exactly: beyond the
/// Cauchy root bound both factors have the sign of the leading coefficient.
/// Returns the first failing n, or -1.
inline long omega_sign_witness(const Poly& omega) {
  const long top = root_bound(omega) + 1;
  for (long n = 0; n <= top; ++n)
    if (sgn(omega(Rational(n))) * sgn(omega(Rational(n + 1))) <= 0) return n;
  return -1;
}

/// Mass a^x (x+1)_{c_hat+k-1} / (Omega(x) Omega(x+1)) on N.
inline DiscreteMeasure omega_measure(const ExcMeixnerFamily& fam) {
  if (!(fam.a > 0 && fam.a < 1)) throw InvalidWeightError("omega measure needs 0 < a < 1");
  if (!is_integer(fam.c_hat) || fam.c_hat + fam.k < 1)
    throw InvalidWeightError("omega measure needs an integer c_hat with c_hat + k >= 1");
  if (fam.c_hat <= -1 && !fam.h) require_containment(to_long(fam.c_hat), fam.f1, fam.f2);
  const long w = omega_sign_witness(fam.omega);
  if (w >= 0) throw PositivityError("Omega(n) Omega(n+1) <= 0 at n = " + std::to_string(w) + "; family not admissible");
  const unsigned e = static_cast<unsigned>(to_long(fam.c_hat) + fam.k - 1);
  const Poly poch = rising<Poly>(Poly::linear(1, 1), e);
  return DiscreteMeasure(RationalMass{RatFunc(poch, fam.omega * shift(fam.omega, 1L)), fam.a});
}

/// Closed-form squared norm of m_n under the omega measure (c_hat <= -1).
inline Rational exc_meixner_norm(const ExcMeixnerFamily& fam, long n) {
  if (!fam.h) {
    if (is_integer(fam.c_hat) && fam.c_hat <= -1) require_containment(to_long(fam.c_hat), fam.f1, fam.f2);
    throw DegenerateParameterError("closed-form norm needs an integer c_hat <= -1");
  }
  const long c = to_long(fam.c_hat);
  const long nu = n - fam.u;
  Rational r = pow(fam.a, nu + fam.k1 - 2 * fam.k) / pow(Rational(1 - fam.a), c + 2 * nu - fam.k);
  for (long hv : *fam.h) r *= Rational(nu - hv);
  return r;
}

struct ExcNormRow {
  long n = 0, m = 0;
  Rational partial;
  Rational bound;
  Rational expected;  // closed-form norm on the diagonal, 0 off it
  bool ok = false;
};

/// Truncated inner products <m_n, m_m> for n <= m in sigma_F up to n_max,
/// each compared with the expected value within the exact tail bound. The
/// truncation doubles until the bound is below 1e-20 (and below 2^-60
/// relative on the diagonal).
inline std::vector<ExcNormRow> exc_meixner_norm_check(const ExcMeixnerFamily& fam, long n_max, long x0 = 80) {
  const Rational tiny(mpz_class(1), mpz_class("100000000000000000000"));
  const DiscreteMeasure mu = omega_measure(fam);
  x0 = std::max(x0, default_truncation(mu));
  const std::vector<long> idx = sigma_of_pair(fam.f1, fam.f2, n_max);
  std::vector<Poly> ps;
  for (long n : idx) ps.push_back(exc_meixner_poly(fam, n));
  std::vector<ExcNormRow> out;
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = i; j < idx.size(); ++j) {
      ExcNormRow row;
      row.n = idx[i];
      row.m = idx[j];
      row.expected = i == j ? exc_meixner_norm(fam, idx[i]) : Rational(0);
      Rational target = tiny;
      if (i == j) target = std::min(target, Rational(abs(row.expected) / Rational(mpz_class(1) << 60)));
      TailBound t = inner_product_adaptive(mu, ps[i], ps[j], x0, target);
      row.partial = t.partial;
      row.bound = t.bound;
      row.ok = abs(t.partial - row.expected) <= t.bound;
      out.push_back(row);
    }
  return out;
}

struct ReductionRow {
  long n = 0;
  std::optional<Rational> ratio;  // m_n^F / m_n^U when proportional
};

struct ReductionReport {
  Rational d;
  FiniteSet u1, u2;
  std::vector<ReductionRow> rows;
  bool proportional() const {
    return std::all_of(rows.begin(), rows.end(), [](const ReductionRow& r) { return r.ratio.has_value(); });
  }
};

/// For 0 in F1 u F2 (or c_hat = 0): compare m_n^{a,c_hat;F} with
/// m_n^{a,d;U}, d = c_hat + s_1 + s_2, U_i = (F_i) reduced when 0 is in F_i.
inline ReductionReport reduction_identity_check(const Rational& a, const Rational& c_hat, const FiniteSet& f1,
                                                const FiniteSet& f2, long n_max) {
  ReductionReport rep;
  const bool z1 = f1.contains(0), z2 = f2.contains(0);
  rep.u1 = z1 ? downarrow(f1) : f1;
  rep.u2 = z2 ? downarrow(f2) : f2;
  rep.d = c_hat + (z1 ? s_of(f1) : 0) + (z2 ? s_of(f2) : 0);
  const ExcMeixnerFamily from = exc_meixner_family(a, c_hat, f1, f2);
  const ExcMeixnerFamily to = exc_meixner_family(a, rep.d, rep.u1, rep.u2);
  for (long n = std::max({0L, from.u, to.u}); n <= n_max; ++n) {
    if (!in_sigma(f1, f2, n) || !in_sigma(rep.u1, rep.u2, n)) continue;
    ReductionRow row;
    row.n = n;
    const Poly p = exc_meixner_poly(from, n), q = exc_meixner_poly(to, n);
    if (!q.is_zero() && !p.is_zero()) {
      const Rational r = p.leading() / q.leading();
      if (p == q * r) row.ratio = r;
    }
    rep.rows.push_back(row);
  }
  return rep;
}

}  // namespace krall

#endif  // KRALL_EXCEPTIONAL_MEIXNER_HPP
