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

#ifndef KRALL_KRALL_MEIXNER_HPP
#define KRALL_KRALL_MEIXNER_HPP

#include <string>
#include <vector>

#include "classical.hpp"
#include "matrix.hpp"
#include "sets.hpp"
#include "sturm.hpp"

namespace krall {

/**
 * Casorati determinant of Meixner polynomials: k x k with rows
 * m_f^{a,c}(x+j) for f in F1 and m_f^{1/a,c}(x+j)/a^j for f in F2,
 * j = 0..k-1, each set in increasing order.
 */
inline Poly omega_meixner(const FiniteSet& f1, const FiniteSet& f2, const Rational& a, const Rational& c) {
  const std::size_t k = f1.size() + f2.size();
  if (k == 0) return Poly(1);
  PolyMatrix m(k, k);
  std::size_t row = 0;
  for (long f : f1) {
    const Poly p = meixner(f, a, c);
    for (std::size_t j = 0; j < k; ++j) m(row, j) = shift(p, static_cast<long>(j));
    ++row;
  }
  const Rational inv = 1 / a;
  for (long f : f2) {
    const Poly p = meixner(f, inv, c);
    for (std::size_t j = 0; j < k; ++j) m(row, j) = shift(p, static_cast<long>(j)) * pow(inv, static_cast<long>(j));
    ++row;
  }
  return determinant(m);
}

inline Rational product_over(const FiniteSet& roots, const Rational& x) {
  Rational r = 1;
  for (long h : roots) r *= x - h;
  return r;
}

/// Limit-measure mass prod_{h in H}(x-h) a^x at x not in F1, H = H(-c_hat, F1, F2).
inline Rational nu_mass(const Rational& a, long c_hat, const FiniteSet& f1, const FiniteSet& f2, long x) {
  if (x < 0 || f1.contains(x)) return 0;
  return product_over(hset(-c_hat, f1, f2), Rational(x)) * pow(a, x);
}

/// Christoffel-Meixner mass prod_{F1}(x-f) prod_{F2}(x+d+f) Gamma(x+d) a^x / x!
/// divided by |Gamma(d)|, so the sign is that of the unnormalized mass.
inline Rational christoffel_mass(const Rational& a, const Rational& d, const FiniteSet& u1, const FiniteSet& u2, long x) {
  if (x < 0) return 0;
  const Rational xr(x);
  Rational r = product_over(u1, xr);
  for (long f : u2) r *= xr + d + f;
  const unsigned ux = static_cast<unsigned>(x);
  return gamma_sign(d) * r * pochhammer(d, ux) * pow(a, x) / Rational(factorial(ux));
}

inline DiscreteMeasure christoffel_meixner_measure(const Rational& a, const Rational& d, const FiniteSet& f1,
                                                   const FiniteSet& f2) {
  if (is_nonpositive_integer(d))
    throw DegenerateParameterError("Christoffel-Meixner measure needs d outside {0,-1,...}; use the limit measure");
  Poly w(Rational(1));
  for (long f : f1) w *= Poly::linear(1, Rational(-f));
  for (long f : f2) w *= Poly::linear(1, Rational(d + f));
  if (is_integer(d)) {
    const long di = to_long(d);
    w *= binomial(Poly::linear(1, Rational(di - 1)), static_cast<unsigned>(di - 1));
    return DiscreteMeasure(GeometricMass{w, a});
  }
  return DiscreteMeasure(PochhammerMass{w, d, a});
}

/// Pointwise check of the canonicalization identity
///   nu_{c_hat;F}(x) = a^e * scale * target(x - shift),  x = 0..x_max.
/// Returns the first failing x, or -1.
inline long normalize_pair_mismatch(const Rational& a, long c_hat, const FiniteSet& f1, const FiniteSet& f2,
                                    long x_max) {
  const NormalizedPair np = normalize_pair(c_hat, f1, f2);
  for (long x = 0; x <= x_max; ++x) {
    const Rational lhs = nu_mass(a, c_hat, f1, f2, x);
    const long y = x - np.shift;
    Rational target = 0;
    if (np.kind == NormalizedPair::Kind::Nu)
      target = nu_mass(a, np.param, np.u1, np.u2, y);
    else
      target = christoffel_mass(a, Rational(np.param), np.u1, np.u2, y);
    if (lhs != pow(a, np.a_exponent) * Rational(np.scale) * target) return x;
  }
  return -1;
}

/// A Krall-Meixner family: limit measure with c_hat <= 0 and the derived
/// data used by the determinantal construction.
struct KrallMeixnerFamily {
  Rational a;
  long c_hat = -1;
  FiniteSet f1, f2;
  long c = 0;  // c_hat + max F1 + max F2 + 2
  FiniteSet g1, g2;
  FiniteSet h;
  long k = 0;
  long m = 0;
  Poly omega;  // Omega_F^{a, c_hat}
};

inline KrallMeixnerFamily krall_meixner_family(const Rational& a, long c_hat, const FiniteSet& f1, const FiniteSet& f2) {
  require_nonnegative(f1, "F1");
  require_nonnegative(f2, "F2");
  if (f1.empty() && f2.empty()) throw SchemaError("F1 and F2 cannot both be empty");
  if (c_hat > 0) throw SchemaError("Krall-Meixner limit family needs c_hat <= 0");
  if (a == 0 || a == 1) throw DegenerateParameterError("a must differ from 0 and 1");
  require_containment(c_hat, f1, f2);
  KrallMeixnerFamily fam;
  fam.a = a;
  fam.c_hat = c_hat;
  fam.f1 = f1;
  fam.f2 = f2;
  fam.c = c_hat + f1.max() + f2.max() + 2;
  fam.g1 = involution_I(f1);
  fam.g2 = involution_I(f2);
  fam.h = hset(-c_hat, f1, f2);
  fam.k = static_cast<long>(f1.size() + f2.size());
  fam.m = static_cast<long>(fam.g1.size() + fam.g2.size());
  fam.omega = omega_meixner(f1, f2, a, Rational(c_hat));
  return fam;
}

/// Band radius 1 + sum_i (sum F_i - C(k_i, 2)) of the higher order operator.
inline long meixner_operator_order(const KrallMeixnerFamily& fam) {
  return 1 + fam.f1.sum() - binomial2(static_cast<long>(fam.f1.size())) + fam.f2.sum() -
         binomial2(static_cast<long>(fam.f2.size()));
}

inline Poly nu_weight(const KrallMeixnerFamily& fam) {
  Poly w(Rational(1));
  for (long h : fam.h) w *= Poly::linear(1, Rational(-h));
  return w;
}

/// nu: mass prod_{h in H}(x-h) a^x on N \ F1.
inline DiscreteMeasure nu_measure(const KrallMeixnerFamily& fam) {
  return DiscreteMeasure(GeometricMass{nu_weight(fam), fam.a}, fam.f1);
}

/**
 * q_n as the (m+1) x (m+1) determinant with first row
 * m^{a,c}_{n-j}(x - max F1 - 1)/(a-1)^j and scalar rows
 * m_g^{a,2-c}(-n+j-1) (g in G1), m_g^{1/a,2-c}(-n+j-1)/a^j (g in G2), j = 0..m.
 * Throws DegeneracyError when the degree drops below n.
 */
inline Poly krall_meixner_poly(const KrallMeixnerFamily& fam, long n) {
  if (n < 0) throw IndexError("negative degree");
  const std::size_t cols = static_cast<std::size_t>(fam.m + 1);
  const Rational c(fam.c), c2(2 - fam.c), inv = 1 / fam.a, am1 = fam.a - 1;
  std::vector<Poly> first(cols);
  for (std::size_t j = 0; j < cols; ++j)
    first[j] = shift(meixner(n - static_cast<long>(j), fam.a, c), -fam.f1.max() - 1) / pow(am1, static_cast<long>(j));
  Matrix<Rational> rest(cols - 1, cols);
  std::size_t row = 0;
  for (long g : fam.g1) {
    for (std::size_t j = 0; j < cols; ++j) rest(row, j) = meixner_value(g, fam.a, c2, Rational(-n + static_cast<long>(j) - 1));
    ++row;
  }
  for (long g : fam.g2) {
    for (std::size_t j = 0; j < cols; ++j)
      rest(row, j) = meixner_value(g, inv, c2, Rational(-n + static_cast<long>(j) - 1)) * pow(inv, static_cast<long>(j));
    ++row;
  }
  Poly q = expand_first_row(first, rest);
  if (q.degree() != n)
    throw DegeneracyError("Krall-Meixner q_" + std::to_string(n) + " has degree " + std::to_string(q.degree()));
  return q;
}

/// Sign condition prod_{h in H}(x-h) >= 0 on N \ F1 and the Omega condition
/// Omega(n) Omega(n+1) > 0, decided exactly.
struct MeixnerAdmissibility {
  bool measure_positive = true;
  long measure_witness = -1;  // support point with a negative mass
  bool omega_positive = true;
  long omega_witness = -1;  // first n with Omega(n) Omega(n+1) <= 0
  bool agree() const { return measure_positive == omega_positive; }
};

inline MeixnerAdmissibility admissible_meixner(const KrallMeixnerFamily& fam, long n_check = 30) {
  MeixnerAdmissibility out;
  const long top = fam.h.empty() ? 0 : std::max(fam.h.max(), 0L) + 1;
  for (long x = 0; x <= top; ++x) {
    if (fam.f1.contains(x)) continue;
    if (sgn(product_over(fam.h, Rational(x))) < 0) {
      out.measure_positive = false;
      out.measure_witness = x;
      break;
    }
  }
  for (long n = 0; n <= n_check; ++n) {
    if (sgn(fam.omega(Rational(n))) * sgn(fam.omega(Rational(n + 1))) <= 0) {
      out.omega_positive = false;
      out.omega_witness = n;
      break;
    }
  }
  // Past n_check the sign is frozen unless Omega still has a real root there.
  if (out.omega_positive && count_roots_above(fam.omega, Rational(n_check)) > 0) {
    out.omega_positive = false;
    out.omega_witness = n_check + 1;
  }
  return out;
}

/// The Christoffel-measure analogue for d outside {0,-1,...}: positivity of
/// rho^F_{a,d} versus Gamma(n+d+k) Omega^{a,d}(n) Omega^{a,d}(n+1) > 0.
struct ChristoffelAdmissibility {
  bool measure_positive = true;
  bool omega_positive = true;
  bool agree() const { return measure_positive == omega_positive; }
};

inline ChristoffelAdmissibility christoffel_admissibility(const Rational& a, const Rational& d, const FiniteSet& f1,
                                                          const FiniteSet& f2, long n_check = 30) {
  if (is_nonpositive_integer(d)) throw DegenerateParameterError("d must lie outside {0,-1,...}");
  ChristoffelAdmissibility out;
  // Beyond every root of the Christoffel factors and of (d)_x, all factor
  // signs are frozen, so a finite scan decides positivity.
  Rational far = Rational(f1.max()) + 1;
  if (-d + f2.max() + 1 > far) far = -d + f2.max() + 1;
  if (-d + 1 > far) far = -d + 1;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), far.get_num_mpz_t(), far.get_den_mpz_t());
  const long top = fl.get_si() + 50;
  for (long x = 0; x <= top; ++x)
    if (sgn(christoffel_mass(a, d, f1, f2, x)) < 0) {
      out.measure_positive = false;
      break;
    }
  const long k = static_cast<long>(f1.size() + f2.size());
  const Poly om = omega_meixner(f1, f2, a, d);
  for (long n = 0; n <= n_check; ++n) {
    const int s = gamma_sign(Rational(d + n + k)) * sgn(om(Rational(n))) * sgn(om(Rational(n + 1)));
    if (s <= 0) {
      out.omega_positive = false;
      break;
    }
  }
  if (out.omega_positive && (count_roots_above(om, Rational(n_check)) > 0 || d + n_check + k <= 0))
    out.omega_positive = false;
  return out;
}

/// The contradiction behind "nu is never a translated Christoffel transform":
/// -c_hat lies in F1 but not in H. True when that premise holds.
inline bool translated_christoffel_excluded(const KrallMeixnerFamily& fam) {
  if (fam.c_hat >= 0) return false;
  return fam.f1.contains(-fam.c_hat) && !fam.h.contains(-fam.c_hat);
}

struct NormLawRow {
  long n = 0;
  Rational norm;
  Rational reference;
  Rational ratio;
};

/**
 * <q_n, q_n>_nu against a^n (n+k+c_hat-1)! Omega(n) Omega(n+1) / ((1-a)^{2n+c_hat} n!)
 * for n = 0..n_max. The family satisfies the norm law when every ratio is the
 * same positive rational.
 */
inline std::vector<NormLawRow> norm_law(const KrallMeixnerFamily& fam, long n_max) {
  const auto nu = nu_measure(fam);
  std::vector<NormLawRow> out;
  for (long n = 0; n <= n_max; ++n) {
    const Poly q = krall_meixner_poly(fam, n);
    NormLawRow row;
    row.n = n;
    row.norm = inner_product_exact(nu, q, q);
    const long f = n + fam.k + fam.c_hat - 1;
    if (f < 0) throw DegenerateParameterError("norm law needs c_hat + k >= 1");
    row.reference = pow(fam.a, n) * Rational(factorial(static_cast<unsigned>(f))) * fam.omega(Rational(n)) *
                    fam.omega(Rational(n + 1)) /
                    (pow(Rational(1 - fam.a), 2 * n + fam.c_hat) * Rational(factorial(static_cast<unsigned>(n))));
    if (row.reference == 0) throw DegeneracyError("Omega vanishes at n = " + std::to_string(n));
    row.ratio = row.norm / row.reference;
    out.push_back(row);
  }
  return out;
}

/// Gamma(y + e) / Gamma(1 + e) for integer y and rational e in (0, 1).
inline Rational gamma_ratio(long y, const Rational& e) {
  Rational r = 1;
  if (y >= 1) {
    for (long i = 1; i <= y - 1; ++i) r *= e + i;
    return r;
  }
  for (long i = y; i <= 0; ++i) r *= e + i;
  return 1 / r;
}

/// Christoffel mass at parameter c_hat + eps, divided by Gamma(1 + eps).
inline Rational perturbed_mass(const KrallMeixnerFamily& fam, const Rational& eps, long x) {
  const Rational xr(x);
  Rational r = product_over(fam.f1, xr);
  if (r == 0) return 0;
  for (long f : fam.f2) r *= xr + fam.c_hat + eps + f;
  return r * pow(fam.a, x) * gamma_ratio(x + fam.c_hat, eps) / Rational(factorial(static_cast<unsigned>(x)));
}

struct LimitStep {
  int t = 0;
  Rational eps;
  std::vector<Rational> diffs;  // |rho_s(x) - nu(x)|, x = 0..x_max
  Rational max_diff;
  bool positive = true;  // all perturbed masses >= 0 on 0..x_max
};

/// Masses of the Christoffel measure at c_hat + 2^{-t} against nu, t = 1..steps.
inline std::vector<LimitStep> limit_experiment(const KrallMeixnerFamily& fam, int steps, long x_max = 20) {
  std::vector<LimitStep> out;
  for (int t = 1; t <= steps; ++t) {
    LimitStep s;
    s.t = t;
    s.eps = Rational(Integer(1), Integer(1) << t);
    s.max_diff = 0;
    for (long x = 0; x <= x_max; ++x) {
      const Rational rho = perturbed_mass(fam, s.eps, x);
      if (sgn(rho) < 0) s.positive = false;
      Rational d = abs(rho - nu_mass(fam.a, fam.c_hat, fam.f1, fam.f2, x));
      if (d > s.max_diff) s.max_diff = d;
      s.diffs.push_back(d);
    }
    out.push_back(s);
  }
  return out;
}

}  // namespace krall

#endif  // KRALL_KRALL_MEIXNER_HPP
