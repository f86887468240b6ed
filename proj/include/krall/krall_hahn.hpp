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

#ifndef KRALL_KRALL_HAHN_HPP
#define KRALL_KRALL_HAHN_HPP

#include <array>
#include <string>
#include <vector>

#include "classical.hpp"
#include "matrix.hpp"
#include "measure.hpp"
#include "ratfunc.hpp"
#include "sets.hpp"

namespace krall {

/// theta_n^u = n (n + u + 1).
template <class T>
T hahn_theta(const T& n, const Rational& u) {
  return n * (n + T(u + 1));
}

/// psi_r^u(x) = prod_{h=1}^{r-1} prod_{i=1}^{h} (2x + u - i - h).
inline Poly hahn_psi(long r, const Rational& u) {
  Poly p(Rational(1));
  for (long h = 1; h <= r - 1; ++h)
    for (long i = 1; i <= h; ++i) p *= Poly::linear(2, u - i - h);
  return p;
}

/// phi_{r,r1}^a(x) = prod_{i=1}^{r1-1} (x + a - r + 1)_{r1-i}.
inline Poly hahn_phi(long r, long r1, const Rational& a) {
  Poly p(Rational(1));
  const Poly base = Poly::linear(1, a - r + 1);
  for (long i = 1; i <= r1 - 1; ++i) p *= rising<Poly>(base, static_cast<unsigned>(r1 - i));
  return p;
}

namespace detail {

// xi^h_{X, j} with X = nu + shift, as a rational function of nu.
inline RatFunc xi_ratfunc(int h, const Rational& shift_by, long j, const Rational& a, const Rational& b,
                          const Rational& n) {
  const Poly x = Poly::linear(1, shift_by - j);  // X - j
  const unsigned uj = static_cast<unsigned>(j);
  const Rational sgn_j = j % 2 ? Rational(-1) : Rational(1);
  switch (h) {
    case 1:
      return RatFunc(rising<Poly>(x - Poly(n), uj) * rising<Poly>(x + Poly(Rational(a + 1)), uj) * sgn_j,
                     rising<Poly>(x + Poly(Rational(a + b + n + 2)), uj));
    case 2:
      return RatFunc(rising<Poly>(x + Poly(Rational(b + 1)), uj) * rising<Poly>(x - Poly(n), uj),
                     rising<Poly>(x + Poly(Rational(a + b + n + 2)), uj));
    case 3:
      return RatFunc(rising<Poly>(x + Poly(Rational(a + 1)), uj));
    case 4:
      return RatFunc(rising<Poly>(x + Poly(Rational(b + 1)), uj) * sgn_j);
    default:
      throw DimensionError("xi index must be 1..4");
  }
}

inline long max_or_minus_one(const FiniteSet& f) { return f.empty() ? -1 : f.max(); }

}  // namespace detail

/// xi^h_{x, j} at a rational point.
inline Rational hahn_xi(int h, const Rational& x, long j, const Rational& a, const Rational& b, const Rational& n) {
  if (j < 0) throw IndexError("xi needs j >= 0");
  // A vanishing Pochhammer denominator is an error even when it would cancel.
  if (h <= 2 && pochhammer(x - j + a + b + n + 2, static_cast<unsigned>(j)) == 0)
    throw DegenerateParameterError("xi denominator vanishes");
  return detail::xi_ratfunc(h, Rational(0), j, a, b, n)(x);
}

enum class HahnKind {
  LowerLimit,  // a_hat in {-1,-2,...}, b_hat off the lattice
  UpperLimit,  // the mirror image: b_hat on the lattice
  BothLimits,  // both on the lattice
};

struct KrallHahnFamily {
  Rational a_hat, b_hat;
  long big_n = 0;
  std::array<FiniteSet, 4> f;  // F1..F4
  HahnKind kind = HahnKind::LowerLimit;
  Rational a, b;
  long n_tilde = 0;
  std::array<FiniteSet, 4> g;  // G_i = I(F_i)
  std::array<long, 4> ms{};
  long m = 0;
  // Signed first-row cofactors divided by the normalizer, and the normalized
  // Omega, all as reduced rational functions of the continuous index nu.
  std::vector<RatFunc> cofactors;
  RatFunc omega;
  /// Last index of the orthogonal family: N~ + m3 + m4.
  long last_index() const { return n_tilde + ms[2] + ms[3]; }
};

namespace detail {

inline RatFunc hahn_block_entry(const KrallHahnFamily& fam, int h, long g, long j, long off) {
  static const std::array<std::array<int, 2>, 4> swap = {{{1, 0}, {0, 1}, {1, 0}, {0, 1}}};
  const Rational nt(fam.n_tilde);
  const Rational p1 = swap[h - 1][0] ? Rational(-fam.b) : Rational(-fam.a);
  const Rational p2 = swap[h - 1][0] ? Rational(-fam.a) : Rational(-fam.b);
  const Rational p3 = h <= 2 ? Rational(fam.a + fam.b + nt) : Rational(-2 - nt);
  const Poly r = dual_hahn(g, HahnParams{p1, p2, p3});
  // theta_{-nu + j - 1 - off}^{-a-b} as a polynomial in nu.
  const Poly t = Poly::linear(-1, Rational(j - 1 - off));
  const Poly th = hahn_theta<Poly>(t, Rational(-fam.a - fam.b));
  const RatFunc xi = xi_ratfunc(h, Rational(-j + off), fam.m - j + off, fam.a, fam.b, nt);
  return xi * RatFunc(compose(r, th));
}

inline Matrix<RatFunc> hahn_block(const KrallHahnFamily& fam, long off, long cols) {
  Matrix<RatFunc> rows(static_cast<std::size_t>(fam.m), static_cast<std::size_t>(cols));
  std::size_t row = 0;
  for (int h = 1; h <= 4; ++h)
    for (long g : fam.g[h - 1]) {
      for (long j = 1; j <= cols; ++j) rows(row, static_cast<std::size_t>(j - 1)) = hahn_block_entry(fam, h, g, j, off);
      ++row;
    }
  return rows;
}

}  // namespace detail

inline KrallHahnFamily krall_hahn_family(const Rational& a_hat, const Rational& b_hat, long big_n, const FiniteSet& f1,
                                         const FiniteSet& f2, const FiniteSet& f3, const FiniteSet& f4) {
  for (const FiniteSet* s : {&f1, &f2, &f3, &f4}) require_nonnegative(*s, "F");
  if (big_n < 1) throw SchemaError("Krall-Hahn family needs N >= 1");
  KrallHahnFamily fam;
  fam.a_hat = a_hat;
  fam.b_hat = b_hat;
  fam.big_n = big_n;
  fam.f = {f1, f2, f3, f4};
  const bool a_lat = in_negative_lattice(a_hat), b_lat = in_negative_lattice(b_hat);
  if (!a_lat && !b_lat) throw SchemaError("Krall-Hahn limit family needs a_hat or b_hat in {-1,-2,...}");
  fam.kind = a_lat && b_lat ? HahnKind::BothLimits : (a_lat ? HahnKind::LowerLimit : HahnKind::UpperLimit);
  if (a_lat) require_containment(to_long(a_hat) + 1, f4, f2);
  if (b_lat) require_containment(to_long(b_hat) + 1, f3, f1);
  if (2 * detail::max_or_minus_one(f3) >= big_n || 2 * detail::max_or_minus_one(f4) >= big_n)
    throw SchemaError("Krall-Hahn family needs max F3, max F4 < N/2");
  using detail::max_or_minus_one;
  fam.a = a_hat + max_or_minus_one(f2) + max_or_minus_one(f4) + 2;
  fam.b = b_hat + max_or_minus_one(f1) + max_or_minus_one(f3) + 2;
  fam.n_tilde = big_n - max_or_minus_one(f3) - max_or_minus_one(f4) - 2;
  if (fam.n_tilde < 0) throw SchemaError("N is too small for the given sets");
  if (Rational(fam.n_tilde) < -2 - fam.a - fam.b) throw SchemaError("N~ must satisfy N~ >= -2-a-b");
  for (int i = 0; i < 4; ++i) {
    fam.g[i] = involution_I(fam.f[i]);
    fam.ms[i] = static_cast<long>(fam.g[i].size());
  }
  fam.m = fam.ms[0] + fam.ms[1] + fam.ms[2] + fam.ms[3];

  const Poly norm = hahn_phi(fam.m, fam.ms[0] + fam.ms[2], fam.a) * hahn_phi(fam.m, fam.ms[1] + fam.ms[3], fam.b) *
                    hahn_psi(fam.m, fam.a + fam.b);
  const std::size_t m = static_cast<std::size_t>(fam.m);
  const Matrix<RatFunc> rows = detail::hahn_block(fam, 1, fam.m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    Matrix<RatFunc> minor(m, m);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t c = 0, mc = 0; c <= m; ++c)
        if (c != j) minor(i, mc++) = rows(i, c);
    RatFunc d = m ? determinant(minor) : RatFunc(1);
    if (j % 2) d = -d;
    fam.cofactors.push_back(d / RatFunc(norm));
  }
  fam.omega = m ? determinant(detail::hahn_block(fam, 0, fam.m)) / RatFunc(norm) : RatFunc(1);
  return fam;
}

namespace detail {

inline Rational eval_in_nu(const RatFunc& r, long n) {
  if (r.den()(Rational(n)) == 0)
    throw DegeneracyError("normalized determinant has a pole at n = " + std::to_string(n));
  return r(Rational(n));
}

}  // namespace detail

inline Rational omega_hahn(const KrallHahnFamily& fam, long n) { return detail::eval_in_nu(fam.omega, n); }

/// q_n^{a,b,N~;F}: first row (-1)^{j-1} h_{n+1-j}^{a,b,N~}(x - max F4 - 1).
inline Poly krall_hahn_poly(const KrallHahnFamily& fam, long n) {
  if (n < 0) throw IndexError("negative degree index");
  const HahnParams hp{fam.a, fam.b, Rational(fam.n_tilde)};
  const long sh = -detail::max_or_minus_one(fam.f[3]) - 1;
  Poly acc;
  for (long j = 0; j <= fam.m; ++j) {
    if (n - j < 0) break;
    const Rational c = detail::eval_in_nu(fam.cofactors[static_cast<std::size_t>(j)], n);
    if (c == 0) continue;
    Poly h = shift(hahn(n - j, hp), sh) * c;
    if (j % 2) h = -h;
    acc += h;
  }
  return acc;
}

/// Masses of the limit measure on {0..N}, zero at deleted points.
inline DiscreteMeasure nu_hahn(const KrallHahnFamily& fam) {
  const long big_n = fam.big_n;
  std::vector<Rational> masses(static_cast<std::size_t>(big_n + 1), Rational(0));
  FiniteSet excluded;
  // One-sided mass in the orientation where a_hat is on the lattice.
  auto one_sided = [&](const Rational& ah, const Rational& bh, const FiniteSet& fb1, const FiniteSet& fa2,
                       const FiniteSet& fb3, const FiniteSet& fa4, long x) {
    const FiniteSet h = hset(-to_long(ah) - 1, fa4, fa2);
    Rational r = 1;
    for (long hv : h) r *= Rational(x - hv);
    for (long f : fb1) r *= big_n - x + bh + 1 + f;
    for (long f : fb3) r *= Rational(big_n - f - x);
    // Gamma(N-x+b_hat+1)/(N-x)! divided by |Gamma(b_hat+1)|.
    const unsigned e = static_cast<unsigned>(big_n - x);
    return Rational(gamma_sign(bh + 1) * r * pochhammer(bh + 1, e) / Rational(factorial(e)));
  };
  switch (fam.kind) {
    case HahnKind::LowerLimit:
      excluded = fam.f[3];
      for (long x = 0; x <= big_n; ++x)
        if (!excluded.contains(x))
          masses[x] = one_sided(fam.a_hat, fam.b_hat, fam.f[0], fam.f[1], fam.f[2], fam.f[3], x);
      break;
    case HahnKind::UpperLimit:
      excluded = reflect(big_n, fam.f[2]);
      for (long x = 0; x <= big_n; ++x)
        if (!excluded.contains(x))
          masses[x] = one_sided(fam.b_hat, fam.a_hat, fam.f[1], fam.f[0], fam.f[3], fam.f[2], big_n - x);
      break;
    case HahnKind::BothLimits: {
      excluded = set_union(fam.f[3], reflect(big_n, fam.f[2]));
      const FiniteSet hp = hset(-to_long(fam.a_hat) - 1, fam.f[3], fam.f[1]);
      const FiniteSet hi = hset(-to_long(fam.b_hat) - 1, fam.f[2], fam.f[0]);
      for (long x = 0; x <= big_n; ++x) {
        if (excluded.contains(x)) continue;
        Rational r = 1;
        for (long hv : hp) r *= Rational(x - hv);
        for (long hv : hi) r *= Rational(big_n - x - hv);
        masses[x] = r;
      }
      break;
    }
  }
  return DiscreteMeasure(TableMass{std::move(masses)}, excluded);
}

inline bool measure_positive(const DiscreteMeasure& mu) {
  for (long x = 0; x <= mu.last_point(); ++x)
    if (!mu.excluded().contains(x) && mu.mass(x) <= 0) return false;
  return true;
}

struct HahnGram {
  std::vector<Poly> polys;
  Matrix<Rational> gram;
  bool diagonal = false;
  bool positive_diagonal = false;
  bool degrees_exact = false;  // deg q_n = n throughout
};

/// Exact Gram matrix of q_0..q_{n_max} under the limit measure; n_max is
/// capped at the last index of the family.
inline HahnGram hahn_orthogonality_check(const KrallHahnFamily& fam, long n_max) {
  n_max = std::min(n_max, fam.last_index());
  const DiscreteMeasure mu = nu_hahn(fam);
  HahnGram out;
  out.degrees_exact = true;
  for (long n = 0; n <= n_max; ++n) {
    out.polys.push_back(krall_hahn_poly(fam, n));
    if (out.polys.back().degree() != n) out.degrees_exact = false;
  }
  const std::size_t s = out.polys.size();
  out.gram = Matrix<Rational>(s, s);
  out.diagonal = true;
  out.positive_diagonal = true;
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = i; j < s; ++j) {
      Rational v = inner_product_exact(mu, out.polys[i], out.polys[j]);
      out.gram(i, j) = v;
      out.gram(j, i) = v;
      if (i != j && v != 0) out.diagonal = false;
      if (i == j && v <= 0) out.positive_diagonal = false;
    }
  return out;
}

/// Hahn masses (c+1)_x (d+1)_{N-x} / (x! (N-x)!) with the points of A and
/// N - B removed; the reference for the deleted-mass families.
inline DiscreteMeasure hahn_deleted_measure(long c, const Rational& d, long big_n, const FiniteSet& a,
                                            const FiniteSet& b) {
  FiniteSet excluded = set_union(a, reflect(big_n, b));
  std::vector<Rational> masses(static_cast<std::size_t>(big_n + 1), Rational(0));
  for (long x = 0; x <= big_n; ++x) {
    if (excluded.contains(x)) continue;
    const unsigned ux = static_cast<unsigned>(x), uy = static_cast<unsigned>(big_n - x);
    masses[x] = pochhammer(Rational(c + 1), ux) * pochhammer(d + 1, uy) /
                (Rational(factorial(ux)) * Rational(factorial(uy)));
  }
  return DiscreteMeasure(TableMass{std::move(masses)}, excluded);
}

/// Hahn measure with parameters (c, d) and the points of A deleted, as a
/// lower-limit family: a_hat = -max A - 1, b_hat = d, F4 = A, F1 = F3 = {}.
inline KrallHahnFamily hahn_deleted_family(long c, const Rational& d, long big_n, const FiniteSet& a) {
  if (c < 0) throw SchemaError("deleted-mass family needs c >= 0");
  if (in_negative_lattice(d)) throw SchemaError("deleted-mass family needs d outside {-1,-2,...}");
  const DeletionPair p = deletion_pair(c + 1, a);
  return krall_hahn_family(Rational(-a.max() - 1), d, big_n, {}, p.f2, {}, a);
}

/// Both ends: A deleted near 0 and N - B near N (c, d nonnegative integers).
inline KrallHahnFamily hahn_deleted_family(long c, long d, long big_n, const FiniteSet& a, const FiniteSet& b) {
  if (c < 0 || d < 0) throw SchemaError("deleted-mass family needs c, d >= 0");
  const DeletionPair pa = deletion_pair(c + 1, a);
  const DeletionPair pb = deletion_pair(d + 1, b);
  return krall_hahn_family(Rational(-a.max() - 1), Rational(-b.max() - 1), big_n, pb.f2, pa.f2, b, a);
}

/// Banded operator half-width 1 + sum_i (sum F_i - C(k_i, 2)).
inline long hahn_operator_order(const KrallHahnFamily& fam) {
  long r = 1;
  for (const auto& s : fam.f) r += s.sum() - binomial2(static_cast<long>(s.size()));
  return r;
}

}  // namespace krall

#endif  // KRALL_KRALL_HAHN_HPP
