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

#ifndef KRALL_OPERATOR_SOLVER_HPP
#define KRALL_OPERATOR_SOLVER_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "matrix.hpp"
#include "polynomial.hpp"

namespace krall {

/// (L p)(x) = sum_{l=-r}^{r} h_l(x) p(x + l).
struct BandedDifferenceOperator {
  long r = 0;
  std::vector<Poly> h;  // h[l + r]

  const Poly& coeff(long l) const { return h.at(static_cast<std::size_t>(l + r)); }
  /// Largest |l| with h_l nonzero; -1 for the zero operator.
  long band() const {
    for (long l = r; l >= 0; --l)
      if (!coeff(l).is_zero() || !coeff(-l).is_zero()) return l;
    return -1;
  }
  bool is_identity_multiple() const {
    for (long l = -r; l <= r; ++l) {
      if (l == 0 ? coeff(0).degree() > 0 : !coeff(l).is_zero()) return false;
    }
    return !coeff(0).is_zero();
  }
  static BandedDifferenceOperator identity(long r = 0) {
    BandedDifferenceOperator op{r, std::vector<Poly>(static_cast<std::size_t>(2 * r + 1))};
    op.h[static_cast<std::size_t>(r)] = Poly(1);
    return op;
  }
};

inline Poly apply_operator(const BandedDifferenceOperator& op, const Poly& p) {
  Poly out;
  for (long l = -op.r; l <= op.r; ++l)
    if (!op.coeff(l).is_zero()) out += op.coeff(l) * shift(p, l);
  return out;
}

/// Coefficient of x^n in L p_n over the leading coefficient of p_n.
inline Rational forced_eigenvalue(const BandedDifferenceOperator& op, const Poly& p) {
  if (p.is_zero()) throw DimensionError("eigenvalue of the zero polynomial");
  return apply_operator(op, p).coeff(static_cast<std::size_t>(p.degree())) / p.leading();
}

namespace detail {

inline void require_degree_ladder(const std::vector<Poly>& polys) {
  if (polys.empty()) throw DimensionError("empty polynomial family");
  for (std::size_t n = 0; n < polys.size(); ++n)
    if (polys[n].degree() != static_cast<int>(n))
      throw DimensionError("member " + std::to_string(n) + " has degree " + std::to_string(polys[n].degree()));
}

}  // namespace detail

/**
 * Basis of all operators with band radius r and deg h_l <= D having every
 * member of `polys` as an eigenfunction.
 *
 * Unknown u_{l,j} multiplies x^j Sh_l. The eigenvalue is eliminated as the
 * x^n coefficient of L p_n, so every other coefficient of L p_n - lambda_n p_n
 * gives one homogeneous linear equation.
 */
inline std::vector<BandedDifferenceOperator> find_operator(const std::vector<Poly>& polys, long r, long d) {
  detail::require_degree_ladder(polys);
  if (r < 0 || d < 0) throw DimensionError("band radius and degree cap must be nonnegative");
  const std::size_t width = static_cast<std::size_t>(d + 1);
  const std::size_t unknowns = static_cast<std::size_t>(2 * r + 1) * width;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t n = 0; n < polys.size(); ++n) {
    const Poly& p = polys[n];
    // images[u] = x^j p(x + l) for unknown u = (l + r) * width + j
    std::vector<Poly> images;
    images.reserve(unknowns);
    for (long l = -r; l <= r; ++l) {
      const Poly s = shift(p, l);
      for (long j = 0; j <= d; ++j) images.push_back(Poly::monomial(static_cast<std::size_t>(j)) * s);
    }
    for (std::size_t k = 0; k <= n + static_cast<std::size_t>(d); ++k) {
      if (k == n) continue;
      std::vector<Rational> row(unknowns);
      bool any = false;
      const Rational ratio = p.coeff(k) / p.leading();
      for (std::size_t u = 0; u < unknowns; ++u) {
        row[u] = images[u].coeff(k) - ratio * images[u].coeff(n);
        any = any || sgn(row[u]) != 0;
      }
      if (any) rows.push_back(std::move(row));
    }
  }
  Matrix<Rational> a(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t u = 0; u < unknowns; ++u) a(i, u) = rows[i][u];
  std::vector<BandedDifferenceOperator> out;
  for (const auto& v : nullspace(std::move(a))) {
    BandedDifferenceOperator op{r, {}};
    for (long l = -r; l <= r; ++l) {
      const auto base = v.begin() + static_cast<long>(static_cast<std::size_t>(l + r) * width);
      op.h.push_back(Poly(std::vector<Rational>(base, base + static_cast<long>(width))));
    }
    out.push_back(std::move(op));
  }
  return out;
}

/// A basis element of full band, preferring ones that are not a multiple
/// of the identity; nullopt when the space is identity-only.
inline std::optional<BandedDifferenceOperator> nontrivial_operator(const std::vector<BandedDifferenceOperator>& basis) {
  std::optional<BandedDifferenceOperator> best;
  for (const auto& op : basis) {
    if (op.is_identity_multiple()) continue;
    if (!best || op.band() > best->band()) best = op;
  }
  return best;
}

struct EigenRow {
  long n;
  Rational lambda;
  bool exact;
  bool fitted;
};

struct EigenReport {
  std::vector<EigenRow> rows;
  bool lambda_polynomial = false;  // lambda_n of degree <= 2r in n

  bool all_exact() const {
    return std::all_of(rows.begin(), rows.end(), [](const EigenRow& e) { return e.exact; });
  }
  long out_of_sample() const {
    return static_cast<long>(std::count_if(rows.begin(), rows.end(), [](const EigenRow& e) { return !e.fitted; }));
  }
};

/// Exact eigen-relation check; members with index >= n_fitted were not used
/// for fitting.
inline EigenReport eigencheck_operator(const BandedDifferenceOperator& op, const std::vector<Poly>& polys,
                                       long n_fitted) {
  EigenReport rep;
  for (std::size_t n = 0; n < polys.size(); ++n) {
    const Rational lam = forced_eigenvalue(op, polys[n]);
    const bool ok = apply_operator(op, polys[n]) == polys[n] * lam;
    rep.rows.push_back({static_cast<long>(n), lam, ok, static_cast<long>(n) < n_fitted});
  }
  // Interpolate through the first 2r+1 eigenvalues and test the rest.
  const std::size_t pts = static_cast<std::size_t>(2 * op.r + 1);
  if (rep.rows.size() > pts) {
    Poly lag;
    for (std::size_t i = 0; i < pts; ++i) {
      Poly basis(1);
      Rational den(1);
      for (std::size_t j = 0; j < pts; ++j) {
        if (j == i) continue;
        basis *= Poly::linear(Rational(1), Rational(-static_cast<long>(j)));
        den *= Rational(static_cast<long>(i) - static_cast<long>(j));
      }
      lag += basis * Rational(rep.rows[i].lambda / den);
    }
    rep.lambda_polynomial = true;
    for (const auto& e : rep.rows)
      if (lag(Rational(e.n)) != e.lambda) rep.lambda_polynomial = false;
  }
  return rep;
}

struct OperatorSearch {
  long r = 0;
  long d = 0;
  long fitted = 0;
  std::vector<BandedDifferenceOperator> basis;
  std::optional<BandedDifferenceOperator> op;  // nontrivial, full band when found
  EigenReport check;
  std::vector<long> ladder;  // degree caps tried

  std::size_t dimension() const { return basis.size(); }
  bool found() const { return op.has_value() && check.all_exact(); }
};

/// Default degree cap 2r + max(deg Omega, 2).
inline long default_degree_cap(long r, int omega_degree) { return 2 * r + std::max(omega_degree, 2); }

/**
 * Fit on the first `n_fit` members, verify on all of them. When no
 * nontrivial operator survives the out-of-sample check, the degree cap is
 * raised by 2 up to `retries` times.
 */
inline OperatorSearch search_operator(const std::vector<Poly>& polys, long r, long d, long n_fit, int retries = 2) {
  if (n_fit < 1 || n_fit > static_cast<long>(polys.size())) throw DimensionError("fit size out of range");
  const std::vector<Poly> fit(polys.begin(), polys.begin() + n_fit);
  OperatorSearch s;
  for (int t = 0; t <= retries; ++t) {
    s = OperatorSearch{r, d + 2 * t, n_fit, {}, std::nullopt, {}, s.ladder};
    s.ladder.push_back(s.d);
    s.basis = find_operator(fit, r, s.d);
    s.op = nontrivial_operator(s.basis);
    if (!s.op) continue;
    s.check = eigencheck_operator(*s.op, polys, n_fit);
    if (s.check.all_exact()) break;
  }
  return s;
}

inline std::string to_string(const BandedDifferenceOperator& op) {
  std::string s;
  for (long l = -op.r; l <= op.r; ++l) {
    if (op.coeff(l).is_zero()) continue;
    if (!s.empty()) s += "\n";
    s += "h[" + std::to_string(l) + "] = " + to_string(op.coeff(l));
  }
  return s.empty() ? "0" : s;
}

}  // namespace krall

#endif  // KRALL_OPERATOR_SOLVER_HPP
