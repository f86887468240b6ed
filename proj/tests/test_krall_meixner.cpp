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

#include <catch_amalgamated.hpp>

#include "krall/krall_meixner.hpp"
#include "oracles.hpp"

using namespace krall;

namespace {

const Rational half(1, 2);

std::vector<FiniteSet> subsets(long hi) {
  std::vector<FiniteSet> out;
  for (long mask = 0; mask < (1L << hi); ++mask) {
    std::vector<long> v;
    for (long i = 0; i < hi; ++i)
      if (mask & (1L << i)) v.push_back(i + 1);
    out.emplace_back(v);
  }
  return out;
}

// Omega from pointwise Casorati determinants and interpolation.
Poly omega_oracle(const FiniteSet& f1, const FiniteSet& f2, const Rational& a, const Rational& c, long deg) {
  return oracle::from_values(deg, [&](const Rational& x) {
    std::vector<std::vector<Rational>> m;
    const long k = static_cast<long>(f1.size() + f2.size());
    for (long f : f1) {
      std::vector<Rational> row;
      for (long j = 0; j < k; ++j) row.push_back(oracle::meixner_at(f, a, c, x + j));
      m.push_back(row);
    }
    for (long f : f2) {
      std::vector<Rational> row;
      for (long j = 0; j < k; ++j) row.push_back(oracle::meixner_at(f, 1 / a, c, x + j) * oracle::power(1 / a, j));
      m.push_back(row);
    }
    return oracle::cofactor(m);
  });
}

long omega_degree(const FiniteSet& f1, const FiniteSet& f2) {
  return f1.sum() + f2.sum() - binomial2(static_cast<long>(f1.size())) - binomial2(static_cast<long>(f2.size()));
}

}  // namespace

TEST_CASE("omega determinant") {
  const Rational c(7, 3);
  CHECK(omega_meixner({1}, {}, half, c) == meixner(1, half, c));
  Poly om = omega_meixner({1}, {1}, half, c);
  CHECK(om.degree() == 2);
  CHECK(om == omega_oracle({1}, {1}, half, c, 2));
  CHECK(omega_meixner({1, 2}, {}, half, c).degree() == 2);
  for (const auto& f1 : subsets(3))
    for (const auto& f2 : subsets(3)) {
      if (f1.size() + f2.size() > 4) continue;
      const Rational cc(-5, 2);
      Poly o = omega_meixner(f1, f2, Rational(1, 3), cc);
      CHECK(o.degree() == omega_degree(f1, f2));
      if (f1.size() + f2.size() <= 3) CHECK(o == omega_oracle(f1, f2, Rational(1, 3), cc, omega_degree(f1, f2)));
    }
}

TEST_CASE("christoffel and limit measures") {
  auto plain = christoffel_meixner_measure(half, 3, {}, {});
  auto meix = meixner_measure(half, 3);
  for (long x = 0; x <= 12; ++x) CHECK(plain.mass(x) == meix.mass(x));
  auto one = christoffel_meixner_measure(half, 2, {1}, {});
  CHECK(one.mass(1) == 0);
  CHECK(one.mass(2) != 0);
  CHECK(christoffel_mass(half, Rational(1, 3), {1}, {2}, 4) ==
        Rational(3) * Rational(4 + Rational(1, 3) + 2) * oracle::rising(Rational(1, 3), 4) * oracle::power(half, 4) / 24);
  CHECK_THROWS_AS(christoffel_meixner_measure(half, -1, {1}, {1}), DegenerateParameterError);
  // Gamma(-1/2) < 0, so the unnormalized mass at 0 is negative.
  CHECK(christoffel_mass(half, Rational(-1, 2), {}, {}, 0) == -1);

  auto fam = krall_meixner_family(half, -1, {1}, {1});
  CHECK(fam.h.empty());
  CHECK(fam.c == 3);
  auto nu = nu_measure(fam);
  CHECK(nu.mass(1) == 0);
  for (long x : {0L, 2L, 3L, 7L}) CHECK(nu.mass(x) == oracle::power(half, x));
  CHECK_THROWS_AS(krall_meixner_family(half, -2, {2}, {2}), NotRepresentableError);
}

TEST_CASE("deleting mass points from a Meixner measure") {
  for (long d = 1; d <= 4; ++d)
    for (const FiniteSet& a : {FiniteSet{0}, FiniteSet{2}, FiniteSet({0, 2}), FiniteSet({1, 3})}) {
      auto p = deletion_pair(d, a);
      auto fam = krall_meixner_family(half, p.c_hat, p.f1, p.f2);
      CHECK(fam.h == FiniteSet::range(-d + 1, -1));
      auto nu = nu_measure(fam);
      auto rho = meixner_measure(half, d);
      for (long x = 0; x <= 30; ++x) {
        // Gamma(x+d)/x! = (x+1)...(x+d-1) = (d-1)! (d)_x / x!.
        Rational expect = a.contains(x) ? Rational(0) : rho.mass(x) * Rational(factorial(static_cast<unsigned>(d - 1)));
        CHECK(nu.mass(x) == expect);
      }
    }
}

TEST_CASE("limit measure is never a translated Christoffel transform") {
  int checked = 0;
  for (long c_hat = -1; c_hat >= -3; --c_hat)
    for (const auto& f1 : subsets(4))
      for (const auto& f2 : subsets(4)) {
        if (f1.empty() && f2.empty()) continue;
        if (!containment_holds(c_hat, f1, f2)) continue;
        auto fam = krall_meixner_family(half, c_hat, f1, f2);
        CHECK(translated_christoffel_excluded(fam));
        ++checked;
      }
  CHECK(checked > 20);
}

TEST_CASE("krall-meixner polynomials are orthogonal") {
  auto fam = krall_meixner_family(half, -1, {1}, {1});
  auto nu = nu_measure(fam);
  std::vector<Poly> q;
  for (long n = 0; n <= 8; ++n) {
    q.push_back(krall_meixner_poly(fam, n));
    CHECK(q.back().degree() == n);
  }
  CHECK(q[0].degree() == 0);
  CHECK(!q[0].is_zero());
  for (long n = 0; n <= 8; ++n)
    for (long m = n + 1; m <= 8; ++m) CHECK(inner_product_exact(nu, q[n], q[m]) == 0);
  // Independent route: Gram-Schmidt on monomials under the same measure
  // gives the monic orthogonal family, which q_n must be proportional to.
  std::vector<Poly> monic_family;
  for (long n = 0; n <= 6; ++n) {
    Poly p = Poly::monomial(static_cast<std::size_t>(n));
    for (const auto& e : monic_family) p -= e * Rational(inner_product_exact(nu, p, e) / inner_product_exact(nu, e, e));
    monic_family.push_back(p);
    CHECK(q[n] == p * q[n].leading());
  }
}

TEST_CASE("norm law") {
  auto check_constant = [](const std::vector<NormLawRow>& rows) {
    REQUIRE(!rows.empty());
    CHECK(rows.front().ratio > 0);
    for (const auto& r : rows) CHECK(r.ratio == rows.front().ratio);
  };
  check_constant(norm_law(krall_meixner_family(half, -1, {1}, {1}), 8));
  auto p = deletion_pair(2, {0});
  check_constant(norm_law(krall_meixner_family(half, p.c_hat, p.f1, p.f2), 6));
  auto p3 = deletion_pair(3, {0, 2});
  check_constant(norm_law(krall_meixner_family(half, p3.c_hat, p3.f1, p3.f2), 5));
  check_constant(norm_law(krall_meixner_family(Rational(1, 3), -2, {1, 2}, {2}), 5));
}

TEST_CASE("admissibility equivalence") {
  auto fam = krall_meixner_family(half, -1, {1}, {1});
  auto r = admissible_meixner(fam);
  CHECK(r.measure_positive);
  CHECK(r.omega_positive);
  auto bad = krall_meixner_family(half, -1, {1, 3}, {1});
  CHECK(bad.h == FiniteSet{3});
  auto rb = admissible_meixner(bad);
  CHECK_FALSE(rb.measure_positive);
  CHECK(rb.measure_witness == 0);
  CHECK_FALSE(rb.omega_positive);
  int total = 0, negatives = 0;
  for (long c_hat = -1; c_hat >= -3; --c_hat)
    for (const auto& f1 : subsets(3))
      for (const auto& f2 : subsets(3)) {
        if (f1.empty() && f2.empty()) continue;
        if (!containment_holds(c_hat, f1, f2)) continue;
        auto a = admissible_meixner(krall_meixner_family(half, c_hat, f1, f2));
        CHECK(a.agree());
        ++total;
        if (!a.measure_positive) ++negatives;
      }
  CHECK(total >= 10);
  CHECK(negatives >= 2);
}

TEST_CASE("christoffel admissibility equivalence") {
  int negatives = 0, total = 0;
  for (const Rational& d : {Rational(1, 2), Rational(-1, 2), Rational(-3, 2), Rational(-5, 2), Rational(7, 3)})
    for (const auto& f1 : subsets(3))
      for (const auto& f2 : subsets(2)) {
        auto r = christoffel_admissibility(half, d, f1, f2);
        INFO("d " << to_string(d) << " F1 " << f1.str() << " F2 " << f2.str() << " mass " << r.measure_positive);
        CHECK(r.agree());
        ++total;
        if (!r.measure_positive) ++negatives;
      }
  CHECK(total > 100);
  CHECK(negatives > 0);
}

TEST_CASE("canonicalization identities hold pointwise") {
  struct Case {
    long c_hat;
    FiniteSet f1, f2;
  };
  const std::vector<Case> cases = {
      {0, {0, 2}, {1}}, {0, {1}, {0, 1}}, {-1, {0, 1, 3}, {2}}, {-1, {0, 1}, {1}}, {-2, {0, 1}, {0, 2}}, {-1, {1}, {1}},
  };
  for (const auto& c : cases) {
    INFO("c_hat " << c.c_hat << " F1 " << c.f1.str() << " F2 " << c.f2.str());
    CHECK(normalize_pair_mismatch(half, c.c_hat, c.f1, c.f2, 50) == -1);
    CHECK(normalize_pair_mismatch(Rational(2, 7), c.c_hat, c.f1, c.f2, 50) == -1);
  }
  for (long d = 1; d <= 4; ++d)
    for (const FiniteSet& a : {FiniteSet{0}, FiniteSet({0, 2}), FiniteSet({0, 1, 4})}) {
      auto p = deletion_pair(d, a);
      CHECK(normalize_pair_mismatch(half, p.c_hat, p.f1, p.f2, 50) == -1);
    }
}

TEST_CASE("limit of christoffel measures") {
  auto fam = krall_meixner_family(half, -1, {1}, {1});
  auto steps = limit_experiment(fam, 10);
  for (const auto& s : steps) CHECK(s.diffs[1] == 0);
  for (std::size_t t = 5; t + 1 < steps.size(); ++t) {
    for (long x : {0L, 2L, 5L, 20L}) {
      Rational ratio = steps[t + 1].diffs[x] / steps[t].diffs[x];
      CHECK(ratio >= Rational(2, 5));
      CHECK(ratio <= Rational(3, 5));
    }
    CHECK(steps[t].max_diff > steps[t + 1].max_diff);
    CHECK(steps[t].positive);
  }
}
