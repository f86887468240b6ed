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

// Acceptance run: one pass/fail line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>

#include "krall/suites.hpp"

using namespace krall;

namespace {

struct Verdict {
  bool ok = false;
  std::string detail;
};

const Rational half(1, 2);

Verdict fail(const std::string& why) { return {false, why}; }

// 1. Classical Meixner orthogonality and normalized norms, n, m <= 6.
Verdict classical() {
  const Rational c(3);
  const auto mu = meixner_measure(half, c);
  const Rational total = inner_product_exact(mu, Poly(1), Poly(1));
  if (total != pow(Rational(2), 3)) return fail("total mass " + to_string(total));
  std::vector<Poly> m;
  for (long n = 0; n <= 6; ++n) m.push_back(meixner(n, half, c));
  for (long n = 0; n <= 6; ++n)
    for (long k = 0; k <= 6; ++k) {
      const Rational ip = inner_product_exact(mu, m[n], m[k]) / total;
      const Rational want = n == k ? meixner_norm(n, half, c) : Rational(0);
      if (ip != want) return fail("<m_" + std::to_string(n) + ", m_" + std::to_string(k) + "> = " + to_string(ip));
    }
  return {true, "49 exact products"};
}

// 2. Krall-Meixner orthogonality and norm law for c_hat = -1, F = ({1}, {1}).
Verdict krall_meixner() {
  const auto fam = krall_meixner_family(half, -1, FiniteSet{1}, FiniteSet{1});
  const auto nu = nu_measure(fam);
  std::vector<Poly> q;
  for (long n = 0; n <= 8; ++n) q.push_back(krall_meixner_poly(fam, n));
  for (long n = 0; n <= 8; ++n)
    for (long m = n + 1; m <= 8; ++m)
      if (inner_product_exact(nu, q[n], q[m]) != 0) return fail("q_" + std::to_string(n) + ", q_" + std::to_string(m));
  const auto rows = norm_law(fam, 8);
  if (rows.size() != 9) return fail("expected 9 norm ratios");
  for (const auto& r : rows)
    if (r.ratio != rows.front().ratio || r.ratio <= 0) return fail("ratio " + to_string(r.ratio) + " at n=" + std::to_string(r.n));
  return {true, "36 zero products, 9 ratios equal to " + to_string(rows.front().ratio)};
}

// 3. Canonicalization identities and the deleted-point H sets.
Verdict canonicalization() {
  struct Case {
    long c_hat;
    FiniteSet f1, f2;
  };
  const std::vector<Case> cases = {{0, {0, 2}, {1}}, {0, {1}, {0, 1}}, {-1, {0, 1, 3}, {2}}, {-2, {0, 1}, {0, 2}}};
  for (const auto& c : cases) {
    const long bad = normalize_pair_mismatch(half, c.c_hat, c.f1, c.f2, 50);
    if (bad >= 0) return fail("identity fails at x=" + std::to_string(bad) + " for F1=" + c.f1.str());
  }
  for (const auto& [d, a, h] : {std::tuple<long, FiniteSet, FiniteSet>{2, {0}, {-1}}, {3, {0, 2}, {-2, -1}}}) {
    const DeletionPair dp = deletion_pair(d, a);
    const auto fam = krall_meixner_family(half, dp.c_hat, dp.f1, dp.f2);
    if (fam.h != h) return fail("H = " + fam.h.str() + " for d=" + std::to_string(d));
  }
  return {true, "4 specs x <= 50, H = {-1} and {-2,-1}"};
}

// 4. Banded operator at r = 3, identity only at r = 1.
Verdict operator_recovery() {
  const auto fam = krall_meixner_family(half, -1, FiniteSet{1}, FiniteSet{1});
  std::vector<Poly> q;
  for (long n = 0; n <= 10; ++n) q.push_back(krall_meixner_poly(fam, n));
  const long r = meixner_operator_order(fam);
  if (r != 3) return fail("predicted order " + std::to_string(r));
  const auto s = search_operator(q, r, default_degree_cap(r, fam.omega.degree()), 9, 0);
  if (!s.found() || s.op->band() != 3) return fail("no operator with band 3");
  if (s.check.out_of_sample() != 2 || !s.check.all_exact()) return fail("out-of-sample check");
  const auto low = search_operator(q, 1, default_degree_cap(1, fam.omega.degree()), 9, 0);
  if (low.dimension() != 1 || low.op) return fail("r = 1 admits a non-identity operator");
  return {true, "dimension " + std::to_string(s.dimension()) + " at r = 3, identity only at r = 1"};
}

// 5. Exceptional Meixner identities, eigen-relations and bounded norms.
Verdict exceptional_meixner() {
  const auto fam = exc_meixner_family(half, -1, FiniteSet{1}, FiniteSet{1});
  const auto op = second_order_difference_op(fam);
  for (long n : sigma_of_pair(fam.f1, fam.f2, fam.u + 8)) {
    const Poly p = exc_meixner_poly(fam, n);
    if (p != exc_meixner_poly_alt(fam, n)) return fail("determinant forms differ at n=" + std::to_string(n));
    if (p.degree() != n || p.leading() != exc_meixner_leading(fam, n)) return fail("leading coefficient at n=" + std::to_string(n));
    if (!eigen_residual(op, p, Rational(n)).is_zero()) return fail("eigen-relation at n=" + std::to_string(n));
  }
  const Rational tiny(mpz_class(1), mpz_class("100000000000000000000"));
  Rational worst = 0;
  const auto rows = exc_meixner_norm_check(fam, fam.u + 8, 80);
  for (const auto& r : rows) {
    if (!r.ok) return fail("<m_" + std::to_string(r.n) + ", m_" + std::to_string(r.m) + "> outside its tail bound");
    if (r.bound >= tiny) return fail("tail bound not below 1e-20");
    worst = std::max(worst, r.bound);
  }
  return {true, std::to_string(rows.size()) + " products, largest bound " + to_string(to_real(worst), 3)};
}

// 6. Admissibility equivalences on a catalog, Meixner and transported Laguerre.
Verdict admissibility() {
  int total = 0, negatives = 0;
  for (long c_hat = -1; c_hat >= -3; --c_hat)
    for (long m1 = 0; m1 < 8; ++m1)
      for (long m2 = 0; m2 < 8; ++m2) {
        std::vector<long> v1, v2;
        for (long i = 0; i < 3; ++i) {
          if (m1 & (1L << i)) v1.push_back(i + 1);
          if (m2 & (1L << i)) v2.push_back(i + 1);
        }
        const FiniteSet f1(v1), f2(v2);
        if ((f1.empty() && f2.empty()) || !containment_holds(c_hat, f1, f2)) continue;
        const auto ad = admissible_meixner(krall_meixner_family(half, c_hat, f1, f2));
        if (!ad.agree()) return fail("Meixner criteria disagree for F1=" + f1.str() + " F2=" + f2.str());
        const auto pe = positivity_equivalence_check(exc_laguerre_family(c_hat - 1, f1, f2));
        if (!pe.agree()) return fail("Laguerre criteria disagree for F1=" + f1.str() + " F2=" + f2.str());
        if (pe.admissible != ad.measure_positive) return fail("transport mismatch for F1=" + f1.str());
        ++total;
        negatives += !ad.measure_positive;
      }
  if (total < 10 || negatives < 2) return fail("catalog too small");
  return {true, std::to_string(total) + " pairs, " + std::to_string(negatives) + " inadmissible"};
}

// 7. The worked exceptional Laguerre example.
Verdict laguerre_example() {
  const auto fam = exc_laguerre_family(-2, FiniteSet{1}, FiniteSet{1});
  const Poly x = Poly::x(), q = x * x + 1;
  if (fam.omega != q && fam.omega != -q) return fail("Omega = " + to_string(fam.omega));
  const auto op = second_order_differential_op(fam);
  if (!(op.a1 == RatFunc(1 - x) - RatFunc(x * x * 4, q)) || !(op.a0 == RatFunc(Poly(-2)) + RatFunc(x * 2 + x * x * 2, q)))
    return fail("operator coefficients");
  for (long n : {1L, 3L, 4L, 5L, 6L})
    if (!eigen_residual(op, exc_laguerre_poly(fam, n), Rational(-n)).is_zero()) return fail("eigen n=" + std::to_string(n));
  init_real_precision();
  const auto w = laguerre_weight(fam);
  const std::vector<long> idx = {1, 3, 4};
  Real worst = 0;
  for (long n : idx)
    for (long m : idx) {
      const auto v = gauss_laguerre_inner(w, exc_laguerre_poly(fam, n), exc_laguerre_poly(fam, m), 128);
      const Real err = abs(v.value - Real(n == m ? 1 : 0));
      if (!(err < Real(1e-9))) return fail("Gram entry " + std::to_string(n) + "," + std::to_string(m));
      if (err > worst) worst = err;
    }
  if (!lowest_degree_identity(fam).holds()) return fail("lowest-degree identity");
  return {true, "Gram deviation " + to_string(worst, 3) + " at 128 nodes"};
}

bool ratios_in_band(const std::vector<Rational>& errs, std::size_t from) {
  for (std::size_t t = from; t + 1 < errs.size(); ++t) {
    if (errs[t] == 0) return false;
    const Rational r = errs[t + 1] / errs[t];
    if (r < Rational(2, 5) || r > Rational(3, 5)) return false;
  }
  return true;
}

// 8. First-order convergence of the three limits.
Verdict limits() {
  for (long n = 1; n <= 4; ++n)
    if (!ratios_in_band(meixner_laguerre_limit_errors(n, 3, 12), 5)) return fail("classical limit n=" + std::to_string(n));
  const auto lf = exc_laguerre_family(-2, FiniteSet{1}, FiniteSet{1});
  for (long n : {1L, 3L, 4L}) {
    std::vector<Rational> errs;
    for (const auto& row : limit_from_meixner(lf, n, 12)) errs.push_back(row.error);
    if (!ratios_in_band(errs, 5)) return fail("exceptional limit n=" + std::to_string(n));
  }
  const auto fam = krall_meixner_family(half, -1, FiniteSet{1}, FiniteSet{1});
  const auto steps = limit_experiment(fam, 12, 20);
  for (long x = 0; x <= 20; ++x) {
    if (fam.f1.contains(x)) continue;
    std::vector<Rational> d;
    for (const auto& s : steps) d.push_back(s.diffs[x]);
    if (!ratios_in_band(d, 5)) return fail("mass limit at x=" + std::to_string(x));
  }
  return {true, "error ratios in [0.4, 0.6] over the 6 halvings t = 6..12"};
}

Verdict hahn_instance(const KrallHahnFamily& fam, long c, const Rational& d, long big_n, const FiniteSet& a,
                      const FiniteSet& b, long expect_r) {
  const auto nu = nu_hahn(fam);
  const auto ref = hahn_deleted_measure(c, d, big_n, a, b);
  std::optional<Rational> ratio;
  for (long x = 0; x <= big_n; ++x) {
    if (nu.mass(x) == 0 || ref.mass(x) == 0) {
      if (nu.mass(x) != ref.mass(x)) return fail("support differs at x=" + std::to_string(x));
      continue;
    }
    const Rational r = nu.mass(x) / ref.mass(x);
    if (!ratio) ratio = r;
    if (r != *ratio) return fail("representation ratio changes at x=" + std::to_string(x));
  }
  const auto g = hahn_orthogonality_check(fam, fam.last_index());
  if (!g.diagonal || !g.positive_diagonal || !g.degrees_exact) return fail("Gram matrix");
  const long r = hahn_operator_order(fam);
  if (r != expect_r) return fail("operator order " + std::to_string(r));
  const auto s = search_operator(g.polys, r, default_degree_cap(r, 0), fam.last_index() - 1, 0);
  if (!s.found() || s.op->band() != r) return fail("no operator at r=" + std::to_string(r));
  return {true, ""};
}

// 9. Krall-Hahn: one-sided deletion and a two-sided instance.
Verdict krall_hahn() {
  const auto one = hahn_deleted_family(1, Rational(1), 8, FiniteSet{0});
  Verdict v = hahn_instance(one, 1, 1, 8, {0}, {}, 2);
  if (!v.ok) return fail("one-sided: " + v.detail);
  const auto two = hahn_deleted_family(0, 0, 12, FiniteSet({0, 1}), FiniteSet{1});
  if (two.kind != HahnKind::BothLimits) return fail("two-sided instance is not two-sided");
  v = hahn_instance(two, 0, 0, 12, {0, 1}, {1}, 3);
  if (!v.ok) return fail("two-sided: " + v.detail);
  return {true, "orders 2 and 3, Gram matrices diagonal"};
}

// 10. Command line reproduction, byte-stable.
Verdict cli_reproduction() {
#ifdef KRALLVERIFY_BIN
  auto capture = [](int& code) {
    const std::string cmd = std::string(KRALLVERIFY_BIN) + " reproduce laguerre-example --deterministic --json";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe.get())) > 0) out.append(buf, got);
    const int st = pclose(pipe.release());
    code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return out;
  };
  int c1 = -1, c2 = -1;
  const std::string a = capture(c1), b = capture(c2);
  if (c1 != 0 || c2 != 0) return fail("exit code " + std::to_string(c1));
  if (a != b) return fail("output differs between runs");
  const auto j = nlohmann::json::parse(a)["result"];
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"omega", "±(x^2 + 1)"},
      {"weight", "e^{-x}/(x^2 + 1)^2"},
      {"operator", "x p'' + h1 p' + h0 p, h1 = (-x^3 - 3*x^2 - x + 1)/(x^2 + 1), h0 = (2*x - 2)/(x^2 + 1)"},
      {"index-set", "{1, 3, 4, 5, ...}"},
      {"norm", "1"}};
  for (const auto& [k, v] : expected)
    if (!j.contains(k) || j[k] != v) return fail("artifact " + k);
  return {true, "5 artifacts, identical output on two runs"};
#else
  return fail("krallverify was not built");
#endif
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0: no time limit
    std::function<Verdict()> run;
  };
  const std::vector<Criterion> all = {
      {1, "classical sanity", 1, classical},
      {2, "Krall-Meixner orthogonality and norms", 10, krall_meixner},
      {3, "canonicalization and deleted points", 0, canonicalization},
      {4, "operator recovery", 60, operator_recovery},
      {5, "exceptional Meixner", 60, exceptional_meixner},
      {6, "admissibility equivalences", 0, admissibility},
      {7, "exceptional Laguerre example", 0, laguerre_example},
      {8, "limits", 0, limits},
      {9, "Krall-Hahn", 30, krall_hahn},
      {10, "CLI reproduction", 0, cli_reproduction},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (v.ok && c.budget_s > 0 && secs > c.budget_s) v = fail("took " + std::to_string(secs) + " s");
    failed += !v.ok;
    std::printf("criterion %2d %-40s %s  (%.2f s) %s\n", c.id, c.name, v.ok ? "PASS" : "FAIL", secs, v.detail.c_str());
  }
  return failed ? 1 : 0;
}
