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

#ifndef KRALL_RATIONAL_HPP
#define KRALL_RATIONAL_HPP

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "errors.hpp"

namespace krall {

/// Arbitrary precision rational, always canonical (lowest terms, positive
/// denominator). gmpxx returns expression templates, so never bind the result
/// of an arithmetic expression to `auto`.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational canonical(Rational q) {
  q.canonicalize();
  return q;
}

inline int sign(const Rational& q) { return sgn(q); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// True for q in {0, -1, -2, ...}.
inline bool is_nonpositive_integer(const Rational& q) { return is_integer(q) && sgn(q) <= 0; }

/// Exact integer value; caller guarantees `is_integer(q)` and that it fits.
inline long to_long(const Rational& q) {
  if (!is_integer(q)) throw Error("to_long: " + q.get_str() + " is not an integer");
  if (!q.get_num().fits_slong_p()) throw Error("to_long: integer out of range");
  return q.get_num().get_si();
}

/// Serialized form: "p/q" in lowest terms, or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return canonical(q).get_str(); }

inline Rational parse_rational(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty rational literal");
  auto valid_int = [](std::string_view t) {
    if (!t.empty() && (t.front() == '-' || t.front() == '+')) t.remove_prefix(1);
    if (t.empty()) return false;
    for (char ch : t)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw ParseError("malformed rational literal '" + std::string(text) + "'");
  if (num.front() == '+') num.erase(0, 1);
  if (den.front() == '+') den.erase(0, 1);
  Integer n(num, 10);
  Integer d(den, 10);
  if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return canonical(Rational(n, d));
}

/// Exact power; negative exponents require a nonzero base.
inline Rational pow(const Rational& base, long e) {
  if (e < 0) {
    if (base == 0) throw DegenerateParameterError("0 raised to a negative power");
    return pow(Rational(1) / base, -e);
  }
  Rational result(1);
  Rational b = base;
  unsigned long k = static_cast<unsigned long>(e);
  while (k) {
    if (k & 1UL) result *= b;
    b *= b;
    k >>= 1;
  }
  return result;
}

/// Rising factorial q (q+1) ... (q+n-1), 1 for n = 0.
template <class T>
T rising(const T& q, unsigned n) {
  T result(1);
  for (unsigned i = 0; i < n; ++i) result *= q + T(static_cast<long>(i));
  return result;
}

inline Rational pochhammer(const Rational& q, unsigned n) { return rising<Rational>(q, n); }

inline Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

/// Generalized binomial C(top, k) = top (top-1) ... (top-k+1) / k!.
inline Rational binomial(const Rational& top, unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i) r *= top - Rational(static_cast<long>(i));
  r /= Rational(factorial(k));
  return r;
}

inline long binomial2(long n) { return n < 2 ? 0 : n * (n - 1) / 2; }

/// Sign of Gamma(y) for real rational y off the poles.
inline int gamma_sign(const Rational& y) {
  if (is_nonpositive_integer(y)) throw DegenerateParameterError("Gamma pole at " + to_string(y));
  if (sgn(y) > 0) return 1;
  // For -k < y < -k+1 the sign is (-1)^k.
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  Integer k = -fl;
  return mpz_odd_p(k.get_mpz_t()) ? -1 : 1;
}

}  // namespace krall

#endif  // KRALL_RATIONAL_HPP
