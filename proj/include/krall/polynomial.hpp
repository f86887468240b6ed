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

#ifndef KRALL_POLYNOMIAL_HPP
#define KRALL_POLYNOMIAL_HPP

#include <initializer_list>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace krall {

/**
 * Dense univariate polynomial over a field.
 *
 * Coefficients are stored low-to-high degree with no trailing zeros, so the
 * zero polynomial has an empty coefficient vector and degree -1.
 */
template <class Field>
class Polynomial {
 public:
  using value_type = Field;

  Polynomial() = default;
  Polynomial(const Field& constant) : c_{constant} { normalize(); }  // NOLINT: implicit by intent
  Polynomial(long constant) : Polynomial(Field(constant)) {}   // NOLINT
  Polynomial(int constant) : Polynomial(Field(static_cast<long>(constant))) {}  // NOLINT
  Polynomial(std::initializer_list<Field> coeffs) : c_(coeffs) { normalize(); }
  explicit Polynomial(std::vector<Field> coeffs) : c_(std::move(coeffs)) { normalize(); }

  static Polynomial x() { return Polynomial({Field(0), Field(1)}); }
  static Polynomial monomial(std::size_t degree, const Field& coeff = Field(1)) {
    std::vector<Field> c(degree + 1, Field(0));
    c[degree] = coeff;
    return Polynomial(std::move(c));
  }
  /// The linear polynomial slope * x + offset.
  static Polynomial linear(const Field& slope, const Field& offset) { return Polynomial({offset, slope}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<Field>& coeffs() const { return c_; }
  Field coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Field(0); }
  Field leading() const { return c_.empty() ? Field(0) : c_.back(); }

  Field operator()(const Field& at) const {
    Field acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
      acc *= at;
      acc += *it;
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Field(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), Field(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }
  Polynomial& operator*=(const Field& s) {
    if (s == 0) {
      c_.clear();
      return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
  }
  Polynomial& operator/=(const Field& s) {
    if (s == 0) throw DegenerateParameterError("polynomial divided by zero scalar");
    for (auto& v : c_) v /= s;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& v : a.c_) v = -v;
    return a;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Field> r(a.c_.size() + b.c_.size() - 1, Field(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(Polynomial a, const Field& s) { return a *= s; }
  friend Polynomial operator*(const Field& s, Polynomial a) { return a *= s; }
  friend Polynomial operator/(Polynomial a, const Field& s) { return a /= s; }
  friend Polynomial operator*(Polynomial a, long s) { return a *= Field(s); }
  friend Polynomial operator*(long s, Polynomial a) { return a *= Field(s); }
  friend Polynomial operator*(Polynomial a, int s) { return a *= Field(static_cast<long>(s)); }
  friend Polynomial operator*(int s, Polynomial a) { return a *= Field(static_cast<long>(s)); }
  friend Polynomial operator+(Polynomial a, long s) { return a += Polynomial(s); }
  friend Polynomial operator+(Polynomial a, int s) { return a += Polynomial(s); }
  friend Polynomial operator-(Polynomial a, long s) { return a -= Polynomial(s); }
  friend Polynomial operator-(Polynomial a, int s) { return a -= Polynomial(s); }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  // Rationals built from (num, den) pairs are not automatically in lowest
  // terms; equality below is coefficientwise.
  void normalize() {
    if constexpr (std::is_same_v<Field, Rational>)
      for (auto& v : c_) v.canonicalize();
    trim();
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Field> c_;
};

using Poly = Polynomial<Rational>;

template <class Field>
std::pair<Polynomial<Field>, Polynomial<Field>> divmod(const Polynomial<Field>& num,
                                                       const Polynomial<Field>& den) {
  if (den.is_zero()) throw DegenerateParameterError("polynomial division by zero");
  std::vector<Field> rem = num.coeffs();
  const int dd = den.degree();
  if (num.degree() < dd) return {Polynomial<Field>(), num};
  std::vector<Field> quo(num.degree() - dd + 1, Field(0));
  const Field lead = den.leading();
  for (int i = num.degree(); i >= dd; --i) {
    if (rem[i] == 0) continue;
    Field f = rem[i] / lead;
    quo[i - dd] = f;
    for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den.coeffs()[j];
  }
  rem.resize(dd > 0 ? dd : 0);
  return {Polynomial<Field>(std::move(quo)), Polynomial<Field>(std::move(rem))};
}

/// Quotient of an exact division; throws if `den` does not divide `num`.
template <class Field>
Polynomial<Field> exact_quotient(const Polynomial<Field>& num, const Polynomial<Field>& den) {
  auto [q, r] = divmod(num, den);
  if (!r.is_zero()) throw Error("exact_quotient: nonzero remainder");
  return q;
}

inline Rational exact_quotient(const Rational& num, const Rational& den) {
  if (den == 0) throw DegenerateParameterError("division by zero");
  return Rational(num / den);
}

template <class Field>
Polynomial<Field> monic(const Polynomial<Field>& p) {
  return p.is_zero() ? p : p / p.leading();
}

/// Monic greatest common divisor (zero only when both inputs are zero).
template <class Field>
Polynomial<Field> gcd(Polynomial<Field> a, Polynomial<Field> b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = monic(r);
  }
  return monic(a);
}

/// q(x) = p(x + shift), by Horner's scheme in the shifted variable.
template <class Field>
Polynomial<Field> shift(const Polynomial<Field>& p, const Field& by) {
  Polynomial<Field> acc;
  const Polynomial<Field> xs = Polynomial<Field>::linear(Field(1), by);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * xs + Polynomial<Field>(*it);
  return acc;
}

template <class Field>
Polynomial<Field> shift(const Polynomial<Field>& p, long by) {
  return shift(p, Field(by));
}

/// p(slope * x + offset).
template <class Field>
Polynomial<Field> compose_linear(const Polynomial<Field>& p, const Field& slope, const Field& offset) {
  Polynomial<Field> acc;
  const Polynomial<Field> lin = Polynomial<Field>::linear(slope, offset);
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * lin + Polynomial<Field>(*it);
  return acc;
}

/// p(q(x)).
template <class Field>
Polynomial<Field> compose(const Polynomial<Field>& p, const Polynomial<Field>& q) {
  Polynomial<Field> acc;
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * q + Polynomial<Field>(*it);
  return acc;
}

template <class Field>
Polynomial<Field> derivative(const Polynomial<Field>& p, unsigned k = 1) {
  if (p.degree() < static_cast<int>(k)) return {};
  std::vector<Field> c(p.degree() + 1 - k, Field(0));
  for (std::size_t i = k; i < p.coeffs().size(); ++i) {
    Field f = p.coeffs()[i];
    for (unsigned j = 0; j < k; ++j) f *= Field(static_cast<long>(i - j));
    c[i - k] = f;
  }
  return Polynomial<Field>(std::move(c));
}

/// Falling-factorial binomial C(e(x), k) for a polynomial argument e.
template <class Field>
Polynomial<Field> binomial(const Polynomial<Field>& e, unsigned k) {
  Polynomial<Field> r(Field(1));
  for (unsigned i = 0; i < k; ++i) r *= e - Polynomial<Field>(Field(static_cast<long>(i)));
  return r / Field(factorial(k));
}

/// Product of (x - r) over the given roots.
template <class Field, class Range>
Polynomial<Field> from_roots(const Range& roots) {
  Polynomial<Field> r(Field(1));
  for (const auto& root : roots) r *= Polynomial<Field>::linear(Field(1), -Field(root));
  return r;
}

inline std::string to_string(const Poly& p, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const Rational& c = p.coeffs()[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = mag == 1;
    if (i == 0 || !unit) os << to_string(mag);
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << to_string(p); }

}  // namespace krall

#endif  // KRALL_POLYNOMIAL_HPP
