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

#ifndef KRALL_RATFUNC_HPP
#define KRALL_RATFUNC_HPP

#include <string>
#include <utility>

#include "polynomial.hpp"

namespace krall {

/// Quotient num/den of polynomials over Q, kept reduced: gcd(num, den) = 1
/// and den monic. Equality is therefore structural.
class RatFunc {
 public:
  RatFunc() : num_(), den_(Rational(1)) {}
  RatFunc(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RatFunc(long c) : RatFunc(Rational(c)) {}                   // NOLINT
  RatFunc(int c) : RatFunc(Rational(static_cast<long>(c))) {}  // NOLINT
  RatFunc(Poly p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT
  RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.degree() == 0; }

  Rational operator()(const Rational& at) const {
    Rational d = den_(at);
    if (d == 0) throw DegenerateParameterError("rational function evaluated at a pole " + to_string(at));
    return Rational(num_(at) / d);
  }

  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  friend RatFunc operator-(RatFunc a) {
    a.num_ = -a.num_;
    return a;
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    // Cross-cancel first so intermediate products stay small.
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    return RatFunc(exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2),
                   exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1));
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DegenerateParameterError("rational function division by zero");
    return a * RatFunc(b.den_, b.num_);
  }
  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }
  // Needed by generic elimination code that tests entries against zero.
  friend bool operator==(const RatFunc& a, long c) { return a == RatFunc(c); }
  friend bool operator!=(const RatFunc& a, long c) { return !(a == c); }

 private:
  void reduce() {
    if (den_.is_zero()) throw DegenerateParameterError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = Poly(Rational(1));
      return;
    }
    Poly g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
    Rational lc = den_.leading();
    if (lc != 1) {
      num_ /= lc;
      den_ /= lc;
    }
  }

  Poly num_;
  Poly den_;
};

inline RatFunc shift(const RatFunc& r, long by) {
  return RatFunc(shift(r.num(), Rational(by)), shift(r.den(), Rational(by)));
}

inline RatFunc derivative(const RatFunc& r) {
  return RatFunc(derivative(r.num()) * r.den() - r.num() * derivative(r.den()), r.den() * r.den());
}

/// f(x+1) - f(x).
inline RatFunc forward_difference(const RatFunc& r) { return shift(r, 1) - r; }

inline std::string to_string(const RatFunc& r) {
  if (r.is_polynomial()) return to_string(r.num());
  return "(" + to_string(r.num()) + ")/(" + to_string(r.den()) + ")";
}

}  // namespace krall

#endif  // KRALL_RATFUNC_HPP
