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

#ifndef KRALL_STURM_HPP
#define KRALL_STURM_HPP

#include <vector>

#include "polynomial.hpp"

namespace krall {

/// Square-free part p / gcd(p, p').
inline Poly squarefree(const Poly& p) {
  if (p.degree() <= 0) return p;
  Poly g = gcd(p, derivative(p));
  return g.degree() > 0 ? exact_quotient(p, g) : p;
}

inline std::vector<Poly> sturm_chain(const Poly& p) {
  std::vector<Poly> chain{p, derivative(p)};
  while (!chain.back().is_zero()) {
    Poly r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

namespace detail {

inline int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace detail

/// Number of distinct real roots of p in the open interval (lo, +inf).
inline int count_roots_above(const Poly& p, const Rational& lo) {
  if (p.is_zero()) throw DegenerateParameterError("root count of the zero polynomial");
  Poly q = squarefree(p);
  if (q.degree() <= 0) return 0;
  auto chain = sturm_chain(q);
  std::vector<int> at_lo, at_inf;
  for (const auto& s : chain) {
    at_lo.push_back(sgn(s(lo)));
    at_inf.push_back(sgn(s.leading()));
  }
  // Just right of a simple root at lo, q has the sign of q'(lo).
  if (at_lo.front() == 0) at_lo.front() = sgn(chain[1](lo));
  return detail::sign_changes(at_lo) - detail::sign_changes(at_inf);
}

/// Number of distinct real roots of p in [0, +inf).
inline int count_nonnegative_roots(const Poly& p) {
  if (p.is_zero()) throw DegenerateParameterError("root count of the zero polynomial");
  const bool root_at_zero = sgn(p(Rational(0))) == 0;
  return count_roots_above(p, Rational(0)) + (root_at_zero ? 1 : 0);
}

}  // namespace krall

#endif  // KRALL_STURM_HPP
