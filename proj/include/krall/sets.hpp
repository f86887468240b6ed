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

#ifndef KRALL_SETS_HPP
#define KRALL_SETS_HPP

#include <algorithm>
#include <initializer_list>
#include <string>
#include <vector>

#include "rational.hpp"

namespace krall {

/// Immutable finite set of integers stored as a strictly increasing list.
class FiniteSet {
 public:
  FiniteSet() = default;
  FiniteSet(std::initializer_list<long> elems) : FiniteSet(std::vector<long>(elems)) {}
  /// Throws SchemaError unless `elems` is strictly increasing.
  explicit FiniteSet(std::vector<long> elems) : e_(std::move(elems)) {
    for (std::size_t i = 1; i < e_.size(); ++i)
      if (e_[i - 1] >= e_[i]) throw SchemaError("set elements must be strictly increasing: " + str());
  }
  /// Builds a set from arbitrary values (sorted, duplicates removed).
  static FiniteSet of(std::vector<long> values) {
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return FiniteSet(std::move(values));
  }
  static FiniteSet range(long lo, long hi) {
    std::vector<long> v;
    for (long i = lo; i <= hi; ++i) v.push_back(i);
    return FiniteSet(std::move(v));
  }

  const std::vector<long>& elems() const { return e_; }
  std::size_t size() const { return e_.size(); }
  bool empty() const { return e_.empty(); }
  bool contains(long v) const { return std::binary_search(e_.begin(), e_.end(), v); }
  /// max F with the convention max(empty) = -1.
  long max() const { return e_.empty() ? -1 : e_.back(); }
  long min() const { return e_.empty() ? -1 : e_.front(); }
  long sum() const {
    long s = 0;
    for (long v : e_) s += v;
    return s;
  }
  auto begin() const { return e_.begin(); }
  auto end() const { return e_.end(); }

  std::string str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < e_.size(); ++i) s += (i ? "," : "") + std::to_string(e_[i]);
    return s + "}";
  }

  friend bool operator==(const FiniteSet& a, const FiniteSet& b) { return a.e_ == b.e_; }
  friend bool operator!=(const FiniteSet& a, const FiniteSet& b) { return a.e_ != b.e_; }

 private:
  std::vector<long> e_;
};

inline FiniteSet set_union(const FiniteSet& a, const FiniteSet& b) {
  std::vector<long> r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return FiniteSet(std::move(r));
}

inline FiniteSet set_intersection(const FiniteSet& a, const FiniteSet& b) {
  std::vector<long> r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return FiniteSet(std::move(r));
}

inline FiniteSet set_difference(const FiniteSet& a, const FiniteSet& b) {
  std::vector<long> r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
  return FiniteSet(std::move(r));
}

/// {u - j : j in J}.
inline FiniteSet reflect(long u, const FiniteSet& j) {
  std::vector<long> r;
  for (long v : j) r.push_back(u - v);
  return FiniteSet::of(std::move(r));
}

/// {t + f : f in F}.
inline FiniteSet translate(const FiniteSet& f, long t) {
  std::vector<long> r;
  for (long v : f) r.push_back(v + t);
  return FiniteSet(std::move(r));
}

inline bool is_subset(const FiniteSet& a, const FiniteSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline void require_positive(const FiniteSet& f, const char* what) {
  if (!f.empty() && f.min() < 1) throw SchemaError(std::string(what) + " must contain positive integers only: " + f.str());
}

inline void require_nonnegative(const FiniteSet& f, const char* what) {
  if (!f.empty() && f.min() < 0) throw SchemaError(std::string(what) + " must contain nonnegative integers only: " + f.str());
}

/// I(F) = {1..max F} \ {max F - f : f in F}; I(empty) = empty.
inline FiniteSet involution_I(const FiniteSet& f) {
  if (f.empty()) return {};
  return set_difference(FiniteSet::range(1, f.max()), reflect(f.max(), f));
}

/// s_F; a leading 0 is ignored.
inline long s_of(const FiniteSet& f) {
  std::vector<long> e;
  for (long v : f)
    if (v != 0) e.push_back(v);
  for (std::size_t s = 1; s <= e.size(); ++s)
    if (static_cast<long>(s) < e[s - 1]) return static_cast<long>(s);
  return static_cast<long>(e.size()) + 1;
}

/// F with its initial segment {1..s_F-1} (and 0) removed, shifted down by s_F.
inline FiniteSet downarrow(const FiniteSet& f) {
  const long s = s_of(f);
  std::vector<long> r;
  for (long v : f)
    if (v > s) r.push_back(v - s);
  return FiniteSet(std::move(r));
}

inline long u_of_pair(const FiniteSet& f1, const FiniteSet& f2) {
  const long k1 = static_cast<long>(f1.size()), k2 = static_cast<long>(f2.size());
  return f1.sum() + f2.sum() - binomial2(k1 + 1) - binomial2(k2);
}

/// Members of sigma_F that are <= n_max, increasing.
inline std::vector<long> sigma_of_pair(const FiniteSet& f1, const FiniteSet& f2, long n_max) {
  const long u = u_of_pair(f1, f2);
  std::vector<long> r;
  for (long n = u; n <= n_max; ++n)
    if (!f1.contains(n - u)) r.push_back(n);
  return r;
}

inline bool in_sigma(const FiniteSet& f1, const FiniteSet& f2, long n) {
  const long u = u_of_pair(f1, f2);
  return n >= u && !f1.contains(n - u);
}

/// H(u, I, J) = [(I u (u-J)) \ {0..u}] u [I n (u-J)].
inline FiniteSet hset(long u, const FiniteSet& i, const FiniteSet& j) {
  FiniteSet uj = reflect(u, j);
  FiniteSet outside = set_difference(set_union(i, uj), FiniteSet::range(0, u));
  return set_union(outside, set_intersection(i, uj));
}

inline Integer vandermonde(const FiniteSet& f) {
  Integer r(1);
  const auto& e = f.elems();
  for (std::size_t i = 0; i < e.size(); ++i)
    for (std::size_t j = i + 1; j < e.size(); ++j) r *= e[j] - e[i];
  return r;
}

/// Containment {0..-c_hat} subset of F1 u (-c_hat - F2).
inline bool containment_holds(long c_hat, const FiniteSet& f1, const FiniteSet& f2) {
  if (c_hat > 0) return true;
  return is_subset(FiniteSet::range(0, -c_hat), set_union(f1, reflect(-c_hat, f2)));
}

inline void require_containment(long c_hat, const FiniteSet& f1, const FiniteSet& f2) {
  if (!containment_holds(c_hat, f1, f2))
    throw NotRepresentableError("{0.." + std::to_string(-c_hat) + "} is not contained in F1 u (" +
                                std::to_string(-c_hat) + " - F2) for F1=" + f1.str() + ", F2=" + f2.str());
}

/// A pair (F1, F2) with its Meixner-side parameters.
struct PairSpec {
  FiniteSet f1;
  FiniteSet f2;
  Rational a;
  Rational c_hat;
};

/// A quartet (F1..F4) with Hahn-side parameters.
struct QuartetSpec {
  FiniteSet f1, f2, f3, f4;
  Rational a;
  Rational b;
  long n = 0;
};

/// Outcome of the canonicalization loop. The original limit measure equals
///   a^a_exponent * scale * target(x - shift)
/// pointwise, where target is either the limit measure with parameter c_hat
/// (kind Nu, c_hat <= -1, positive sets) or the Christoffel-Meixner measure
/// with positive integer parameter d normalized by Gamma(d) (kind Christoffel).
struct NormalizedPair {
  enum class Kind { Nu, Christoffel };
  Kind kind = Kind::Nu;
  long param = 0;  // c_hat for Nu, d for Christoffel
  FiniteSet u1;
  FiniteSet u2;
  long shift = 0;
  long a_exponent = 0;
  Integer scale = 1;
  int steps = 0;
};

inline NormalizedPair normalize_pair(long c_hat, FiniteSet f1, FiniteSet f2) {
  require_nonnegative(f1, "F1");
  require_nonnegative(f2, "F2");
  if (c_hat > 0) throw SchemaError("normalize_pair expects c_hat <= 0");
  require_containment(c_hat, f1, f2);
  NormalizedPair out;
  for (;;) {
    const bool z1 = f1.contains(0), z2 = f2.contains(0);
    if (c_hat == 0) {
      // Christoffel form with positive integer parameter.
      if (z1) {
        const long s1 = s_of(f1);
        const long s2 = z2 ? s_of(f2) : 0;
        out.kind = NormalizedPair::Kind::Christoffel;
        out.param = s1 + s2;
        out.u1 = downarrow(f1);
        out.u2 = z2 ? downarrow(f2) : f2;
        out.shift += s1;
        out.a_exponent += s1;
      } else {
        const long s2 = s_of(f2);
        out.kind = NormalizedPair::Kind::Christoffel;
        out.param = s2;
        out.u1 = f1;
        out.u2 = downarrow(f2);
      }
      out.scale = factorial(static_cast<unsigned>(out.param - 1));
      ++out.steps;
      return out;
    }
    if (!z1 && !z2) {
      out.kind = NormalizedPair::Kind::Nu;
      out.param = c_hat;
      out.u1 = f1;
      out.u2 = f2;
      return out;
    }
    ++out.steps;
    if (z1) {
      const long s1 = s_of(f1);
      if (s1 <= -c_hat) {
        f1 = downarrow(f1);
        c_hat += s1;
        out.shift += s1;
        out.a_exponent += s1;
      } else {
        f1 = set_union(FiniteSet::range(0, s1 - 1 + c_hat), translate(downarrow(f1), s1 + c_hat));
        out.shift += -c_hat;
        out.a_exponent += -c_hat;
        c_hat = 0;
      }
    } else {
      const long s2 = s_of(f2);
      if (s2 <= -c_hat) {
        f2 = downarrow(f2);
        c_hat += s2;
      } else {
        f2 = set_union(FiniteSet::range(0, s2 - 1 + c_hat), translate(downarrow(f2), s2 + c_hat));
        c_hat = 0;
      }
    }
  }
}

/// Limit-measure pair obtained by deleting the points of A from the Meixner
/// measure with positive integer parameter d.
struct DeletionPair {
  long c_hat;
  FiniteSet f1;
  FiniteSet f2;
};

inline DeletionPair deletion_pair(long d, const FiniteSet& a) {
  if (d < 1) throw SchemaError("deletion construction needs a positive integer parameter");
  if (a.empty()) throw SchemaError("deletion construction needs a nonempty set of deleted points");
  require_nonnegative(a, "A");
  const long u = a.max();
  std::vector<long> x;
  for (long b = 1; b <= u; ++b)
    if (!a.contains(b)) x.push_back(u - b);
  if (!a.contains(0)) x.push_back(u);
  for (long i = 1; i <= d - 1; ++i) x.push_back(u + i);
  return {-u, a, FiniteSet::of(std::move(x))};
}

}  // namespace krall

#endif  // KRALL_SETS_HPP
