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

#ifndef KRALL_SPEC_IO_HPP
#define KRALL_SPEC_IO_HPP

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "rational.hpp"
#include "sets.hpp"

namespace krall {

struct MeixnerSpec {
  Rational a, c;
};
struct KrallMeixnerSpec {
  Rational a;
  long c_hat;
  FiniteSet f1, f2;
};
/// Meixner measure rho_{a,d} with the points of A removed.
struct MeixnerDeletedSpec {
  Rational a;
  long d;
  FiniteSet deleted;
};
struct ExcMeixnerSpec {
  Rational a, c_hat;
  FiniteSet f1, f2;
};
struct ExcLaguerreSpec {
  Rational alpha_hat;
  FiniteSet f1, f2;
};
struct KrallHahnSpec {
  Rational a_hat, b_hat;
  long big_n;
  FiniteSet f1, f2, f3, f4;
};
struct HahnDeletedSpec {
  long c;
  Rational d;
  long big_n;
  FiniteSet a, b;
};

using FamilySpec = std::variant<MeixnerSpec, KrallMeixnerSpec, MeixnerDeletedSpec, ExcMeixnerSpec, ExcLaguerreSpec,
                                KrallHahnSpec, HahnDeletedSpec>;

namespace detail {

inline Rational json_rational(const nlohmann::json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) {
    try {
      return parse_rational(v.get<std::string>());
    } catch (const ParseError& e) {
      throw SchemaError("'" + key + "': " + e.what());
    }
  }
  throw SchemaError("'" + key + "' must be an integer or a rational string such as \"1/2\"");
}

inline long json_long(const nlohmann::json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_number_integer()) throw SchemaError("'" + key + "' must be an integer");
  return v.get<long>();
}

inline FiniteSet json_set(const nlohmann::json& j, const std::string& key) {
  const auto& v = j.at(key);
  if (!v.is_array()) throw SchemaError("'" + key + "' must be an array of integers");
  std::vector<long> out;
  for (const auto& e : v) {
    if (!e.is_number_integer()) throw SchemaError("'" + key + "' must contain integers only");
    const long x = e.get<long>();
    if (!out.empty() && x <= out.back()) throw SchemaError("'" + key + "' must be strictly increasing");
    out.push_back(x);
  }
  return FiniteSet(out);
}

inline void require_keys(const nlohmann::json& j, const std::vector<std::string>& required,
                         const std::vector<std::string>& optional = {}) {
  std::set<std::string> allowed{"family", "name", "note"};
  for (const auto& k : required) {
    if (!j.contains(k)) throw SchemaError("missing key '" + k + "'");
    allowed.insert(k);
  }
  allowed.insert(optional.begin(), optional.end());
  for (const auto& [k, v] : j.items())
    if (!allowed.count(k)) throw SchemaError("unknown key '" + k + "'");
}

}  // namespace detail

/// Validate a family spec object. Structural problems raise SchemaError;
/// mathematical preconditions are left to the family constructors.
inline FamilySpec parse_family_spec(const nlohmann::json& j) {
  using namespace detail;
  if (!j.is_object()) throw SchemaError("family spec must be a JSON object");
  if (!j.contains("family") || !j["family"].is_string()) throw SchemaError("missing string key 'family'");
  const std::string fam = j["family"].get<std::string>();
  if (fam == "meixner") {
    require_keys(j, {"a", "c"});
    return MeixnerSpec{json_rational(j, "a"), json_rational(j, "c")};
  }
  if (fam == "krall-meixner") {
    require_keys(j, {"a", "c_hat", "F1", "F2"});
    return KrallMeixnerSpec{json_rational(j, "a"), json_long(j, "c_hat"), json_set(j, "F1"), json_set(j, "F2")};
  }
  if (fam == "meixner-deleted") {
    require_keys(j, {"a", "d", "A"});
    return MeixnerDeletedSpec{json_rational(j, "a"), json_long(j, "d"), json_set(j, "A")};
  }
  if (fam == "exceptional-meixner") {
    require_keys(j, {"a", "c_hat", "F1", "F2"});
    return ExcMeixnerSpec{json_rational(j, "a"), json_rational(j, "c_hat"), json_set(j, "F1"), json_set(j, "F2")};
  }
  if (fam == "exceptional-laguerre") {
    require_keys(j, {"alpha_hat", "F1", "F2"});
    return ExcLaguerreSpec{json_rational(j, "alpha_hat"), json_set(j, "F1"), json_set(j, "F2")};
  }
  if (fam == "krall-hahn") {
    require_keys(j, {"a_hat", "b", "N", "F1", "F2", "F3", "F4"});
    return KrallHahnSpec{json_rational(j, "a_hat"), json_rational(j, "b"), json_long(j, "N"),
                         json_set(j, "F1"),         json_set(j, "F2"),    json_set(j, "F3"),
                         json_set(j, "F4")};
  }
  if (fam == "hahn-deleted") {
    require_keys(j, {"c", "d", "N", "A"}, {"B"});
    return HahnDeletedSpec{json_long(j, "c"), json_rational(j, "d"), json_long(j, "N"), json_set(j, "A"),
                           j.contains("B") ? json_set(j, "B") : FiniteSet()};
  }
  throw SchemaError("unknown family '" + fam + "'");
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open '" + path + "'");
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError("'" + path + "' is not valid JSON: " + e.what());
  }
}

inline std::string family_name(const FamilySpec& s) {
  static const char* names[] = {"meixner",      "krall-meixner", "meixner-deleted", "exceptional-meixner",
                                "exceptional-laguerre", "krall-hahn",   "hahn-deleted"};
  return names[s.index()];
}

}  // namespace krall

#endif  // KRALL_SPEC_IO_HPP
