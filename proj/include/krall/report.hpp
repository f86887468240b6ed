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

#ifndef KRALL_REPORT_HPP
#define KRALL_REPORT_HPP

#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

namespace krall {

enum class Status { Pass, Fail, Skipped };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

struct Check {
  std::string name;
  Status status = Status::Skipped;
  std::string witness;  // exact values, bounds or estimates behind the verdict
  double runtime_ms = 0;
};

struct CheckResult {
  bool ok = false;
  std::string witness;
};

/// Ordered list of checks for one family. Keys of the JSON form are sorted
/// (nlohmann::json uses std::map), so the output is canonical.
struct VerificationReport {
  std::string command;
  nlohmann::json spec;
  std::vector<Check> checks;
  nlohmann::json extra;  // command specific payload, omitted when null

  bool passed() const {
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == Status::Fail; });
  }

  void run(const std::string& name, const std::function<CheckResult()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult r = body();
    const auto t1 = std::chrono::steady_clock::now();
    checks.push_back({name, r.ok ? Status::Pass : Status::Fail, std::move(r.witness),
                      std::chrono::duration<double, std::milli>(t1 - t0).count()});
  }
  void skip(const std::string& name, const std::string& why) { checks.push_back({name, Status::Skipped, why, 0}); }

  nlohmann::json to_json(bool deterministic) const {
    nlohmann::json j;
    j["command"] = command;
    j["spec"] = spec;
    j["status"] = passed() ? "pass" : "fail";
    if (!extra.is_null()) j["result"] = extra;
    j["checks"] = nlohmann::json::array();
    for (const auto& c : checks) {
      nlohmann::json e{{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}};
      if (!deterministic) e["runtime_ms"] = c.runtime_ms;
      j["checks"].push_back(e);
    }
    return j;
  }

  std::string table(bool deterministic) const {
    std::size_t w = 5;
    for (const auto& c : checks) w = std::max(w, c.name.size());
    std::ostringstream os;
    os << command << " " << spec.dump() << "\n";
    for (const auto& c : checks) {
      os << std::left << std::setw(static_cast<int>(w)) << c.name << "  " << std::setw(7) << to_string(c.status);
      if (!deterministic) os << std::right << std::setw(10) << std::fixed << std::setprecision(1) << c.runtime_ms << " ms";
      os << "  " << c.witness << "\n";
    }
    os << (passed() ? "PASS" : "FAIL") << "\n";
    return os.str();
  }
};

}  // namespace krall

#endif  // KRALL_REPORT_HPP
