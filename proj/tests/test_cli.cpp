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

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include "krall/suites.hpp"

using namespace krall;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

json catalog_spec(const std::string& name) { return read_json_file(std::string(KRALL_CATALOG_DIR) + "/" + name); }

std::vector<fs::path> catalog_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(KRALL_CATALOG_DIR))
    if (e.path().extension() == ".json") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

const Check& find_check(const VerificationReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c;
  FAIL("no check named " << name);
  return rep.checks.front();
}

#ifdef KRALLVERIFY_BIN
struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const fs::path tmp = fs::temp_directory_path() / "krallverify_stdout.txt";
  const std::string cmd = std::string(KRALLVERIFY_BIN) + " " + args + " > " + tmp.string() + " 2>/dev/null";
  const int st = std::system(cmd.c_str());
  std::ifstream in(tmp);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, ss.str()};
}

fs::path write_temp(const std::string& name, const std::string& body) {
  const fs::path p = fs::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p;
}
#endif

}  // namespace

TEST_CASE("spec schema") {
  const json good = json::parse(R"({"family":"krall-meixner","a":"1/2","c_hat":-1,"F1":[1],"F2":[1]})");
  auto s = std::get<KrallMeixnerSpec>(parse_family_spec(good));
  CHECK(s.a == Rational(1, 2));
  CHECK(s.c_hat == -1);
  CHECK(s.f1 == FiniteSet{1});
  auto bad = [](const char* text) { return parse_family_spec(json::parse(text)); };
  CHECK_THROWS_AS(bad(R"({"family":"krall-meixner","a":"1/2","c_hat":-1,"F1":[2,1],"F2":[1]})"), SchemaError);
  CHECK_THROWS_AS(bad(R"({"family":"krall-meixner","a":"1/2","c_hat":-1,"F1":[1,1],"F2":[1]})"), SchemaError);
  CHECK_THROWS_AS(bad(R"({"family":"krall-meixner","a":"1/2","c_hat":-1,"F1":[1]})"), SchemaError);
  CHECK_THROWS_AS(bad(R"({"family":"krall-meixner","a":"1/2","c_hat":-1,"F1":[1],"F2":[1],"G":[]})"), SchemaError);
  CHECK_THROWS_AS(bad(R"({"family":"krall-meixner","a":"1/0","c_hat":-1,"F1":[1],"F2":[1]})"), SchemaError);
  CHECK_THROWS_AS(bad(R"({"family":"krall-meixner","a":0.5,"c_hat":-1,"F1":[1],"F2":[1]})"), SchemaError);
  CHECK_THROWS_AS(bad(R"({"family":"krall-meixner","a":"1/2","c_hat":"-1","F1":[1],"F2":[1]})"), SchemaError);
  CHECK_THROWS_AS(bad(R"({"family":"krall-meixner","a":"1/2","c_hat":-1,"F1":["1"],"F2":[1]})"), SchemaError);
  CHECK_THROWS_AS(bad(R"({"family":"charlier","a":"1/2"})"), SchemaError);
  CHECK_THROWS_AS(bad(R"([1, 2])"), SchemaError);
  auto h = std::get<HahnDeletedSpec>(bad(R"({"family":"hahn-deleted","c":1,"d":"1/2","N":8,"A":[0]})"));
  CHECK(h.b.empty());
  CHECK(h.d == Rational(1, 2));
}

TEST_CASE("catalog") {
  const auto files = catalog_files();
  CHECK(files.size() >= 12);
  std::set<std::string> kinds;
  for (const auto& f : files) {
    INFO(f.filename().string());
    const json j = read_json_file(f.string());
    kinds.insert(family_name(parse_family_spec(j)));
    const bool negative = f.filename().string().find("inadmissible") != std::string::npos;
    SuiteOptions o;
    o.expect_inadmissible = negative;
    const auto rep = verify_family(j, o);
    CHECK(rep.passed());
    for (const auto& c : rep.checks) CHECK(!c.witness.empty());
    if (negative) CHECK(!verify_family(j).passed());
  }
  CHECK(kinds.size() == 7);
}

TEST_CASE("failed checks carry witnesses") {
  const auto rep = verify_family(catalog_spec("krall-meixner-inadmissible.json"));
  const auto& c = find_check(rep, "admissibility");
  CHECK(c.status == Status::Fail);
  CHECK(c.witness.find("negative mass at x=0") != std::string::npos);
  const json j = rep.to_json(true);
  CHECK(j["status"] == "fail");
}

TEST_CASE("deterministic reports") {
  const json spec = catalog_spec("krall-meixner-11.json");
  const auto a = verify_family(spec).to_json(true).dump();
  const auto b = verify_family(spec).to_json(true).dump();
  CHECK(a == b);
  CHECK(a.find("runtime_ms") == std::string::npos);
  CHECK(verify_family(spec).to_json(false).dump().find("runtime_ms") != std::string::npos);
  // Canonical key order regardless of input order.
  const json shuffled = json::parse(R"({"F2":[1],"F1":[1],"c_hat":-1,"note":"basic Krall-Meixner family","a":"1/2","family":"krall-meixner"})");
  CHECK(verify_family(shuffled).to_json(true).dump() == a);
}

TEST_CASE("n-max option") {
  SuiteOptions o;
  o.n_max = 4;
  const auto rep = verify_family(catalog_spec("krall-meixner-11.json"), o);
  CHECK(find_check(rep, "orthogonality").witness == "10 off-diagonal products exactly 0");
}

TEST_CASE("laguerre reproduction") {
  const auto rep = reproduce_laguerre_example();
  CHECK(rep.passed());
  CHECK(rep.extra["omega"] == "±(x^2 + 1)");
  CHECK(rep.extra["weight"] == "e^{-x}/(x^2 + 1)^2");
  CHECK(rep.extra["operator"] ==
        "x p'' + h1 p' + h0 p, h1 = (-x^3 - 3*x^2 - x + 1)/(x^2 + 1), h0 = (2*x - 2)/(x^2 + 1)");
  CHECK(rep.extra["index-set"] == "{1, 3, 4, 5, ...}");
  CHECK(rep.extra["norm"] == "1");
  CHECK(find_check(rep, "eigen-relations").witness == "exact for n in {1, 3, 4, 5, 6}");
  const auto nine = reproduce_laguerre_example(9);
  CHECK(nine.passed());
  CHECK(find_check(nine, "eigen-relations").witness == "exact for n in {1, 3, 4, 5, 6, 7, 8, 9}");
}

TEST_CASE("operator search reports") {
  const json km = catalog_spec("krall-meixner-11.json");
  const auto rep = find_operator_report(km);
  CHECK(rep.passed());
  CHECK(rep.extra["dimension"] == 2);
  CHECK(rep.extra["operator"]["r"] == 3);
  CHECK(rep.extra["operator"]["coeffs"].size() == 7);
  CHECK(rep.extra["operator"]["coeffs"]["3"].size() == 4);
  OperatorOptions low;
  low.r = 1;
  CHECK(!find_operator_report(km, low).passed());
  const auto hahn = find_operator_report(catalog_spec("hahn-deleted-0.json"));
  CHECK(hahn.passed());
  CHECK(hahn.extra["operator"]["r"] == 2);
  CHECK_THROWS_AS(find_operator_report(catalog_spec("laguerre-example.json")), SchemaError);
}

#ifdef KRALLVERIFY_BIN
TEST_CASE("command line") {
  const std::string cat = std::string(KRALL_CATALOG_DIR) + "/";
  CHECK(run_cli("verify " + cat + "krall-meixner-11.json").code == 0);
  CHECK(run_cli("verify " + cat + "krall-meixner-inadmissible.json").code == 1);
  CHECK(run_cli("verify " + cat + "krall-meixner-inadmissible.json --expect-inadmissible").code == 0);
  const auto unsorted =
      write_temp("krall_unsorted.json", R"({"family":"krall-meixner","a":"1/2","c_hat":-1,"F1":[2,1],"F2":[1]})");
  CHECK(run_cli("verify " + unsorted.string()).code == 2);
  CHECK(run_cli("verify " + (fs::temp_directory_path() / "krall_missing_file.json").string()).code == 2);
  // Omega vanishes at n = 2, so the determinant drops degree.
  const auto degenerate =
      write_temp("krall_degenerate.json", R"({"family":"krall-meixner","a":"1/2","c_hat":0,"F1":[1],"F2":[0,1]})");
  CHECK(run_cli("verify " + degenerate.string()).code == 3);
  CHECK(run_cli("no-such-command").code == 2);

  const auto r1 = run_cli("reproduce laguerre-example --deterministic --json");
  const auto r2 = run_cli("reproduce laguerre-example --deterministic --json");
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(json::parse(r1.out)["result"]["omega"] == "±(x^2 + 1)");
  CHECK(run_cli("reproduce laguerre-example --n-max 9").code == 0);

  const auto out = fs::temp_directory_path() / "krall_report.json";
  fs::remove(out);
  CHECK(run_cli("verify " + cat + "hahn-deleted-0.json --deterministic --out " + out.string()).code == 0);
  CHECK(read_json_file(out.string())["status"] == "pass");

  CHECK(run_cli("find-operator " + cat + "krall-meixner-11.json --r 3").code == 0);
  CHECK(run_cli("find-operator " + cat + "krall-meixner-11.json --r 1").code == 1);
  CHECK(run_cli("find-operator " + cat + "krall-hahn-both.json").code == 0);
  const auto listing = run_cli("list-examples");
  CHECK(listing.code == 0);
  CHECK(listing.out.find("krall-meixner-11.json") != std::string::npos);
}
#endif
