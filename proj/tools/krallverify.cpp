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

// krallverify: batch verification of Krall and exceptional polynomial families.
//
//   krallverify verify catalog/krall-meixner-11.json
//   krallverify reproduce laguerre-example --deterministic
//   krallverify find-operator catalog/hahn-deleted-0.json --r 2
//   krallverify list-examples
//
// Exit codes: 0 all checks pass, 1 a check failed, 2 bad input, 3 internal
// degeneracy.

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>

#include "krall/suites.hpp"

#ifndef KRALL_CATALOG_DIR
#define KRALL_CATALOG_DIR "catalog"
#endif

namespace fs = std::filesystem;
using namespace krall;

namespace {

struct Output {
  std::string out;
  bool json = false;
  bool deterministic = false;
};

int emit(const VerificationReport& rep, const Output& o) {
  const std::string json = rep.to_json(o.deterministic).dump(2) + "\n";
  if (!o.out.empty()) {
    std::ofstream f(o.out);
    if (!f) throw SchemaError("cannot write '" + o.out + "'");
    f << json;
  }
  std::cout << (o.json ? json : rep.table(o.deterministic));
  return rep.passed() ? 0 : 1;
}

int list_examples() {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(KRALL_CATALOG_DIR))
    if (e.path().extension() == ".json") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const auto& p : files) {
    const auto j = read_json_file(p.string());
    std::cout << p.filename().string() << "  " << family_name(parse_family_spec(j));
    if (j.contains("note")) std::cout << "  " << j["note"].get<std::string>();
    std::cout << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verify Krall and exceptional orthogonal polynomial families"};
  app.require_subcommand(1);
  Output out;
  auto add_output = [&](CLI::App* c) {
    c->add_option("--out", out.out, "Also write the JSON report to this path");
    c->add_flag("--json", out.json, "Print the JSON report instead of the table");
    c->add_flag("--deterministic", out.deterministic, "Omit timings so output is byte-stable");
  };

  std::string spec_file;
  SuiteOptions so;
  long n_max = -1;
  auto* verify = app.add_subcommand("verify", "Run the verification suite for a family spec");
  verify->add_option("spec", spec_file, "Family spec JSON file")->required();
  verify->add_option("--n-max", n_max, "Largest index checked");
  verify->add_flag("--expect-inadmissible", so.expect_inadmissible, "Pass only if the measure is not positive");
  add_output(verify);

  std::string target;
  auto* reproduce = app.add_subcommand("reproduce", "Reproduce a worked example");
  reproduce->add_option("target", target, "Example name")->required()->check(CLI::IsMember({"laguerre-example"}));
  reproduce->add_option("--n-max", n_max, "Largest index for eigen and orthogonality checks");
  add_output(reproduce);

  OperatorOptions oo;
  long r = -1, d = -1;
  auto* find = app.add_subcommand("find-operator", "Recover a banded difference operator for a family");
  find->add_option("spec", spec_file, "Family spec JSON file")->required();
  find->add_option("--r", r, "Band radius (default: predicted order)");
  find->add_option("--D", d, "Degree cap of the coefficients (default 2r + max(deg Omega, 2))");
  add_output(find);

  auto* list = app.add_subcommand("list-examples", "List the bundled family specs");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (n_max >= 0) so.n_max = n_max;
    if (*verify) return emit(verify_family(read_json_file(spec_file), so), out);
    if (*reproduce) return emit(reproduce_laguerre_example(n_max >= 0 ? n_max : 6), out);
    if (*find) {
      if (r >= 0) oo.r = r;
      if (d >= 0) oo.d = d;
      return emit(find_operator_report(read_json_file(spec_file), oo), out);
    }
    if (*list) return list_examples();
  } catch (const SchemaError& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "schema error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
