// Copyright 2026 The dspecies Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Exercises the C API and the command-line tool.  Links only the shared
// library.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "json.hpp"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "dspecies/dspecies.h"

using nlohmann::json;

namespace {

const std::string kData = DSPECIES_DATA;

struct Run {
  int code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Run cli(const std::string& args, const std::string& env = "") {
  const std::string out = "cli_test_stdout.txt";
  const std::string err = "cli_test_stderr.txt";
  const std::string cmd = env + " \"" DSPECIES_CLI "\" " + args + " > " + out + " 2> " + err;
  const int status = std::system(cmd.c_str());
  Run r;
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out);
  r.err = slurp(err);
  return r;
}

std::string data(const std::string& name) { return "\"" + kData + "/" + name + "\""; }

std::vector<std::string> coefficients(const json& j) {
  std::vector<std::string> out;
  for (const auto& t : j["terms"]) out.push_back(t["coeff"]);
  std::sort(out.begin(), out.end());
  return out;
}

struct Species {
  explicit Species(const char* name, int edges = 2) { status = dsp_species_create(name, edges, &handle); }
  ~Species() { dsp_species_destroy(handle); }
  dsp_species* handle = nullptr;
  dsp_status status;
};

struct Owned {
  ~Owned() { dsp_string_free(text); }
  char* text = nullptr;
};

}  // namespace

TEST_CASE("c api: species handles") {
  Species s("forest");
  REQUIRE(s.status == DSP_OK);
  CHECK(std::string(dsp_species_tag(s.handle)) == "forest");
  Species bad("unicorn");
  CHECK(bad.status == DSP_INVALID_ARGUMENT);
  CHECK(bad.handle == nullptr);
  CHECK(std::string(dsp_last_error()).find("unicorn") != std::string::npos);
  CHECK(dsp_species_create(nullptr, 0, nullptr) == DSP_INVALID_ARGUMENT);
  CHECK(std::string(dsp_version()) == "0.1.0");
  dsp_species_destroy(nullptr);
}

TEST_CASE("c api: coproduct and antipode") {
  Species set("set");
  Owned out;
  REQUIRE(dsp_coproduct_json(set.handle, R"({"elements":["x","y","z"]})", &out.text) == DSP_OK);
  CHECK(coefficients(json::parse(out.text)) == std::vector<std::string>{"1/1", "1/1", "3/1", "3/1"});

  Species forest("forest");
  Owned anti;
  REQUIRE(dsp_antipode_json(forest.handle, slurp(kData + "/tree2.json").c_str(), &anti.text) == DSP_OK);
  CHECK(coefficients(json::parse(anti.text)) == std::vector<std::string>{"-1/1", "1/1"});

  Owned err;
  CHECK(dsp_coproduct_json(set.handle, "{", &err.text) == DSP_PARSE_ERROR);
  CHECK(err.text == nullptr);
  CHECK(dsp_coproduct_json(set.handle, R"({"elements":["a"],"leq":[["a","a"]]})", &err.text) ==
        DSP_VALIDATION_ERROR);
  CHECK(dsp_coproduct_json(set.handle, nullptr, &err.text) == DSP_INVALID_ARGUMENT);

  Species linear("linear");
  CHECK(dsp_antipode_json(linear.handle, slurp(kData + "/chain2.json").c_str(), &err.text) == DSP_NOT_MONOIDAL);
}

TEST_CASE("c api: checks and tables") {
  Species poset("poset");
  Owned report;
  REQUIRE(dsp_check_json(poset.handle, "segal", 2, 2, &report.text) == DSP_OK);
  const json r = json::parse(report.text);
  CHECK(r["passed"] == true);
  CHECK(r["suites"][0]["status"] == "expected-fail: pass");

  Owned unknown;
  CHECK(dsp_check_json(poset.handle, "everything", 2, 2, &unknown.text) == DSP_INVALID_ARGUMENT);

  Owned table;
  REQUIRE(dsp_table(poset.handle, 3, "json", &table.text) == DSP_OK);
  CHECK(json::parse(table.text)["counts"] == json::array({1, 1, 2, 5}));
  Owned bad;
  CHECK(dsp_table(poset.handle, 3, "xml", &bad.text) == DSP_INVALID_ARGUMENT);
}

TEST_CASE("cli: coproduct") {
  const Run r = cli("coproduct --species set " + data("set3.json"));
  REQUIRE(r.code == 0);
  CHECK(coefficients(json::parse(r.out)) == std::vector<std::string>{"1/1", "1/1", "3/1", "3/1"});

  const Run tree = cli("coproduct --species forest " + data("tree2.json"));
  REQUIRE(tree.code == 0);
  CHECK(coefficients(json::parse(tree.out)) == std::vector<std::string>{"1/1", "1/1", "1/1"});

  const Run empty = cli("coproduct --species set " + data("empty_set.json"));
  REQUIRE(empty.code == 0);
  const json e = json::parse(empty.out);
  REQUIRE(e["terms"].size() == 1);
  CHECK(e["terms"][0]["left"] == e["terms"][0]["right"]);
  CHECK(e["terms"][0]["coeff"] == "1/1");
}

TEST_CASE("cli: exit codes") {
  CHECK(cli("coproduct --species set " + data("bad.json")).code == 2);
  CHECK(cli("coproduct --species set " + data("missing.json")).code == 2);
  const Run cycle = cli("coproduct --species poset " + data("cycle.json"));
  CHECK(cycle.code == 3);
  CHECK(cycle.err.find("error:") != std::string::npos);
  CHECK(cli("antipode --species linear " + data("chain2.json")).code == 7);
  CHECK(cli("coproduct --species unicorn " + data("set3.json")).code == 5);
  CHECK(cli("frobnicate").code == 5);
  CHECK(cli("table --species set --size 5", "DSPECIES_MAX_SIZE=4").code == 6);
}

TEST_CASE("cli: antipode") {
  // A set file is not a forest file.
  CHECK(cli("antipode --species forest " + data("set3.json")).code == 2);
  const Run tree = cli("antipode --species forest " + data("tree2.json"));
  REQUIRE(tree.code == 0);
  CHECK(coefficients(json::parse(tree.out)) == std::vector<std::string>{"-1/1", "1/1"});
  const Run unit = cli("antipode --species set " + data("empty_set.json"));
  REQUIRE(unit.code == 0);
  CHECK(coefficients(json::parse(unit.out)) == std::vector<std::string>{"1/1"});
}

TEST_CASE("cli: check") {
  const Run dec = cli("check --species graph --which decomposition -n 3 --size 2");
  CHECK(dec.code == 0);
  CHECK(json::parse(dec.out)["passed"] == true);
  const Run segal = cli("check --species poset --which segal --size 2");
  CHECK(segal.code == 0);
  CHECK(segal.out.find("expected-fail: pass") != std::string::npos);
  const Run seg_set = cli("check --species set --which segal --size 2");
  CHECK(seg_set.code == 0);
  CHECK(json::parse(seg_set.out)["suites"][0]["status"] == "pass");
  CHECK(cli("check --species set --which decalage --size 2").code == 0);
  CHECK(cli("check --species set --which nothing").code == 5);
}

TEST_CASE("cli: table, config precedence and determinism") {
  const Run csv = cli("table --config " + data("config.json"));
  REQUIRE(csv.code == 0);
  CHECK(csv.out.rfind("grade,count\n0,1\n1,1\n2,2\n", 0) == 0);
  const Run js = cli("table --config " + data("config.json") + " --format json --size 3");
  REQUIRE(js.code == 0);
  const json t = json::parse(js.out);
  CHECK(t["species"] == "forest");
  CHECK(t["counts"] == json::array({1, 1, 2, 4}));
  CHECK(cli("table --species set --size 4").out == cli("table --species set --size 4").out);
  CHECK(json::parse(cli("table --species set --size 4").out)["rows"].size() == 5);

  const std::string path = "cli_test_table.csv";
  std::remove(path.c_str());
  REQUIRE(cli("table --species poset --size 3 --format csv --out " + path).code == 0);
  CHECK(slurp(path).rfind("grade,count\n0,1\n1,1\n2,2\n3,5\n", 0) == 0);
}
