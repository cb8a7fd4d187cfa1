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


// Command-line front end.  Talks to the library only through the C API.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dspecies/dspecies.h"

namespace {

struct Options {
  std::string species = "poset";
  int size = 3;
  int edges = 2;
  int levels = 3;
  std::string out;
  std::string format = "json";
  std::string which = "all";
  std::string config;
  std::string input;
};

// Exit codes match dsp_status.
int report(dsp_status st) {
  if (st != DSP_OK && st != DSP_CHECK_FAILED) std::cerr << "error: " << dsp_last_error() << "\n";
  return static_cast<int>(st);
}

bool read_file(const std::string& path, std::string& text) {
  std::ifstream in(path);
  if (!in) return false;
  std::stringstream ss;
  ss << in.rdbuf();
  text = ss.str();
  return true;
}

// Values from --config fill in whatever was not given on the command line.
bool apply_config(const CLI::App& cmd, Options& o) {
  if (o.config.empty()) return true;
  std::string text;
  if (!read_file(o.config, text)) {
    std::cerr << "error: cannot read config '" << o.config << "'\n";
    return false;
  }
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    std::cerr << "error: config is not a JSON object\n";
    return false;
  }
  auto given = [&](const char* flag) {
    const CLI::Option* opt = cmd.get_option_no_throw(flag);
    return opt && opt->count() > 0;
  };
  try {
    if (j.contains("species") && !given("--species")) o.species = j["species"].get<std::string>();
    if (j.contains("size") && !given("--size")) o.size = j["size"].get<int>();
    if (j.contains("edges") && !given("--edges")) o.edges = j["edges"].get<int>();
    if (j.contains("levels") && !given("--levels")) o.levels = j["levels"].get<int>();
    if (j.contains("out") && !given("--out")) o.out = j["out"].get<std::string>();
    if (j.contains("format") && !given("--format")) o.format = j["format"].get<std::string>();
    if (j.contains("which") && !given("--which")) o.which = j["which"].get<std::string>();
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad config value: " << e.what() << "\n";
    return false;
  }
  return true;
}

int emit(const Options& o, const char* text) {
  if (o.out.empty()) {
    std::cout << text << "\n";
    return 0;
  }
  std::ofstream f(o.out);
  if (!f) {
    std::cerr << "error: cannot write '" << o.out << "'\n";
    return static_cast<int>(DSP_INVALID_ARGUMENT);
  }
  f << text << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incidence bialgebras of restriction species and their decomposition spaces"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dsp_version()));
  Options o;

  auto common = [&](CLI::App* c) {
    c->add_option("--species", o.species, "set, graph, poset, forest, linear, dposet or dag");
    c->add_option("--edges", o.edges, "bound on graph edges during enumeration")->check(CLI::NonNegativeNumber);
    c->add_option("--out", o.out, "write the result to this file");
    c->add_option("--config", o.config, "JSON file with default option values");
  };
  CLI::App* coproduct = app.add_subcommand("coproduct", "coproduct of a structure file");
  common(coproduct);
  coproduct->add_option("file", o.input, "structure JSON")->required();
  CLI::App* antipode = app.add_subcommand("antipode", "antipode of a structure file");
  common(antipode);
  antipode->add_option("file", o.input, "structure JSON")->required();
  CLI::App* check = app.add_subcommand("check", "run axiom and law suites");
  common(check);
  check->add_option("--which", o.which,
                    "all, simplicial, decomposition, segal, culf, finiteness, decalage, dec-coherence, "
                    "coalgebra or monoidal");
  check->add_option("-n,--levels", o.levels, "truncation level")->check(CLI::NonNegativeNumber);
  check->add_option("--size", o.size, "largest carrier")->check(CLI::NonNegativeNumber);
  CLI::App* table = app.add_subcommand("table", "basis counts and coproduct table");
  common(table);
  table->add_option("--size", o.size, "largest carrier")->check(CLI::NonNegativeNumber);
  table->add_option("--format", o.format, "json or csv");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(DSP_INVALID_ARGUMENT);
  }
  CLI::App* cmd = app.get_subcommands().front();
  if (!apply_config(*cmd, o)) return static_cast<int>(DSP_INVALID_ARGUMENT);

  dsp_species* s = nullptr;
  if (dsp_status st = dsp_species_create(o.species.c_str(), o.edges, &s)) return report(st);
  char* text = nullptr;
  dsp_status st = DSP_OK;
  if (cmd == coproduct || cmd == antipode) {
    std::string input;
    if (!read_file(o.input, input)) {
      dsp_species_destroy(s);
      std::cerr << "error: cannot read '" << o.input << "'\n";
      return static_cast<int>(DSP_PARSE_ERROR);
    }
    st = cmd == coproduct ? dsp_coproduct_json(s, input.c_str(), &text) : dsp_antipode_json(s, input.c_str(), &text);
  } else if (cmd == check) {
    st = dsp_check_json(s, o.which.c_str(), o.size, o.levels, &text);
  } else {
    st = dsp_table(s, o.size, o.format.c_str(), &text);
  }
  int code = report(st);
  if (text) {
    if (int e = emit(o, text)) code = code ? code : e;
    dsp_string_free(text);
  }
  dsp_species_destroy(s);
  return code;
}
