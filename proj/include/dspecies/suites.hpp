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


#ifndef DSPECIES_SUITES_HPP
#define DSPECIES_SUITES_HPP

// Named groups of checks with expected-failure bookkeeping, as run by the
// command-line tool.

#include <string>
#include <vector>

#include "dspecies/coalg.hpp"
#include "dspecies/decomp.hpp"

namespace dsp {

struct SuiteConfig {
  int size = 3;
  int levels = 3;
  EnumBounds decoration;
};

enum class SuiteStatus { kPass, kFail, kExpectedFail, kUnexpectedPass };

struct SuiteResult {
  AxiomReport report;
  bool expected_fail = false;

  SuiteStatus status() const;
  bool ok() const;
};

/// "simplicial", "decomposition", "segal", "culf", "finiteness", "decalage",
/// "dec-coherence", "coalgebra", "monoidal".
std::vector<std::string> suite_names();

/// Runs one named suite, or every suite for "all".  Throws InvalidArgument on
/// unknown names.
std::vector<SuiteResult> run_suites(const SpeciesPtr& s, const std::string& which, const SuiteConfig& c);

/// Sets and linear orders give Segal spaces; the other built-ins do not.
bool segal_expected(const SpeciesDef& s);
/// Ordinary species and linear orders give cocommutative coalgebras.
bool cocommutative_expected(const SpeciesDef& s);

const char* to_string(SuiteStatus s);
/// {"species":..., "passed":..., "suites":[{"suite","status","report"}]}
std::string to_json(const SpeciesDef& s, const std::vector<SuiteResult>& results);

}  // namespace dsp

#endif  // DSPECIES_SUITES_HPP
