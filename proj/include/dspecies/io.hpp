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


#ifndef DSPECIES_IO_HPP
#define DSPECIES_IO_HPP

// JSON structure files, JSON output of module and tensor elements, and basis
// tables.
//
// Structure formats:
//   set     {"elements":["a","b"]}
//   poset   {"elements":["a","b"],"leq":[["a","b"]]}  (also linear)
//   forest  {"nodes":["x","r"],"parent":{"x":"r","r":null}}
//   graph   {"vertices":["a","b"],"edges":[["a","b"],["a","a"]]}
//   dposet  {"elements":[...],"leq":[...],"leq2":[...]}
//   dag     {"vertices":[...],"edges":[["a","b"]]}

#include <string>

#include "dspecies/coalg.hpp"

namespace dsp {

/// Throws ParseError on malformed JSON or missing fields and
/// ValidationError on invalid structures.
Structure parse_structure(const SpeciesDef& s, const std::string& text);
Structure read_structure_file(const SpeciesDef& s, const std::string& path);

/// {"terms":[{"left":key,"right":key,"coeff":"n/d"}],"basis":{key:description}}
std::string to_json(const Coalgebra& c, const TensorElement& t);
/// {"terms":[{"key":key,"coeff":"n/d"}],"basis":{key:description}}
std::string to_json(const Coalgebra& c, const ModuleElement& m);

/// "n/d" with d >= 1.
std::string rational_string(const mpq_class& q);

enum class TableFormat { kJson, kCsv };
TableFormat parse_table_format(const std::string& s);

/// Per-grade basis counts and the coproduct of every basis element up to
/// max_size, in (size, key) order.
std::string basis_table(const Coalgebra& c, int max_size, TableFormat f);

}  // namespace dsp

#endif  // DSPECIES_IO_HPP
