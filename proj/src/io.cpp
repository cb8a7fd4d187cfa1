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


#include "dspecies/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "dspecies/error.hpp"

namespace dsp {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* name) {
  if (!j.is_object()) throw ParseError("structure must be a JSON object");
  auto it = j.find(name);
  if (it == j.end()) throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

std::vector<std::string> string_list(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (!e.is_string()) throw ParseError(std::string(what) + " must contain strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> pair_list(const json& j, const char* what) {
  std::vector<std::pair<std::string, std::string>> out;
  if (j.is_null()) return out;
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array of pairs");
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
      throw ParseError(std::string(what) + " entries must be pairs of labels");
    out.emplace_back(e[0].get<std::string>(), e[1].get<std::string>());
  }
  return out;
}

json optional_field(const json& j, const char* name) {
  auto it = j.find(name);
  return it == j.end() ? json(nullptr) : *it;
}

int position(const FinPoset& p, const std::string& l) {
  const int i = p.index_of(l);
  if (i < 0) throw ValidationError("unknown label '" + l + "'");
  return i;
}

}  // namespace

Structure parse_structure(const SpeciesDef& s, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const std::string tag = s.tag();
  if (tag == "graph") {
    FinPoset c = FinPoset::discrete(string_list(field(j, "vertices"), "vertices"));
    const int n = c.size();
    Decoration d{std::vector<int>(static_cast<std::size_t>(n * n), 0), 0};
    for (const auto& [a, b] : pair_list(field(j, "edges"), "edges")) {
      const int x = position(c, a), y = position(c, b);
      ++d.cells[x * n + y];
      if (x != y) ++d.cells[y * n + x];
    }
    return make_structure(s, std::move(c), std::move(d));
  }
  if (tag == "dag") {
    const auto labels = string_list(field(j, "vertices"), "vertices");
    const auto edges = pair_list(field(j, "edges"), "edges");
    for (const auto& [a, b] : edges)
      if (a == b) throw ValidationError("digraph has a loop at '" + a + "'");
    FinPoset c = FinPoset::make(labels, edges);
    const int n = c.size();
    Decoration d{std::vector<int>(static_cast<std::size_t>(n * n), 0), 0};
    for (const auto& [a, b] : edges) ++d.cells[position(c, a) * n + position(c, b)];
    return make_structure(s, std::move(c), std::move(d));
  }
  if (tag == "forest") {
    const auto labels = string_list(field(j, "nodes"), "nodes");
    const json& parent = field(j, "parent");
    if (!parent.is_object()) throw ParseError("parent must be an object");
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& [child, p] : parent.items()) {
      if (p.is_null()) continue;
      if (!p.is_string()) throw ParseError("parent of '" + child + "' must be a label or null");
      pairs.emplace_back(child, p.get<std::string>());
    }
    FinPoset c = FinPoset::make(labels, pairs);
    for (const auto& [child, p] : parent.items()) position(c, child);
    return make_structure(s, std::move(c), {});
  }
  if (tag == "set") {
    FinPoset c = FinPoset::discrete(string_list(field(j, "elements"), "elements"));
    if (!pair_list(optional_field(j, "leq"), "leq").empty())
      throw ValidationError("sets carry no order relations");
    return make_structure(s, std::move(c), {});
  }
  const auto labels = string_list(field(j, "elements"), "elements");
  FinPoset c = FinPoset::make(labels, pair_list(optional_field(j, "leq"), "leq"));
  Decoration d;
  if (tag == "dposet") {
    FinPoset q = FinPoset::make(labels, pair_list(field(j, "leq2"), "leq2"));
    // Same label order in both orders.
    d.cells.assign(q.leq_matrix().begin(), q.leq_matrix().end());
  }
  return make_structure(s, std::move(c), std::move(d));
}

Structure read_structure_file(const SpeciesDef& s, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_structure(s, ss.str());
}

std::string rational_string(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

void add_basis(const Coalgebra& c, json& basis, const Key& k) {
  if (!basis.contains(k)) basis[k] = describe(*c.species(), c.representative(k));
}

}  // namespace

std::string to_json(const Coalgebra& c, const TensorElement& t) {
  json j{{"terms", json::array()}, {"basis", json::object()}};
  for (const auto& [p, v] : t.terms) {
    j["terms"].push_back({{"left", p.first}, {"right", p.second}, {"coeff", rational_string(v)}});
    add_basis(c, j["basis"], p.first);
    add_basis(c, j["basis"], p.second);
  }
  return j.dump();
}

std::string to_json(const Coalgebra& c, const ModuleElement& m) {
  json j{{"terms", json::array()}, {"basis", json::object()}};
  for (const auto& [k, v] : m.terms) {
    j["terms"].push_back({{"key", k}, {"coeff", rational_string(v)}});
    add_basis(c, j["basis"], k);
  }
  return j.dump();
}

TableFormat parse_table_format(const std::string& s) {
  if (s == "json") return TableFormat::kJson;
  if (s == "csv") return TableFormat::kCsv;
  throw InvalidArgument("unknown table format '" + s + "'");
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

std::string basis_table(const Coalgebra& c, int max_size, TableFormat f) {
  if (max_size < 0) throw InvalidArgument("negative size bound");
  const std::vector<Key> keys = basis_keys(*c.species(), max_size, c.bounds());
  std::vector<int> counts(static_cast<std::size_t>(max_size + 1), 0);
  for (const Key& k : keys) ++counts[static_cast<std::size_t>(key_size(k))];
  auto d = [&](const Key& k) { return describe(*c.species(), c.representative(k)); };
  if (f == TableFormat::kJson) {
    json j{{"species", c.species()->tag()}, {"counts", counts}, {"rows", json::array()}};
    for (const Key& k : keys) {
      json row{{"key", k}, {"size", key_size(k)}, {"description", d(k)}, {"coproduct", json::array()}};
      for (const auto& [p, v] : c.coproduct(k).terms)
        row["coproduct"].push_back(
            {{"left", d(p.first)}, {"right", d(p.second)}, {"coeff", rational_string(v)}});
      j["rows"].push_back(std::move(row));
    }
    return j.dump(1);
  }
  std::ostringstream out;
  out << "grade,count\n";
  for (std::size_t g = 0; g < counts.size(); ++g) out << g << "," << counts[g] << "\n";
  out << "\nsize,key,description,coproduct\n";
  for (const Key& k : keys) {
    std::string terms;
    for (const auto& [p, v] : c.coproduct(k).terms) {
      if (!terms.empty()) terms += ";";
      terms += rational_string(v) + " " + d(p.first) + " (x) " + d(p.second);
    }
    out << key_size(k) << "," << k << "," << csv_field(d(k)) << "," << csv_field(terms) << "\n";
  }
  return out.str();
}

}  // namespace dsp
