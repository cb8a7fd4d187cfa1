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


#include <algorithm>
#include <map>

#include "dspecies/error.hpp"
#include "dspecies/species.hpp"

namespace dsp {

namespace {

class Sets : public SpeciesDef {
 public:
  std::string tag() const override { return "set"; }
  bool directed() const override { return false; }
};

// Multigraphs with loops on a discrete carrier.  cells[i][j] is the number
// of edges between i and j; the diagonal counts loops.
class Graphs : public SpeciesDef {
 public:
  std::string tag() const override { return "graph"; }
  bool directed() const override { return false; }
  bool has_cells() const override { return true; }

  void validate(const FinPoset& c, const Decoration& d) const override {
    SpeciesDef::validate(c, d);
    const int n = c.size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (d.cells[i * n + j] < 0) throw ValidationError("negative edge multiplicity");
        if (d.cells[i * n + j] != d.cells[j * n + i])
          throw ValidationError("graph edge matrix is not symmetric");
      }
  }

  std::vector<Decoration> decorations(const FinPoset& c, const EnumBounds& b) const override {
    if (!supports(c)) return {};
    const int n = c.size();
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) slots.emplace_back(i, j);
    std::vector<Decoration> out;
    Decoration d{std::vector<int>(static_cast<std::size_t>(n * n), 0), 0};
    // Multisets of at most b.edges slots, as non-decreasing slot sequences.
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
      out.push_back(d);
      if (left == 0) return;
      for (std::size_t s = from; s < slots.size(); ++s) {
        auto [i, j] = slots[s];
        ++d.cells[i * n + j];
        if (i != j) ++d.cells[j * n + i];
        self(self, s, left - 1);
        --d.cells[i * n + j];
        if (i != j) --d.cells[j * n + i];
      }
    };
    rec(rec, 0, b.edges);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::string describe(const Structure& x) const override {
    std::string out;
    const int n = x.size();
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        for (int k = 0; k < x.decoration.cells[i * n + j]; ++k)
          out += (out.empty() ? "" : ",") + x.carrier.label(i) + "-" + x.carrier.label(j);
    return out;
  }
};

class Posets : public SpeciesDef {
 public:
  std::string tag() const override { return "poset"; }
  bool directed() const override { return true; }
};

// Roots are maximal: every principal up-set is a chain.
class Forests : public SpeciesDef {
 public:
  std::string tag() const override { return "forest"; }
  bool directed() const override { return true; }
  bool supports(const FinPoset& c) const override {
    for (int i = 0; i < c.size(); ++i) {
      const Mask up = c.up(i);
      for (int j = 0; j < c.size(); ++j)
        if ((up >> j & 1) && (up & ~(c.up(j) | c.down(j)))) return false;
    }
    return true;
  }
  void validate(const FinPoset& c, const Decoration& d) const override {
    if (!supports(c)) throw ValidationError("carrier is not a forest: some element has two incomparable parents");
    SpeciesDef::validate(c, d);
  }
};

class LinearOrders : public SpeciesDef {
 public:
  std::string tag() const override { return "linear"; }
  bool directed() const override { return true; }
  // A disjoint union of two non-empty chains is not a chain.
  bool monoidal() const override { return false; }
  bool supports(const FinPoset& c) const override { return c.is_chain(); }
  void validate(const FinPoset& c, const Decoration& d) const override {
    if (!supports(c)) throw ValidationError("carrier is not a linear order");
    SpeciesDef::validate(c, d);
  }
};

// A second, unconstrained partial order on the same elements.
class DoublePosets : public SpeciesDef {
 public:
  std::string tag() const override { return "dposet"; }
  bool directed() const override { return true; }
  bool has_cells() const override { return true; }

  void validate(const FinPoset& c, const Decoration& d) const override {
    SpeciesDef::validate(c, d);
    std::vector<std::uint8_t> m(d.cells.begin(), d.cells.end());
    for (int v : d.cells)
      if (v != 0 && v != 1) throw ValidationError("second order must be a 0/1 matrix");
    try {
      FinPoset::from_matrix(c.labels(), m);
    } catch (const ValidationError& e) {
      throw ValidationError(std::string("second order: ") + e.what());
    }
  }

  std::vector<Decoration> decorations(const FinPoset& c, const EnumBounds&) const override {
    std::vector<Decoration> out;
    for (const auto& q : all_posets(c.labels()))
      out.push_back({std::vector<int>(q.leq_matrix().begin(), q.leq_matrix().end()), 0});
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string describe(const Structure& x) const override {
    std::vector<std::uint8_t> m(x.decoration.cells.begin(), x.decoration.cells.end());
    FinPoset q = FinPoset::from_matrix(x.carrier.labels(), m);
    std::string out;
    for (auto [a, b] : q.covers()) out += (out.empty() ? "" : ",") + q.label(a) + "<<" + q.label(b);
    return out;
  }
};

// Simple directed edges whose reachability order is the carrier order.
class AcyclicDigraphs : public SpeciesDef {
 public:
  std::string tag() const override { return "dag"; }
  bool directed() const override { return true; }
  bool has_cells() const override { return true; }

  void validate(const FinPoset& c, const Decoration& d) const override {
    SpeciesDef::validate(c, d);
    const int n = c.size();
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const int v = d.cells[i * n + j];
        if (v != 0 && v != 1) throw ValidationError("digraph edges must be simple");
        if (v && i == j) throw ValidationError("digraph has a loop at '" + c.label(i) + "'");
        if (v) edges.emplace_back(c.label(i), c.label(j));
      }
    FinPoset reach = FinPoset::make(c.labels(), edges);
    if (!(reach.leq_matrix() == c.leq_matrix()))
      throw ValidationError("reachability of the digraph differs from the carrier order");
  }

  std::vector<Decoration> decorations(const FinPoset& c, const EnumBounds&) const override {
    const int n = c.size();
    std::vector<int> base(static_cast<std::size_t>(n * n), 0);
    for (auto [a, b] : c.covers()) base[a * n + b] = 1;
    std::vector<int> optional;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (c.less(i, j) && !base[i * n + j]) optional.push_back(i * n + j);
    std::vector<Decoration> out;
    for (std::uint32_t s = 0; s < (1u << optional.size()); ++s) {
      Decoration d{base, 0};
      for (std::size_t k = 0; k < optional.size(); ++k)
        if (s >> k & 1) d.cells[optional[k]] = 1;
      out.push_back(std::move(d));
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string describe(const Structure& x) const override {
    std::string out;
    const int n = x.size();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (x.decoration.cells[i * n + j])
          out += (out.empty() ? "" : ",") + x.carrier.label(i) + "->" + x.carrier.label(j);
    return out;
  }
};

}  // namespace

SpeciesPtr sets() { static SpeciesPtr s = std::make_shared<Sets>(); return s; }
SpeciesPtr graphs() { static SpeciesPtr s = std::make_shared<Graphs>(); return s; }
SpeciesPtr posets() { static SpeciesPtr s = std::make_shared<Posets>(); return s; }
SpeciesPtr forests() { static SpeciesPtr s = std::make_shared<Forests>(); return s; }
SpeciesPtr linear_orders() { static SpeciesPtr s = std::make_shared<LinearOrders>(); return s; }
SpeciesPtr double_posets() { static SpeciesPtr s = std::make_shared<DoublePosets>(); return s; }
SpeciesPtr acyclic_digraphs() { static SpeciesPtr s = std::make_shared<AcyclicDigraphs>(); return s; }

std::vector<std::string> builtin_species_names() {
  return {"set", "graph", "poset", "forest", "linear", "dposet", "dag"};
}

SpeciesPtr species_by_name(const std::string& name) {
  static const std::map<std::string, SpeciesPtr (*)()> table = {
      {"set", sets},           {"sets", sets},
      {"graph", graphs},       {"graphs", graphs},
      {"poset", posets},       {"posets", posets},
      {"forest", forests},     {"forests", forests},
      {"tree", forests},       {"linear", linear_orders},
      {"linear-order", linear_orders}, {"dposet", double_posets},
      {"double-poset", double_posets}, {"dag", acyclic_digraphs},
      {"acyclic-digraph", acyclic_digraphs},
  };
  auto it = table.find(name);
  if (it == table.end()) throw InvalidArgument("unknown species '" + name + "'");
  return it->second();
}

}  // namespace dsp
