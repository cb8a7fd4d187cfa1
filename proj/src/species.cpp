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


#include "dspecies/species.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "dspecies/error.hpp"

namespace dsp {

bool SpeciesDef::supports(const FinPoset& carrier) const {
  return directed() || carrier.is_discrete();
}

void SpeciesDef::validate(const FinPoset& carrier, const Decoration& d) const {
  if (!supports(carrier))
    throw ValidationError("carrier is not admissible for species '" + tag() + "'");
  if (!has_cells() && !d.cells.empty())
    throw ValidationError("species '" + tag() + "' takes no decoration matrix");
  if (has_cells() && d.cells.size() != static_cast<std::size_t>(carrier.size() * carrier.size()))
    throw ValidationError("decoration matrix has the wrong size");
}

std::vector<Decoration> SpeciesDef::decorations(const FinPoset& carrier, const EnumBounds&) const {
  if (!supports(carrier)) return {};
  return {Decoration{}};
}

Decoration SpeciesDef::restrict(const FinPoset& carrier, const Decoration& d,
                                const std::vector<int>& keep) const {
  Decoration out{{}, d.global};
  if (d.cells.empty()) return out;
  const int n = carrier.size();
  for (int i : keep)
    for (int j : keep) out.cells.push_back(d.cells[static_cast<std::size_t>(i * n + j)]);
  return out;
}

Decoration SpeciesDef::transport(const Decoration& d, int n, const std::vector<int>& order) const {
  Decoration out{{}, d.global};
  if (d.cells.empty()) return out;
  out.cells.resize(d.cells.size());
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) out.cells[p * n + q] = d.cells[order[p] * n + order[q]];
  return out;
}

Decoration SpeciesDef::product(const Decoration& a, int na, const Decoration& b, int nb) const {
  Decoration out{{}, a.global + b.global};
  if (!has_cells()) return out;
  const int n = na + nb;
  out.cells.assign(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < na; ++i)
    for (int j = 0; j < na; ++j) out.cells[i * n + j] = a.cells[i * na + j];
  for (int i = 0; i < nb; ++i)
    for (int j = 0; j < nb; ++j) out.cells[(na + i) * n + na + j] = b.cells[i * nb + j];
  return out;
}

std::string SpeciesDef::describe(const Structure& x) const {
  std::string out;
  const int n = x.size();
  for (int i = 0; i < n && !x.decoration.cells.empty(); ++i)
    for (int j = 0; j < n; ++j) {
      const int v = x.decoration.cells[i * n + j];
      if (!v) continue;
      if (!out.empty()) out += ",";
      out += x.carrier.label(i) + ">" + x.carrier.label(j) + ":" + std::to_string(v);
    }
  return out;
}

std::string describe(const SpeciesDef& s, const Structure& x) {
  std::string out = "{";
  for (int i = 0; i < x.size(); ++i) out += (i ? "," : "") + x.carrier.label(i);
  std::string order;
  for (auto [a, b] : x.carrier.covers())
    order += (order.empty() ? "" : ",") + x.carrier.label(a) + "<" + x.carrier.label(b);
  if (!order.empty()) out += "|" + order;
  const std::string extra = s.describe(x);
  if (!extra.empty()) out += "|" + extra;
  if (x.decoration.global) out += "|g=" + std::to_string(x.decoration.global);
  return out + "}";
}

Structure make_structure(const SpeciesDef& s, FinPoset carrier, Decoration d) {
  s.validate(carrier, d);
  return {s.tag(), std::move(carrier), std::move(d)};
}

Structure restrict_structure(const SpeciesDef& s, const Structure& x, Mask keep) {
  if (keep & ~x.carrier.full()) throw InvalidArgument("restriction to unknown elements");
  if (s.directed()) {
    if (auto v = convexity_violation(x.carrier, keep))
      throw ConvexityError(x.carrier.label((*v)[0]), x.carrier.label((*v)[1]),
                           x.carrier.label((*v)[2]));
  }
  std::vector<int> positions;
  for (int i = 0; i < x.size(); ++i)
    if (keep >> i & 1) positions.push_back(i);
  return {x.tag, restrict(x.carrier, keep), s.restrict(x.carrier, x.decoration, positions)};
}

Structure restrict_structure(const SpeciesDef& s, const Structure& x,
                             const std::vector<std::string>& keep) {
  return restrict_structure(s, x, x.carrier.mask_of(keep));
}

Structure transport_structure(const SpeciesDef& s, const Structure& x, const std::vector<int>& order) {
  const int n = x.size();
  if (static_cast<int>(order.size()) != n) throw InvalidArgument("transport order has the wrong length");
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n * n));
  for (int p = 0; p < n; ++p) {
    labels.push_back(x.carrier.label(order[p]));
    for (int q = 0; q < n; ++q) leq[p * n + q] = x.carrier.leq(order[p], order[q]);
  }
  return {x.tag, FinPoset::from_matrix(std::move(labels), std::move(leq)),
          s.transport(x.decoration, n, order)};
}

Structure rename_structure(const Structure& x, std::vector<std::string> labels) {
  return {x.tag, FinPoset::from_matrix(std::move(labels), x.carrier.leq_matrix()), x.decoration};
}

Structure sort_structure(const SpeciesDef& s, const Structure& x) {
  std::vector<int> order(static_cast<std::size_t>(x.size()));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return x.carrier.label(a) < x.carrier.label(b); });
  return transport_structure(s, x, order);
}

canon::RelStructure rel_structure(const Structure& x) {
  canon::RelStructure r = rel_structure(x.carrier);
  r.global = x.decoration.global;
  if (!x.decoration.cells.empty()) r.relations.push_back(x.decoration.cells);
  return r;
}

std::string structure_key(const Structure& x) {
  return x.tag + ":" + canon::to_hex(canon::canonical_form(rel_structure(x)).bytes);
}

std::vector<std::vector<int>> structure_isomorphisms(const Structure& x, const Structure& y) {
  if (x.tag != y.tag) return {};
  return canon::isomorphisms(rel_structure(x), rel_structure(y));
}

std::uint64_t automorphism_count(const Structure& x) {
  return canon::automorphism_count(rel_structure(x));
}

int key_size(const std::string& key) {
  const auto colon = key.rfind(':');
  if (colon == std::string::npos || key.size() < colon + 3) throw ParseError("malformed structure key");
  return static_cast<int>(std::stoi(key.substr(colon + 1, 2), nullptr, 16));
}

Structure decode_key(const SpeciesDef& s, const std::string& key) {
  const auto colon = key.rfind(':');
  if (colon == std::string::npos) throw ParseError("structure key without tag: " + key);
  if (key.substr(0, colon) != s.tag())
    throw ParseError("key tag '" + key.substr(0, colon) + "' does not match species '" + s.tag() + "'");
  canon::RelStructure r = canon::decode(canon::from_hex(key.substr(colon + 1)));
  if (r.relations.empty()) throw ParseError("structure key without order relation");
  std::vector<std::string> labels;
  for (int i = 0; i < r.n; ++i) labels.push_back(universe_label(i));
  std::vector<std::uint8_t> leq(r.relations[0].begin(), r.relations[0].end());
  Decoration d{r.relations.size() > 1 ? r.relations[1] : std::vector<int>{}, r.global};
  try {
    return make_structure(s, FinPoset::from_matrix(std::move(labels), std::move(leq)), std::move(d));
  } catch (const ValidationError& e) {
    throw ParseError(std::string("key does not decode to a valid structure: ") + e.what());
  }
}

FinGroupoid enumerate_structures(const SpeciesDef& s, const FinPoset& carrier, const EnumBounds& b) {
  const int n = carrier.size();
  const std::vector<Decoration> decs = s.decorations(carrier, b);
  std::map<Decoration, int> index;
  for (std::size_t i = 0; i < decs.size(); ++i) index.emplace(decs[i], static_cast<int>(i));
  const auto auts = std::make_shared<std::vector<std::vector<int>>>(isomorphisms(carrier, carrier));
  std::map<std::vector<int>, int> aut_index;
  for (std::size_t k = 0; k < auts->size(); ++k) aut_index.emplace((*auts)[k], static_cast<int>(k));
  const int na = static_cast<int>(auts->size());

  auto inverse_of = [n](const std::vector<int>& sigma) {
    std::vector<int> inv(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) inv[sigma[v]] = v;
    return inv;
  };
  std::vector<std::string> names;
  std::vector<int> first{0}, targets, ids, inv;
  std::vector<int> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 0);
  for (std::size_t i = 0; i < decs.size(); ++i) {
    names.push_back(describe(s, Structure{s.tag(), carrier, decs[i]}));
    first.push_back(first.back() + na);
    ids.push_back(static_cast<int>(i) * na + aut_index.at(identity));
    for (int k = 0; k < na; ++k) {
      // sigma sends position v to sigma[v]; transport wants the inverse.
      auto it = index.find(s.transport(decs[i], n, inverse_of((*auts)[k])));
      if (it == index.end())
        throw Error(ErrorCode::kInternal, "decorations of '" + s.tag() + "' not closed under transport");
      targets.push_back(it->second);
    }
  }
  for (std::size_t m = 0; m < targets.size(); ++m)
    inv.push_back(targets[m] * na + aut_index.at(inverse_of((*auts)[m % na])));
  auto table = std::make_shared<std::vector<int>>();
  for (int k2 = 0; k2 < na; ++k2)
    for (int k1 = 0; k1 < na; ++k1) {
      std::vector<int> c(static_cast<std::size_t>(n));
      for (int v = 0; v < n; ++v) c[v] = (*auts)[k2][(*auts)[k1][v]];
      table->push_back(aut_index.at(c));
    }
  return FinGroupoid(std::move(names), std::move(first), std::move(targets), std::move(ids),
                     std::move(inv), [table, na](int after, int before) {
                       return (before / na) * na + (*table)[(after % na) * na + before % na];
                     });
}

Structure product_structure(const SpeciesDef& s, const Structure& x, const Structure& y) {
  if (!s.monoidal()) throw NotMonoidalError("species '" + s.tag() + "' is not monoidal");
  FinPoset carrier = disjoint_union(x.carrier, y.carrier);
  Decoration d = s.product(x.decoration, x.size(), y.decoration, y.size());
  return make_structure(s, std::move(carrier), std::move(d));
}

std::vector<FinPoset> labelled_carriers(const SpeciesDef& s, const std::vector<std::string>& labels) {
  std::vector<FinPoset> out;
  if (s.directed()) {
    for (auto& p : all_posets(labels))
      if (s.supports(p)) out.push_back(std::move(p));
  } else {
    FinPoset p = FinPoset::discrete(labels);
    if (s.supports(p)) out.push_back(std::move(p));
  }
  return out;
}

std::vector<Structure> basis(const SpeciesDef& s, int max_size, const EnumBounds& b) {
  if (max_size > max_carrier_size()) throw BoundExceeded("basis size over the configured bound");
  std::vector<Structure> out;
  for (int n = 0; n <= max_size; ++n) {
    std::vector<FinPoset> carriers;
    if (s.directed()) {
      carriers = poset_classes(n);
    } else {
      std::vector<std::string> labels;
      for (int i = 0; i < n; ++i) labels.push_back(universe_label(i));
      carriers.push_back(FinPoset::discrete(labels));
    }
    std::map<std::string, Structure> classes;
    for (const auto& c : carriers) {
      if (!s.supports(c)) continue;
      for (auto& d : s.decorations(c, b)) {
        Structure x{s.tag(), c, std::move(d)};
        classes.emplace(structure_key(x), std::move(x));
      }
    }
    for (auto& [k, x] : classes) out.push_back(std::move(x));
  }
  return out;
}

namespace {

class EmbeddedSpecies : public SpeciesDef {
 public:
  explicit EmbeddedSpecies(SpeciesPtr inner) : inner_(std::move(inner)) {}
  std::string tag() const override { return "embedded-" + inner_->tag(); }
  bool directed() const override { return true; }
  bool monoidal() const override { return inner_->monoidal(); }
  bool has_cells() const override { return inner_->has_cells(); }
  bool supports(const FinPoset& c) const override {
    return c.is_discrete() && inner_->supports(c);
  }
  void validate(const FinPoset& c, const Decoration& d) const override {
    if (!c.is_discrete()) throw ValidationError("embedded ordinary species needs a discrete carrier");
    inner_->validate(c, d);
  }
  std::vector<Decoration> decorations(const FinPoset& c, const EnumBounds& b) const override {
    if (!c.is_discrete()) return {};
    return inner_->decorations(c, b);
  }
  Decoration restrict(const FinPoset& c, const Decoration& d, const std::vector<int>& keep) const override {
    return inner_->restrict(c, d, keep);
  }
  Decoration transport(const Decoration& d, int n, const std::vector<int>& order) const override {
    return inner_->transport(d, n, order);
  }
  Decoration product(const Decoration& a, int na, const Decoration& b, int nb) const override {
    return inner_->product(a, na, b, nb);
  }
  std::string describe(const Structure& x) const override { return inner_->describe(x); }

 private:
  SpeciesPtr inner_;
};

}  // namespace

SpeciesPtr embed_ordinary(SpeciesPtr ordinary) {
  if (ordinary->directed()) throw InvalidArgument("embed_ordinary expects an ordinary species");
  return std::make_shared<EmbeddedSpecies>(std::move(ordinary));
}

}  // namespace dsp
