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


#include "dspecies/coalg.hpp"

#include <set>
#include <tuple>

#include "dspecies/error.hpp"

namespace dsp {

ModuleElement ModuleElement::basis(const Key& k) {
  ModuleElement m;
  m.add(k, 1);
  return m;
}

void ModuleElement::add(const Key& k, const mpq_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(k, c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

ModuleElement& ModuleElement::operator+=(const ModuleElement& o) {
  for (const auto& [k, c] : o.terms) add(k, c);
  return *this;
}

ModuleElement& ModuleElement::operator-=(const ModuleElement& o) {
  for (const auto& [k, c] : o.terms) add(k, -c);
  return *this;
}

ModuleElement ModuleElement::scaled(const mpq_class& c) const {
  ModuleElement m;
  if (c == 0) return m;
  for (const auto& [k, v] : terms) m.terms.emplace(k, v * c);
  return m;
}

void TensorElement::add(const Key& l, const Key& r, const mpq_class& c) {
  if (c == 0) return;
  auto [it, fresh] = terms.emplace(std::make_pair(l, r), c);
  if (fresh) return;
  it->second += c;
  if (it->second == 0) terms.erase(it);
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
  for (const auto& [p, c] : o.terms) add(p.first, p.second, c);
  return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
  for (const auto& [p, c] : o.terms) add(p.first, p.second, -c);
  return *this;
}

TensorElement TensorElement::scaled(const mpq_class& c) const {
  TensorElement t;
  if (c == 0) return t;
  for (const auto& [p, v] : terms) t.terms.emplace(p, v * c);
  return t;
}

TensorElement TensorElement::swapped() const {
  TensorElement t;
  for (const auto& [p, c] : terms) t.add(p.second, p.first, c);
  return t;
}

TensorElement tensor(const ModuleElement& a, const ModuleElement& b) {
  TensorElement t;
  for (const auto& [k, c] : a.terms)
    for (const auto& [l, d] : b.terms) t.add(k, l, c * d);
  return t;
}

// ---------------------------------------------------------------------------

Coalgebra::Coalgebra(SpeciesPtr s, EnumBounds bounds) : species_(std::move(s)), bounds_(bounds) {
  if (!species_) throw InvalidArgument("no species");
  std::vector<Structure> empties;
  for (const FinPoset& c : labelled_carriers(*species_, {}))
    for (auto& d : species_->decorations(c, bounds_)) empties.push_back({species_->tag(), c, std::move(d)});
  if (empties.empty()) throw InvalidArgument("species '" + species_->tag() + "' has no empty structure");
  std::set<Key> keys;
  for (const auto& e : empties) keys.insert(structure_key(e));
  empty_classes_ = static_cast<int>(keys.size());
  unit_ = structure_key(empties.front());
}

Key Coalgebra::key(const Structure& x) const { return structure_key(x); }

const Structure& Coalgebra::representative(const Key& k) const {
  auto it = reps_.find(k);
  if (it == reps_.end()) it = reps_.emplace(k, decode_key(*species_, k)).first;
  return it->second;
}

TensorElement Coalgebra::coproduct(const Structure& x) const {
  std::vector<Mask> cuts;
  if (species_->directed()) {
    cuts = lower_sets(x.carrier);
  } else {
    for (Mask m = 0; m <= x.carrier.full(); ++m) cuts.push_back(m);
  }
  TensorElement t;
  for (Mask d : cuts)
    t.add(key(restrict_structure(*species_, x, d)), key(restrict_structure(*species_, x, x.carrier.full() & ~d)), 1);
  return t;
}

const TensorElement& Coalgebra::coproduct(const Key& k) const {
  auto it = coproducts_.find(k);
  if (it == coproducts_.end()) it = coproducts_.emplace(k, coproduct(representative(k))).first;
  return it->second;
}

TensorElement Coalgebra::coproduct(const ModuleElement& x) const {
  TensorElement t;
  for (const auto& [k, c] : x.terms) t += coproduct(k).scaled(c);
  return t;
}

mpq_class Coalgebra::counit(const Key& k) const { return key_size(k) == 0 ? 1 : 0; }

mpq_class Coalgebra::counit(const ModuleElement& x) const {
  mpq_class s = 0;
  for (const auto& [k, c] : x.terms) s += c * counit(k);
  return s;
}

const Key& Coalgebra::product(const Key& a, const Key& b) const {
  auto it = products_.find({a, b});
  if (it == products_.end())
    it = products_.emplace(std::make_pair(a, b),
                           key(product_structure(*species_, representative(a), representative(b))))
             .first;
  return it->second;
}

ModuleElement Coalgebra::product(const ModuleElement& a, const ModuleElement& b) const {
  ModuleElement m;
  for (const auto& [k, c] : a.terms)
    for (const auto& [l, d] : b.terms) m.add(product(k, l), c * d);
  return m;
}

TensorElement Coalgebra::product(const TensorElement& a, const TensorElement& b) const {
  TensorElement t;
  for (const auto& [p, c] : a.terms)
    for (const auto& [q, d] : b.terms) t.add(product(p.first, q.first), product(p.second, q.second), c * d);
  return t;
}

const ModuleElement& Coalgebra::antipode(const Key& k) const {
  if (auto it = antipodes_.find(k); it != antipodes_.end()) return it->second;
  if (!species_->monoidal()) throw NotMonoidalError("species '" + species_->tag() + "' has no product");
  if (empty_classes_ > 1)
    throw NotConnectedError("species '" + species_->tag() + "' has " + std::to_string(empty_classes_) +
                            " empty structures");
  ModuleElement s;
  if (key_size(k) == 0) {
    if (k != unit_) throw NotConnectedError("antipode of a non-unit empty structure");
    s = ModuleElement::basis(unit_);
  } else {
    // S(x) = -x - sum S(x') x'' over the reduced coproduct.
    TensorElement reduced = coproduct(k);
    reduced.add(k, unit_, -1);
    reduced.add(unit_, k, -1);
    s.add(k, -1);
    for (const auto& [p, c] : reduced.terms) {
      if (key_size(p.first) >= key_size(k))
        throw Error(ErrorCode::kInternal, "reduced coproduct does not lower the grade");
      s -= product(antipode(p.first), ModuleElement::basis(p.second)).scaled(c);
    }
  }
  return antipodes_.emplace(k, std::move(s)).first->second;
}

ModuleElement Coalgebra::antipode(const ModuleElement& x) const {
  ModuleElement m;
  for (const auto& [k, c] : x.terms) m += antipode(k).scaled(c);
  return m;
}

ModuleElement Coalgebra::convolution(const Key& k) const {
  ModuleElement m;
  for (const auto& [p, c] : coproduct(k).terms)
    m += product(antipode(p.first), ModuleElement::basis(p.second)).scaled(c);
  return m;
}

// ---------------------------------------------------------------------------
// Law checks

std::vector<Key> basis_keys(const SpeciesDef& s, int max_size, const EnumBounds& b) {
  std::vector<Key> out;
  for (const Structure& x : basis(s, max_size, b)) out.push_back(structure_key(x));
  return out;
}

namespace {

std::string label(const Coalgebra& c, const Key& k) {
  const std::string d = describe(*c.species(), c.representative(k));
  return d;
}

ReportEntry law_entry(const std::string& name, bool ok, std::string detail = {}) {
  return {name, ok ? Verdict::kPass : Verdict::kFail, std::nullopt, ok ? std::string() : std::move(detail)};
}

template <class Map, class Describe>
std::string first_difference(const Map& a, const Map& b, Describe describe_key) {
  std::set<typename Map::key_type> keys;
  for (const auto& [k, v] : a) keys.insert(k);
  for (const auto& [k, v] : b) keys.insert(k);
  for (const auto& k : keys) {
    auto ia = a.find(k);
    auto ib = b.find(k);
    const mpq_class va = ia == a.end() ? mpq_class(0) : ia->second;
    const mpq_class vb = ib == b.end() ? mpq_class(0) : ib->second;
    if (va != vb) return describe_key(k) + ": " + va.get_str() + " vs " + vb.get_str();
  }
  return {};
}

}  // namespace

AxiomReport check_coassociativity(const Coalgebra& c, const std::vector<Key>& basis) {
  AxiomReport r{"coassociativity", {}};
  using Triple = std::tuple<Key, Key, Key>;
  for (const Key& k : basis) {
    std::map<Triple, mpq_class> lhs, rhs;
    for (const auto& [p, v] : c.coproduct(k).terms) {
      for (const auto& [q, w] : c.coproduct(p.first).terms) lhs[{q.first, q.second, p.second}] += v * w;
      for (const auto& [q, w] : c.coproduct(p.second).terms) rhs[{p.first, q.first, q.second}] += v * w;
    }
    std::erase_if(lhs, [](const auto& e) { return e.second == 0; });
    std::erase_if(rhs, [](const auto& e) { return e.second == 0; });
    r.entries.push_back(law_entry("coassoc:" + label(c, k), lhs == rhs, first_difference(lhs, rhs, [&](const Triple& t) {
      return label(c, std::get<0>(t)) + " (x) " + label(c, std::get<1>(t)) + " (x) " + label(c, std::get<2>(t));
    })));
  }
  return r;
}

AxiomReport check_counit(const Coalgebra& c, const std::vector<Key>& basis) {
  AxiomReport r{"counit", {}};
  for (const Key& k : basis) {
    ModuleElement left, right;
    for (const auto& [p, v] : c.coproduct(k).terms) {
      left.add(p.second, v * c.counit(p.first));
      right.add(p.first, v * c.counit(p.second));
    }
    const ModuleElement x = ModuleElement::basis(k);
    r.entries.push_back(law_entry("counit:" + label(c, k), left == x && right == x,
                                  left == x ? "(id (x) e) Delta differs from id" : "(e (x) id) Delta differs from id"));
  }
  return r;
}

AxiomReport check_bialgebra(const Coalgebra& c, const std::vector<Key>& basis, int max_size) {
  AxiomReport r{"bialgebra", {}};
  for (const Key& x : basis)
    for (const Key& y : basis) {
      if (key_size(x) + key_size(y) > max_size) continue;
      const TensorElement lhs = c.coproduct(c.product(x, y));
      const TensorElement rhs = c.product(c.coproduct(x), c.coproduct(y));
      r.entries.push_back(law_entry("bialgebra:" + label(c, x) + "*" + label(c, y), lhs == rhs,
                                    first_difference(lhs.terms, rhs.terms, [&](const std::pair<Key, Key>& p) {
                                      return label(c, p.first) + " (x) " + label(c, p.second);
                                    })));
    }
  return r;
}

AxiomReport check_cocommutativity(const Coalgebra& c, const std::vector<Key>& basis) {
  AxiomReport r{"cocommutativity", {}};
  for (const Key& k : basis) {
    const TensorElement& d = c.coproduct(k);
    const TensorElement s = d.swapped();
    r.entries.push_back(law_entry("swap:" + label(c, k), d == s,
                                  first_difference(d.terms, s.terms, [&](const std::pair<Key, Key>& p) {
                                    return label(c, p.first) + " (x) " + label(c, p.second);
                                  })));
  }
  return r;
}

AxiomReport check_antipode(const Coalgebra& c, const std::vector<Key>& basis) {
  AxiomReport r{"antipode", {}};
  for (const Key& k : basis) {
    const ModuleElement lhs = c.convolution(k);
    ModuleElement rhs;
    rhs.add(c.unit(), c.counit(k));
    r.entries.push_back(law_entry("convolution:" + label(c, k), lhs == rhs,
                                  first_difference(lhs.terms, rhs.terms, [&](const Key& q) { return label(c, q); })));
  }
  return r;
}

AxiomReport check_grading(const Coalgebra& c, const std::vector<Key>& basis) {
  AxiomReport r{"grading", {}};
  for (const Key& k : basis) {
    std::string bad;
    for (const auto& [p, v] : c.coproduct(k).terms)
      if (key_size(p.first) + key_size(p.second) != key_size(k)) {
        bad = label(c, p.first) + " (x) " + label(c, p.second);
        break;
      }
    r.entries.push_back(law_entry("grade:" + label(c, k), bad.empty(), "term " + bad + " changes the size"));
  }
  return r;
}

TensorElement groupoid_coproduct(const TruncatedSimplicialGroupoid& t, int x) {
  if (t.max_level() < 2) throw InvalidArgument("the groupoid coproduct needs X2");
  const FinGroupoid& X1 = *t.level(1);
  const Fibre f = fibre(t.face(2, 1), x);
  const GroupoidFunctor h1 = compose(t.face(2, 2), f.projection);
  const GroupoidFunctor h2 = compose(t.face(2, 0), f.projection);
  const std::vector<int> comp = components(X1);
  std::vector<int> rep(static_cast<std::size_t>(X1.object_count()), -1);
  for (int o = 0; o < X1.object_count(); ++o)
    if (rep[comp[o]] < 0) rep[comp[o]] = o;
  std::set<std::pair<int, int>> pairs;
  for (int o = 0; o < f.groupoid->object_count(); ++o) pairs.emplace(comp[h1.obj[o]], comp[h2.obj[o]]);
  TensorElement out;
  for (auto [cs, ct] : pairs) {
    const int s = rep[cs], u = rep[ct];
    const Fibre fp = fibre_pair(h1, h2, s, u);
    const mpq_class aut(static_cast<unsigned long>(X1.automorphisms(s).size() * X1.automorphisms(u).size()));
    out.add(structure_key(t.simplex(1, s).structure), structure_key(t.simplex(1, u).structure),
            homotopy_cardinality(*fp.groupoid) / aut);
  }
  return out;
}

AxiomReport cardinality_coproduct_consistency(const Coalgebra& c, int max_size) {
  AxiomReport r{"cardinality-consistency", {}};
  BuildBounds b;
  b.levels = 2;
  b.size = max_size;
  b.decoration = c.bounds();
  const SimplicialPtr t = build(c.species(), b);
  for (const Key& k : basis_keys(*c.species(), max_size, c.bounds())) {
    const Structure& x = c.representative(k);
    const int o = t->find(1, Simplex{x, std::vector<int>(static_cast<std::size_t>(x.size()), 1), {}});
    if (o < 0) {
      r.entries.push_back(law_entry("cardinality:" + label(c, k), false, "structure missing from X1"));
      continue;
    }
    const TensorElement g = groupoid_coproduct(*t, o);
    const TensorElement& d = c.coproduct(k);
    r.entries.push_back(law_entry("cardinality:" + label(c, k), g == d,
                                  first_difference(g.terms, d.terms, [&](const std::pair<Key, Key>& p) {
                                    return label(c, p.first) + " (x) " + label(c, p.second);
                                  })));
  }
  return r;
}

}  // namespace dsp
