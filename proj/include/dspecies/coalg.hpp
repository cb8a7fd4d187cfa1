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


#ifndef DSPECIES_COALG_HPP
#define DSPECIES_COALG_HPP

// The incidence bialgebra of a (directed) restriction species on the basis
// of isomorphism classes, with exact rational coefficients.

#include <gmpxx.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "dspecies/decomp.hpp"
#include "dspecies/species.hpp"

namespace dsp {

/// Canonical isomorphism-class key, "tag:hex".
using Key = std::string;

/// Finite linear combination of keys; zero coefficients are never stored.
struct ModuleElement {
  std::map<Key, mpq_class> terms;

  static ModuleElement basis(const Key& k);
  void add(const Key& k, const mpq_class& c);
  ModuleElement& operator+=(const ModuleElement& o);
  ModuleElement& operator-=(const ModuleElement& o);
  ModuleElement scaled(const mpq_class& c) const;
  bool empty() const { return terms.empty(); }
  friend bool operator==(const ModuleElement& a, const ModuleElement& b) { return a.terms == b.terms; }
};

struct TensorElement {
  std::map<std::pair<Key, Key>, mpq_class> terms;

  void add(const Key& l, const Key& r, const mpq_class& c);
  TensorElement& operator+=(const TensorElement& o);
  TensorElement& operator-=(const TensorElement& o);
  TensorElement scaled(const mpq_class& c) const;
  /// l (x) r becomes r (x) l.
  TensorElement swapped() const;
  bool empty() const { return terms.empty(); }
  friend bool operator==(const TensorElement& a, const TensorElement& b) { return a.terms == b.terms; }
};

TensorElement tensor(const ModuleElement& a, const ModuleElement& b);

/// Caches coproducts, products and antipodes per key.  Not thread-safe.
class Coalgebra {
 public:
  explicit Coalgebra(SpeciesPtr s, EnumBounds bounds = {});

  const SpeciesPtr& species() const { return species_; }
  const EnumBounds& bounds() const { return bounds_; }
  Key key(const Structure& x) const;
  /// Representative on labels "a", "b", ...
  const Structure& representative(const Key& k) const;
  /// Key of the empty structure.
  const Key& unit() const { return unit_; }

  /// Sum over admissible cuts (lower sets; all subsets for ordinary species)
  /// of key(X|D) (x) key(X|complement).
  const TensorElement& coproduct(const Key& k) const;
  TensorElement coproduct(const Structure& x) const;
  TensorElement coproduct(const ModuleElement& x) const;

  mpq_class counit(const Key& k) const;
  mpq_class counit(const ModuleElement& x) const;

  /// Disjoint union.  Throws NotMonoidalError.
  const Key& product(const Key& a, const Key& b) const;
  ModuleElement product(const ModuleElement& a, const ModuleElement& b) const;
  /// Factorwise product (a (x) b)(c (x) d) = ac (x) bd.
  TensorElement product(const TensorElement& a, const TensorElement& b) const;

  /// Convolution inverse of the identity.  Throws NotConnectedError when the
  /// species has more than one empty structure, NotMonoidalError when it has
  /// no product.
  const ModuleElement& antipode(const Key& k) const;
  ModuleElement antipode(const ModuleElement& x) const;
  /// m (S (x) id) Delta applied to a basis element.
  ModuleElement convolution(const Key& k) const;

 private:
  SpeciesPtr species_;
  EnumBounds bounds_;
  Key unit_;
  int empty_classes_ = 1;
  mutable std::map<Key, Structure> reps_;
  mutable std::map<Key, TensorElement> coproducts_;
  mutable std::map<std::pair<Key, Key>, Key> products_;
  mutable std::map<Key, ModuleElement> antipodes_;
};

/// Keys of the basis structures with at most max_size elements, ordered by
/// (size, key).
std::vector<Key> basis_keys(const SpeciesDef& s, int max_size, const EnumBounds& b);

AxiomReport check_coassociativity(const Coalgebra& c, const std::vector<Key>& basis);
AxiomReport check_counit(const Coalgebra& c, const std::vector<Key>& basis);
/// Delta(xy) = Delta(x) Delta(y) for basis pairs whose sizes add up to at
/// most max_size.
AxiomReport check_bialgebra(const Coalgebra& c, const std::vector<Key>& basis, int max_size);
AxiomReport check_cocommutativity(const Coalgebra& c, const std::vector<Key>& basis);
/// m (S (x) id) Delta = u epsilon.
AxiomReport check_antipode(const Coalgebra& c, const std::vector<Key>& basis);
/// Every tensor term of Delta(x) has total size |x|.
AxiomReport check_grading(const Coalgebra& c, const std::vector<Key>& basis);

/// The coproduct of an object x of X_1 read off the simplicial groupoid: the
/// homotopy fibre of d_1 over x pushed along (d_2, d_0), taken at homotopy
/// cardinality.
TensorElement groupoid_coproduct(const TruncatedSimplicialGroupoid& t, int x);

/// Compares groupoid_coproduct with Coalgebra::coproduct on every basis
/// element with at most max_size elements.
AxiomReport cardinality_coproduct_consistency(const Coalgebra& c, int max_size);

}  // namespace dsp

#endif  // DSPECIES_COALG_HPP
