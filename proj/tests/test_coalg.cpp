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


#include "doctest.h"

#include "dspecies/coalg.hpp"
#include "dspecies/error.hpp"

using namespace dsp;

namespace {

// Brute-force coproduct: one term per admissible cut, read off the subset
// lattice without going through layerings or the simplicial groupoid.
TensorElement cut_oracle(const Coalgebra& c, const Structure& x) {
  const SpeciesDef& s = *c.species();
  const int n = x.size();
  const Mask full = x.carrier.full();
  TensorElement t;
  for (Mask m = 0; m <= full; ++m) {
    bool lower = true;
    for (int i = 0; i < n && lower; ++i)
      for (int j = 0; j < n; ++j)
        if ((m >> i & 1) && x.carrier.leq(j, i) && !(m >> j & 1)) lower = false;
    if (s.directed() && !lower) continue;
    t.add(c.key(restrict_structure(s, x, m)), c.key(restrict_structure(s, x, full & ~m)), 1);
  }
  return t;
}

Structure set_of(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(universe_label(i));
  return make_structure(*sets(), FinPoset::discrete(labels), {});
}

// Two distinct empty structures, told apart by a marker.
class MarkedSets : public SpeciesDef {
 public:
  std::string tag() const override { return "marked"; }
  bool directed() const override { return false; }
  std::vector<Decoration> decorations(const FinPoset& c, const EnumBounds&) const override {
    if (!supports(c)) return {};
    return {Decoration{{}, 0}, Decoration{{}, 1}};
  }
};

}  // namespace

TEST_SUITE("coalg") {

TEST_CASE("coproduct matches the cut oracle on every basis element") {
  struct Case {
    SpeciesPtr s;
    int max;
    EnumBounds b;
  };
  for (const Case& k : {Case{sets(), 4, {}}, Case{graphs(), 3, EnumBounds{2}}, Case{posets(), 3, {}},
                        Case{forests(), 4, {}}, Case{linear_orders(), 3, {}}, Case{double_posets(), 2, {}},
                        Case{acyclic_digraphs(), 3, {}}}) {
    const Coalgebra c(k.s, k.b);
    for (const Structure& x : basis(*k.s, k.max, k.b)) {
      CAPTURE(describe(*k.s, x));
      CHECK(c.coproduct(x) == cut_oracle(c, x));
      CHECK(c.coproduct(c.key(x)) == cut_oracle(c, x));
    }
  }
}

TEST_CASE("binomial coefficients for sets") {
  const Coalgebra c(sets());
  const TensorElement t = c.coproduct(set_of(3));
  REQUIRE(t.terms.size() == 4);
  const long expected[] = {1, 3, 3, 1};
  for (int i = 0; i <= 3; ++i)
    CHECK(t.terms.at({c.key(set_of(i)), c.key(set_of(3 - i))}) == expected[i]);
}

TEST_CASE("two-chain and two-node tree") {
  const Coalgebra pc(posets());
  const Structure chain = make_structure(*posets(), FinPoset::chain({"a", "b"}), {});
  const Key point = pc.key(make_structure(*posets(), FinPoset::discrete({"a"}), {}));
  TensorElement expected;
  expected.add(pc.unit(), pc.key(chain), 1);
  expected.add(point, point, 1);
  expected.add(pc.key(chain), pc.unit(), 1);
  CHECK(pc.coproduct(chain) == expected);
  // Symmetric under the swap, so it cannot witness non-cocommutativity.
  CHECK(pc.coproduct(chain).swapped() == pc.coproduct(chain));

  const Coalgebra fc(forests());
  const Structure tree = make_structure(*forests(), FinPoset::chain({"a", "b"}), {});
  const Key dot = fc.key(make_structure(*forests(), FinPoset::discrete({"a"}), {}));
  TensorElement bck;
  bck.add(fc.unit(), fc.key(tree), 1);
  bck.add(dot, dot, 1);
  bck.add(fc.key(tree), fc.unit(), 1);
  CHECK(fc.coproduct(tree) == bck);
}

TEST_CASE("two-element antichain and the one-edge graph") {
  const Coalgebra pc(posets());
  const Structure anti = make_structure(*posets(), FinPoset::discrete({"a", "b"}), {});
  const Key point = pc.key(make_structure(*posets(), FinPoset::discrete({"a"}), {}));
  const TensorElement t = pc.coproduct(anti);
  CHECK(t.terms.size() == 3);
  CHECK(t.terms.at({point, point}) == 2);

  const Coalgebra gc(graphs());
  const Structure edge = make_structure(*graphs(), FinPoset::discrete({"a", "b"}), {{0, 1, 1, 0}, 0});
  const Key vertex = gc.key(make_structure(*graphs(), FinPoset::discrete({"a"}), {{0}, 0}));
  const TensorElement g = gc.coproduct(edge);
  CHECK(g.terms.size() == 3);
  CHECK(g.terms.at({vertex, vertex}) == 2);
  CHECK(g.terms.at({gc.unit(), gc.key(edge)}) == 1);
}

TEST_CASE("empty structure and counit") {
  const Coalgebra c(forests());
  TensorElement unit;
  unit.add(c.unit(), c.unit(), 1);
  CHECK(c.coproduct(c.unit()) == unit);
  CHECK(c.counit(c.unit()) == 1);
  const Structure tree = make_structure(*forests(), FinPoset::chain({"a", "b"}), {});
  CHECK(c.counit(c.key(tree)) == 0);
  ModuleElement m = ModuleElement::basis(c.unit()).scaled(mpq_class(3, 2));
  m.add(c.key(tree), 7);
  CHECK(c.counit(m) == mpq_class(3, 2));
}

TEST_CASE("products") {
  const Coalgebra c(sets());
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n) CHECK(c.product(c.key(set_of(m)), c.key(set_of(n))) == c.key(set_of(m + n)));
  const Coalgebra fc(forests());
  const Key dot = fc.key(make_structure(*forests(), FinPoset::discrete({"a"}), {}));
  const Key two = fc.key(make_structure(*forests(), FinPoset::discrete({"a", "b"}), {}));
  CHECK(fc.product(dot, dot) == two);
  CHECK(fc.product(two, fc.unit()) == two);
  const Coalgebra lc(linear_orders());
  CHECK_THROWS_AS(lc.product(lc.unit(), lc.unit()), NotMonoidalError);
}

TEST_CASE("antipode") {
  const Coalgebra c(sets());
  for (int n = 0; n <= 5; ++n) {
    const Key k = c.key(set_of(n));
    CHECK(c.antipode(k) == ModuleElement::basis(k).scaled(n % 2 ? -1 : 1));
    ModuleElement unit;
    if (n == 0) unit = ModuleElement::basis(c.unit());
    CHECK(c.convolution(k) == unit);
  }
  const Coalgebra fc(forests());
  const Key dot = fc.key(make_structure(*forests(), FinPoset::discrete({"a"}), {}));
  const Key tree = fc.key(make_structure(*forests(), FinPoset::chain({"a", "b"}), {}));
  CHECK(fc.antipode(dot) == ModuleElement::basis(dot).scaled(-1));
  ModuleElement st = ModuleElement::basis(tree).scaled(-1);
  st.add(fc.product(dot, dot), 1);
  CHECK(fc.antipode(tree) == st);
  CHECK(fc.antipode(fc.unit()) == ModuleElement::basis(fc.unit()));

  CHECK_THROWS_AS(Coalgebra(linear_orders()).antipode(Coalgebra(linear_orders()).unit()), NotMonoidalError);
  const Coalgebra marked(std::make_shared<MarkedSets>());
  CHECK_THROWS_AS(marked.antipode(marked.unit()), NotConnectedError);
}

TEST_CASE("law checks pass on small bases") {
  for (const auto& name : builtin_species_names()) {
    CAPTURE(name);
    const SpeciesPtr s = species_by_name(name);
    const int max = name == "dposet" ? 2 : 3;
    const Coalgebra c(s);
    const auto keys = basis_keys(*s, max, {});
    CHECK(keys.size() == basis(*s, max, {}).size());
    CHECK(check_coassociativity(c, keys).passed());
    CHECK(check_counit(c, keys).passed());
    CHECK(check_grading(c, keys).passed());
    if (s->monoidal()) {
      CHECK(check_bialgebra(c, keys, max).passed());
      CHECK(check_antipode(c, keys).passed());
    }
  }
}

TEST_CASE("cocommutativity dichotomy") {
  for (const SpeciesPtr& s : {sets(), graphs(), linear_orders()})
    CHECK(check_cocommutativity(Coalgebra(s), basis_keys(*s, 3, {})).passed());
  const Coalgebra pc(posets());
  CHECK(check_cocommutativity(pc, basis_keys(*posets(), 2, {})).passed());
  const AxiomReport r = check_cocommutativity(pc, basis_keys(*posets(), 3, {}));
  CHECK_FALSE(r.passed());
  REQUIRE(r.first_failure() != nullptr);
  CHECK_FALSE(r.first_failure()->detail.empty());
}

TEST_CASE("groupoid route agrees with the combinatorial sum") {
  for (const auto& name : builtin_species_names()) {
    CAPTURE(name);
    const SpeciesPtr s = species_by_name(name);
    CHECK(cardinality_coproduct_consistency(Coalgebra(s), 2).passed());
  }
  BuildBounds b;
  b.levels = 2;
  b.size = 2;
  const SimplicialPtr t = build(posets(), b);
  const Coalgebra c(posets());
  for (int x = 0; x < t->level(1)->object_count(); ++x)
    CHECK(groupoid_coproduct(*t, x) == c.coproduct(t->simplex(1, x).structure));
}

TEST_CASE("module arithmetic") {
  ModuleElement m;
  m.add("set:00", 2);
  m.add("set:00", -2);
  CHECK(m.empty());
  TensorElement t;
  t.add("l", "r", mpq_class(1, 3));
  t += t;
  CHECK(t.terms.at({"l", "r"}) == mpq_class(2, 3));
  CHECK(t.swapped().terms.at({"r", "l"}) == mpq_class(2, 3));
  t -= t.scaled(1);
  CHECK(t.empty());
  const TensorElement ab = tensor(ModuleElement::basis("a").scaled(2), ModuleElement::basis("b").scaled(3));
  CHECK(ab.terms.at({"a", "b"}) == 6);
}

}
