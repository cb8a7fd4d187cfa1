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

#include <algorithm>
#include <cmath>

#include "dspecies/decomp.hpp"
#include "dspecies/error.hpp"

using namespace dsp;

namespace {

BuildBounds small(int levels, int size) {
  BuildBounds b;
  b.levels = levels;
  b.size = size;
  return b;
}

mpq_class factorial(int n) { return n <= 1 ? mpq_class(1) : factorial(n - 1) * n; }

// Labelled structures on n points divided by n!, summed up to the bound.
mpq_class expected_x1(const SpeciesDef& s, int size) {
  mpq_class total = 0;
  for (int n = 0; n <= size; ++n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(universe_label(i));
    std::size_t count = 0;
    for (const auto& c : labelled_carriers(s, labels)) count += s.decorations(c, {}).size();
    total += mpq_class(static_cast<long>(count)) / factorial(n);
  }
  return total;
}

}  // namespace

TEST_SUITE("decomp") {

TEST_CASE("level cardinalities") {
  for (const auto& name : builtin_species_names()) {
    CAPTURE(name);
    const SpeciesPtr s = species_by_name(name);
    const SimplicialPtr t = build(s, small(2, 2));
    CHECK(homotopy_cardinality(*t->level(0)) == 1);
    CHECK(homotopy_cardinality(*t->level(1)) == expected_x1(*s, 2));
  }
  // Sets: k-layerings of an n-set are the k^n maps to the levels.
  const SimplicialPtr t = build(sets(), small(3, 2));
  for (int k = 0; k <= 3; ++k) {
    mpq_class expected = 0;
    for (int n = 0; n <= 2; ++n) expected += mpq_class(static_cast<long>(std::pow(k, n))) / factorial(n);
    CHECK(homotopy_cardinality(*t->level(k)) == expected);
  }
  const auto deg = t->degenerate(1);
  CHECK(std::count(deg.begin(), deg.end(), true) == 1);
}

TEST_CASE("layered posets of size at most two") {
  // Empty: 1; point: 2 layerings; chain: 3; antichain: 3 up to swapping.
  const SimplicialPtr t = build(posets(), small(2, 2));
  CHECK(iso_classes(*t->level(2)).size() == 9);
  CHECK(iso_classes(*t->level(0)).size() == 1);
}

TEST_CASE("degenerate simplices are exactly those with an empty layer") {
  const SimplicialPtr t = build(forests(), small(3, 3));
  for (int n = 1; n <= 3; ++n) {
    const auto deg = t->degenerate(n);
    for (int o = 0; o < t->level(n)->object_count(); ++o) {
      const Simplex& s = t->simplex(n, o);
      bool empty_layer = false;
      for (int i = 1; i <= n; ++i)
        empty_layer = empty_layer || std::find(s.level.begin(), s.level.end(), i) == s.level.end();
      CHECK(deg[static_cast<std::size_t>(o)] == empty_layer);
    }
  }
}

TEST_CASE("d1 fibres count 2-layerings") {
  const SimplicialPtr t = build(posets(), small(2, 3));
  for (int x = 0; x < t->level(1)->object_count(); ++x) {
    const Fibre f = fibre(t->face(2, 1), x);
    CHECK(is_discrete(*f.groupoid));
    const auto layerings = enumerate_layerings(t->simplex(1, x).structure.carrier, 2);
    CHECK(homotopy_cardinality(*f.groupoid) == static_cast<long>(layerings.size()));
  }
}

TEST_CASE("simplicial identities and decomposition for every built-in species") {
  for (const auto& name : builtin_species_names()) {
    CAPTURE(name);
    const SimplicialPtr t = build(species_by_name(name), small(3, 2));
    const AxiomReport id = check_simplicial_identities(*t);
    CHECK(id.passed());
    CHECK(id.count(Verdict::kFail) == 0);
    const AxiomReport dec = check_decomposition(*t);
    CHECK(dec.passed());
    CHECK(dec.count(Verdict::kPass) > 0);
  }
}

TEST_CASE("theta star agrees with the composite of faces and degeneracies") {
  const SimplicialPtr t = build(posets(), small(3, 2));
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n)
      for (const auto& theta : simplex::all_delta_maps(m, n)) {
        CAPTURE(simplex::name(theta));
        CHECK(t->apply(theta) == direct_map(*t, theta));
      }
}

TEST_CASE("a corrupted face map is caught") {
  const SimplicialPtr t = build(sets(), small(3, 2));
  TruncatedSimplicialGroupoid broken = *t;
  broken.mutable_face(3, 0) = broken.face(3, 3);
  const AxiomReport r = check_simplicial_identities(broken);
  CHECK_FALSE(r.passed());
  REQUIRE(r.first_failure() != nullptr);
  CHECK(r.to_json().find("\"passed\":false") != std::string::npos);
}

TEST_CASE("segal condition separates sets from posets") {
  CHECK(check_segal(*build(sets(), small(3, 2))).passed());
  CHECK(check_segal(*build(linear_orders(), small(3, 2))).passed());
  const AxiomReport r = check_segal(*build(posets(), small(2, 2)));
  CHECK_FALSE(r.passed());
  const ReportEntry* bad = r.first_failure();
  REQUIRE(bad != nullptr);
  REQUIRE(bad->witness);
  CHECK(bad->witness->kind == EquivalenceWitness::Kind::kHomDefect);
  CHECK_FALSE(check_segal(*build(graphs(), small(2, 2))).passed());
}

TEST_CASE("projections and decalage maps are culf") {
  const BuildBounds b = small(3, 2);
  const SimplicialPtr dag = build(acyclic_digraphs(), b);
  const SimplicialPtr pos = build(posets(), b);
  const SimplicialMap p = projection(dag, pos);
  CHECK(p.check_simplicial().empty());
  CHECK(check_culf(p).passed());
  CHECK(check_culf(projection(build(graphs(), b), build(sets(), b))).passed());
  CHECK_THROWS(projection(pos, dag));

  for (const DecResult& d : {dec_bot(pos), dec_top(pos)}) {
    CHECK(d.dec->max_level() == pos->max_level() - 1);
    CHECK(d.dec_map.check_simplicial().empty());
    CHECK(check_culf(d.dec_map).passed());
    CHECK(check_segal(*d.dec).passed());
  }
}

TEST_CASE("fat nerves") {
  for (NerveVariant v : {NerveVariant::kLower, NerveVariant::kUpper}) {
    const SimplicialPtr f = fat_nerve(forests(), small(2, 2), v);
    CHECK(check_simplicial_identities(*f).passed());
    CHECK(check_segal(*f).passed());
  }
  CHECK(check_decalage_formulas(posets(), small(2, 2)).passed());
}

TEST_CASE("finiteness") {
  const AxiomReport r = check_finiteness(*build(posets(), small(3, 2)));
  CHECK(r.passed());
  CHECK(std::any_of(r.entries.begin(), r.entries.end(), [](const ReportEntry& e) { return e.name == "finite-length"; }));
  CHECK_THROWS_AS(check_finiteness(*build(sets(), small(1, 2))), InvalidArgument);
}

TEST_CASE("monoidal structure") {
  CHECK(check_monoidal(posets(), 2, 1, {}).passed());
  CHECK(check_monoidal(graphs(), 2, 1, EnumBounds{1}).passed());
  CHECK_THROWS_AS(check_monoidal(linear_orders(), 2, 1, {}), NotMonoidalError);
}

TEST_CASE("build bounds") {
  CHECK_THROWS_AS(build(sets(), small(2, 9)), BoundExceeded);
  BuildBounds narrow = small(2, 3);
  narrow.universe = 2;
  CHECK_THROWS_AS(build(sets(), narrow), InvalidArgument);
  BuildBounds shifted = small(2, 2);
  shifted.universe_offset = 15;
  CHECK_THROWS_AS(build(sets(), shifted), BoundExceeded);
  const SimplicialPtr t = build(sets(), small(1, 1));
  CHECK_THROWS_AS(t->face(2, 0), InvalidArgument);
  CHECK_THROWS_AS(t->level(3), InvalidArgument);
}

}
