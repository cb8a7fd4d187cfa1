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


// Acceptance run: one PASS/FAIL line per criterion, exact arithmetic
// throughout.  Exit status is non-zero when any line fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "dspecies/coalg.hpp"
#include "dspecies/decomp.hpp"
#include "dspecies/error.hpp"

using namespace dsp;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

BuildBounds bounds(int levels, int size, int edges = 2) {
  BuildBounds b;
  b.levels = levels;
  b.size = size;
  b.decoration.edges = edges;
  return b;
}

std::string first_failure(const AxiomReport& r) {
  const ReportEntry* e = r.first_failure();
  if (!e) return r.suite + ": ok";
  std::string out = r.suite + ": " + e->name;
  if (!e->detail.empty()) out += " (" + e->detail + ")";
  return out;
}

// The axiom builds, shared by several criteria.
const std::vector<std::string> kAxiomSpecies = {"set", "graph", "poset", "forest", "dposet", "dag"};

std::map<std::string, SimplicialPtr>& builds() {
  static std::map<std::string, SimplicialPtr> cache;
  return cache;
}

const SimplicialPtr& main_build(const std::string& name) {
  auto& cache = builds();
  auto it = cache.find(name);
  if (it == cache.end()) it = cache.emplace(name, build(species_by_name(name), bounds(3, 3))).first;
  return it->second;
}

std::map<std::string, bool> decomposition_passed;

Outcome simplicial_identities() {
  Outcome o;
  int entries = 0;
  for (const auto& name : kAxiomSpecies) {
    const AxiomReport r = check_simplicial_identities(*main_build(name));
    entries += static_cast<int>(r.entries.size());
    if (!r.passed()) o.fail(name + " " + first_failure(r));
  }
  if (o.ok) o.detail = std::to_string(entries) + " identity checks over 6 species";
  return o;
}

Outcome decomposition() {
  Outcome o;
  int pass = 0, skipped = 0;
  for (const auto& name : kAxiomSpecies) {
    const AxiomReport r = check_decomposition(*main_build(name));
    decomposition_passed[name] = r.passed();
    pass += r.count(Verdict::kPass);
    skipped += r.count(Verdict::kSkipped);
    if (!r.passed()) o.fail(name + " " + first_failure(r));
  }
  if (o.ok)
    o.detail = std::to_string(pass) + " squares are homotopy pullbacks, " + std::to_string(skipped) +
               " lie beyond the truncation";
  return o;
}

Outcome segal() {
  Outcome o;
  const AxiomReport sets_report = check_segal(*main_build("set"));
  if (!sets_report.passed()) o.fail("set " + first_failure(sets_report));
  std::string witnesses;
  for (const std::string name : {"graph", "poset", "forest"}) {
    const AxiomReport r = check_segal(*main_build(name));
    const ReportEntry* e = r.first_failure();
    if (!e) {
      o.fail(name + " unexpectedly satisfies the Segal condition");
      continue;
    }
    if (!e->witness) {
      o.fail(name + " fails without a witness");
      continue;
    }
    const EquivalenceWitness& w = *e->witness;
    const bool named = w.kind == EquivalenceWitness::Kind::kHomDefect ? !w.x.empty() && !w.y.empty() : !w.x.empty();
    if (!named) o.fail(name + " witness does not name its objects");
    if (witnesses.empty()) witnesses = name + " at " + e->name + ": " + w.to_json();
  }
  if (o.ok) o.detail = "sets pass; first witness " + witnesses;
  return o;
}

Outcome culf_projections() {
  Outcome o;
  const BuildBounds b = bounds(3, 3);
  const SimplicialPtr pos = main_build("poset");
  for (const std::string name : {"poset", "forest", "linear", "dposet", "dag"}) {
    const SimplicialPtr t = name == "linear" ? build(linear_orders(), b) : main_build(name);
    const AxiomReport r = check_culf(projection(t, pos));
    if (!r.passed()) o.fail(name + " -> poset " + first_failure(r));
  }
  const AxiomReport g = check_culf(projection(main_build("graph"), main_build("set")));
  if (!g.passed()) o.fail("graph -> set " + first_failure(g));
  if (o.ok) o.detail = "five directed species onto posets, graphs onto sets";
  return o;
}

Outcome finiteness() {
  Outcome o;
  for (const auto& name : builtin_species_names()) {
    const AxiomReport r = check_finiteness(*build(species_by_name(name), bounds(4, 3)));
    if (!r.passed()) o.fail(name + " " + first_failure(r));
  }
  if (o.ok) o.detail = "complete, locally finite, locally discrete, finite length at n = 4 for all 7 species";
  return o;
}

Outcome decalage() {
  Outcome o;
  for (const std::string name : {"poset", "forest", "set", "graph"}) {
    const AxiomReport r = check_decalage_formulas(species_by_name(name), bounds(2, 3));
    if (!r.passed()) o.fail(name + " " + first_failure(r));
  }
  if (o.ok) o.detail = "lower and upper comparisons are equivalences on levels 0..2";
  return o;
}

Outcome dec_coherence() {
  Outcome o;
  int checked = 0;
  for (const auto& name : kAxiomSpecies) {
    if (!decomposition_passed[name]) continue;
    ++checked;
    for (bool bottom : {true, false}) {
      const DecResult d = bottom ? dec_bot(main_build(name)) : dec_top(main_build(name));
      const std::string side = bottom ? " dec_bot " : " dec_top ";
      const AxiomReport seg = check_segal(*d.dec);
      if (!seg.passed()) o.fail(name + side + first_failure(seg));
      const AxiomReport culf = check_culf(d.dec_map);
      if (!culf.passed()) o.fail(name + side + first_failure(culf));
    }
  }
  if (checked != static_cast<int>(kAxiomSpecies.size())) o.fail("decomposition did not pass everywhere");
  if (o.ok) o.detail = "both decalages Segal, both dec maps culf, 6 species";
  return o;
}

Outcome coalgebra_laws() {
  struct Case {
    std::string name;
    int size;
    int edges;
  };
  Outcome o;
  std::string sizes;
  for (const Case& c : {Case{"set", 5, 2}, Case{"graph", 4, 3}, Case{"poset", 4, 2}, Case{"forest", 5, 2},
                        Case{"dposet", 3, 2}, Case{"dag", 4, 2}}) {
    const SpeciesPtr s = species_by_name(c.name);
    const Coalgebra alg(s, EnumBounds{c.edges});
    const auto keys = basis_keys(*s, c.size, alg.bounds());
    for (const AxiomReport& r :
         {check_coassociativity(alg, keys), check_counit(alg, keys), check_bialgebra(alg, keys, c.size)})
      if (!r.passed()) o.fail(c.name + " " + first_failure(r));
    sizes += (sizes.empty() ? "" : ", ") + c.name + " " + std::to_string(keys.size());
  }
  if (o.ok) o.detail = "basis elements checked: " + sizes;
  return o;
}

// Independent oracle: admissible cuts read off the subset lattice.
TensorElement cut_oracle(const Coalgebra& c, const Structure& x) {
  const SpeciesDef& s = *c.species();
  const Mask full = x.carrier.full();
  TensorElement t;
  for (Mask m = 0; m <= full; ++m) {
    bool lower = true;
    for (int i = 0; i < x.size(); ++i)
      for (int j = 0; j < x.size(); ++j)
        if ((m >> i & 1) && x.carrier.leq(j, i) && !(m >> j & 1)) lower = false;
    if (s.directed() && !lower) continue;
    t.add(c.key(restrict_structure(s, x, m)), c.key(restrict_structure(s, x, full & ~m)), 1);
  }
  return t;
}

Outcome known_expansions() {
  Outcome o;
  const Coalgebra sc(sets());
  auto set_of = [&](int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(universe_label(i));
    return make_structure(*sets(), FinPoset::discrete(labels), {});
  };
  const TensorElement three = sc.coproduct(set_of(3));
  TensorElement binomial;
  const int row[] = {1, 3, 3, 1};
  for (int i = 0; i <= 3; ++i) binomial.add(sc.key(set_of(i)), sc.key(set_of(3 - i)), row[i]);
  if (!(three == binomial) || !(three == cut_oracle(sc, set_of(3)))) o.fail("3-set is not (1,3,3,1)");

  const Coalgebra pc(posets());
  const Structure chain = make_structure(*posets(), FinPoset::chain({"a", "b"}), {});
  const Key point = pc.key(make_structure(*posets(), FinPoset::discrete({"a"}), {}));
  TensorElement chain_expected;
  chain_expected.add(pc.unit(), pc.key(chain), 1);
  chain_expected.add(point, point, 1);
  chain_expected.add(pc.key(chain), pc.unit(), 1);
  if (!(pc.coproduct(chain) == chain_expected) || !(pc.coproduct(chain) == cut_oracle(pc, chain)))
    o.fail("2-chain expansion differs");

  const Coalgebra fc(forests());
  const Structure tree = make_structure(*forests(), FinPoset::chain({"leaf", "root"}), {});
  const Key dot = fc.key(make_structure(*forests(), FinPoset::discrete({"a"}), {}));
  TensorElement cuts;
  cuts.add(fc.unit(), fc.key(tree), 1);
  cuts.add(dot, dot, 1);
  cuts.add(fc.key(tree), fc.unit(), 1);
  if (!(fc.coproduct(tree) == cuts) || !(fc.coproduct(tree) == cut_oracle(fc, tree)))
    o.fail("2-node tree expansion differs");
  if (o.ok) o.detail = "3-set (1,3,3,1), 2-chain and 2-node tree each 3 terms, all equal to the cut oracle";
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  for (const auto& name : builtin_species_names()) {
    const AxiomReport r = cardinality_coproduct_consistency(Coalgebra(species_by_name(name)), 3);
    if (!r.passed()) o.fail(name + " " + first_failure(r));
  }
  if (o.ok) o.detail = "fibre cardinalities equal the cut sums for all 7 species, size <= 3";
  return o;
}

Outcome antipode() {
  Outcome o;
  for (const SpeciesPtr& s : {sets(), forests()}) {
    const Coalgebra c(s);
    const AxiomReport r = check_antipode(c, basis_keys(*s, 5, {}));
    if (!r.passed()) o.fail(s->tag() + " " + first_failure(r));
  }
  const Coalgebra c(sets());
  for (int n = 0; n <= 5; ++n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(universe_label(i));
    const Key k = c.key(make_structure(*sets(), FinPoset::discrete(labels), {}));
    if (!(c.antipode(k) == ModuleElement::basis(k).scaled(n % 2 ? -1 : 1)))
      o.fail("S of the " + std::to_string(n) + "-set is not (-1)^n times itself");
  }
  if (o.ok) o.detail = "convolution identity on sets and forests up to size 5; S([n]) = (-1)^n [n] for n <= 5";
  return o;
}

Outcome cocommutativity() {
  Outcome o;
  for (const auto& [s, size, edges] : {std::tuple{sets(), 5, 2}, std::tuple{graphs(), 4, 3}}) {
    const Coalgebra c(s, EnumBounds{edges});
    const AxiomReport r = check_cocommutativity(c, basis_keys(*s, size, c.bounds()));
    if (!r.passed()) o.fail(s->tag() + " " + first_failure(r));
  }
  const Coalgebra pc(posets());
  const AxiomReport r = check_cocommutativity(pc, basis_keys(*posets(), 4, {}));
  const ReportEntry* w = r.first_failure();
  if (!w) o.fail("posets are cocommutative within bounds");
  const Structure chain = make_structure(*posets(), FinPoset::chain({"a", "b"}), {});
  const bool chain_symmetric = pc.coproduct(chain).swapped() == pc.coproduct(chain);
  if (o.ok)
    o.detail = std::string("sets and graphs swap-invariant; posets fail at ") + w->name + " (" + w->detail +
               "); the 2-chain coproduct is " + (chain_symmetric ? "" : "not ") + "swap-symmetric";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"simplicial identities", simplicial_identities},
      {"decomposition-space axiom", decomposition},
      {"Segal dichotomy", segal},
      {"culf projections", culf_projections},
      {"finiteness", finiteness},
      {"decalage formulas", decalage},
      {"decalage coherence", dec_coherence},
      {"coalgebra laws", coalgebra_laws},
      {"known expansions", known_expansions},
      {"oracle equivalence", oracle_equivalence},
      {"antipode", antipode},
      {"cocommutativity dichotomy", cocommutativity},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.ok) ++failures;
    std::printf("%s %2d %s: %s [%.1fs]\n", o.ok ? "PASS" : "FAIL", index, name, o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
