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


#include "dspecies/groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "dspecies/error.hpp"
#include "json.hpp"

namespace dsp {

namespace {

std::uint64_t pack3(int a, int b, int c) {
  constexpr int kMax = 1 << 21;
  if (a >= kMax || b >= kMax || c >= kMax)
    throw BoundExceeded("groupoid too large for packed indexing");
  return (static_cast<std::uint64_t>(a) << 42) | (static_cast<std::uint64_t>(b) << 21) |
         static_cast<std::uint64_t>(c);
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

}  // namespace

FinGroupoid::FinGroupoid(std::vector<std::string> names, std::vector<int> first_out,
                         std::vector<int> targets, std::vector<int> identities,
                         std::vector<int> inverses, Composer compose)
    : names_(std::move(names)),
      first_out_(std::move(first_out)),
      targets_(std::move(targets)),
      identities_(std::move(identities)),
      inverses_(std::move(inverses)),
      compose_(std::move(compose)) {
  const int n = object_count();
  if (static_cast<int>(first_out_.size()) != n + 1 || first_out_.front() != 0 ||
      first_out_.back() != morphism_count() || static_cast<int>(identities_.size()) != n ||
      inverses_.size() != targets_.size())
    throw InvalidArgument("inconsistent groupoid tables");
  sources_.resize(targets_.size());
  in_.resize(static_cast<std::size_t>(n));
  for (int o = 0; o < n; ++o) {
    if (first_out_[o] > first_out_[o + 1]) throw InvalidArgument("morphism blocks out of order");
    for (int m = first_out_[o]; m < first_out_[o + 1]; ++m) sources_[m] = o;
  }
  for (int m = 0; m < morphism_count(); ++m) {
    if (targets_[m] < 0 || targets_[m] >= n) throw InvalidArgument("morphism target out of range");
    in_[targets_[m]].push_back(m);
  }
  for (int o = 0; o < n; ++o) by_name_.emplace(names_[o], o);
}

int FinGroupoid::find_object(const std::string& name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? -1 : it->second;
}

int FinGroupoid::compose(int after, int before) const {
  if (target(before) != source(after))
    throw InvalidArgument("morphisms are not composable");
  return compose_(after, before);
}

std::vector<int> FinGroupoid::hom(int x, int y) const {
  std::vector<int> out;
  for (int m = out_begin(x); m < out_end(x); ++m)
    if (target(m) == y) out.push_back(m);
  return out;
}

std::string FinGroupoid::check_laws() const {
  for (int o = 0; o < object_count(); ++o) {
    int e = identity(o);
    if (e < 0 || e >= morphism_count() || source(e) != o || target(e) != o)
      return "identity of " + name(o) + " is not an endomorphism";
  }
  for (int m = 0; m < morphism_count(); ++m) {
    const int i = inverse(m);
    if (i < 0 || i >= morphism_count() || source(i) != target(m) || target(i) != source(m))
      return "inverse of morphism " + std::to_string(m) + " has the wrong ends";
    if (compose(m, identity(source(m))) != m || compose(identity(target(m)), m) != m)
      return "identity law fails at morphism " + std::to_string(m);
    if (compose(i, m) != identity(source(m)) || compose(m, i) != identity(target(m)))
      return "inverse law fails at morphism " + std::to_string(m);
    for (int g = out_begin(target(m)); g < out_end(target(m)); ++g) {
      const int gm = compose(g, m);
      if (source(gm) != source(m) || target(gm) != target(g))
        return "composite has the wrong ends";
      for (int h = out_begin(target(g)); h < out_end(target(g)); ++h)
        if (compose(h, gm) != compose(compose(h, g), m))
          return "associativity fails at morphism " + std::to_string(m);
    }
  }
  return {};
}

int FinGroupoid::Builder::add_object(std::string name) {
  names_.push_back(std::move(name));
  return static_cast<int>(names_.size()) - 1;
}

int FinGroupoid::Builder::add_morphism(int source, int target) {
  morphisms_.emplace_back(source, target);
  return static_cast<int>(morphisms_.size()) - 1;
}

void FinGroupoid::Builder::set_identity(int object, int morphism) { identities_[object] = morphism; }
void FinGroupoid::Builder::set_inverse(int morphism, int inverse) { inverses_[morphism] = inverse; }
void FinGroupoid::Builder::set_composite(int after, int before, int result) {
  composites_[{after, before}] = result;
}

FinGroupoid FinGroupoid::Builder::build() const {
  const int n = static_cast<int>(names_.size());
  const int m = static_cast<int>(morphisms_.size());
  std::vector<int> order(static_cast<std::size_t>(m));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return morphisms_[a].first < morphisms_[b].first; });
  std::vector<int> renum(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) renum[order[i]] = i;

  std::vector<int> first(static_cast<std::size_t>(n + 1), 0);
  std::vector<int> targets(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    auto [s, t] = morphisms_[order[i]];
    if (s < 0 || s >= n || t < 0 || t >= n) throw InvalidArgument("morphism end out of range");
    ++first[s + 1];
    targets[i] = t;
  }
  for (int o = 0; o < n; ++o) first[o + 1] += first[o];
  std::vector<int> ids(static_cast<std::size_t>(n));
  for (int o = 0; o < n; ++o) {
    auto it = identities_.find(o);
    if (it == identities_.end()) throw InvalidArgument("missing identity for " + names_[o]);
    ids[o] = renum[it->second];
  }
  std::vector<int> inv(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) {
    auto it = inverses_.find(i);
    if (it == inverses_.end()) throw InvalidArgument("missing inverse");
    inv[renum[i]] = renum[it->second];
  }
  auto table = std::make_shared<std::map<std::pair<int, int>, int>>();
  for (const auto& [key, r] : composites_) (*table)[{renum[key.first], renum[key.second]}] = renum[r];
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      if (morphisms_[b].second == morphisms_[a].first &&
          !composites_.count({a, b}))
        throw InvalidArgument("missing composite");
  return FinGroupoid(names_, std::move(first), std::move(targets), std::move(ids), std::move(inv),
                     [table](int after, int before) { return table->at({after, before}); });
}

FinGroupoid FinGroupoid::from_group(std::string name, int order,
                                    const std::function<int(int, int)>& multiply) {
  std::vector<int> inv(static_cast<std::size_t>(order), -1);
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h)
      if (multiply(g, h) == 0) inv[g] = h;
  auto table = std::make_shared<std::vector<int>>();
  for (int g = 0; g < order; ++g)
    for (int h = 0; h < order; ++h) table->push_back(multiply(g, h));
  return FinGroupoid({std::move(name)}, {0, order}, std::vector<int>(static_cast<std::size_t>(order), 0),
                     {0}, std::move(inv),
                     [table, order](int a, int b) { return (*table)[a * order + b]; });
}

FinGroupoid FinGroupoid::discrete(std::vector<std::string> names) {
  const int n = static_cast<int>(names.size());
  std::vector<int> first(static_cast<std::size_t>(n + 1));
  std::iota(first.begin(), first.end(), 0);
  std::vector<int> ids(static_cast<std::size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  return FinGroupoid(std::move(names), std::move(first), ids, ids, ids,
                     [](int a, int) { return a; });
}

FinGroupoid FinGroupoid::codiscrete(std::vector<std::string> names) {
  const int n = static_cast<int>(names.size());
  std::vector<int> first, targets, ids, inv;
  for (int i = 0; i <= n; ++i) first.push_back(i * n);
  for (int i = 0; i < n; ++i) {
    ids.push_back(i * n + i);
    for (int j = 0; j < n; ++j) {
      targets.push_back(j);
      inv.push_back(j * n + i);
    }
  }
  return FinGroupoid(std::move(names), std::move(first), std::move(targets), std::move(ids),
                     std::move(inv),
                     [n](int after, int before) { return (before / n) * n + after % n; });
}

GroupoidFunctor GroupoidFunctor::identity(GroupoidPtr g) {
  GroupoidFunctor f{g, g, {}, {}};
  f.obj.resize(static_cast<std::size_t>(g->object_count()));
  std::iota(f.obj.begin(), f.obj.end(), 0);
  f.mor.resize(static_cast<std::size_t>(g->morphism_count()));
  std::iota(f.mor.begin(), f.mor.end(), 0);
  return f;
}

std::string GroupoidFunctor::check() const {
  if (!dom || !cod) return "functor without domain or codomain";
  if (static_cast<int>(obj.size()) != dom->object_count() ||
      static_cast<int>(mor.size()) != dom->morphism_count())
    return "functor tables have the wrong size";
  for (int o = 0; o < dom->object_count(); ++o) {
    if (obj[o] < 0 || obj[o] >= cod->object_count()) return "object image out of range";
    if (mor[dom->identity(o)] != cod->identity(obj[o]))
      return "identity not preserved at " + dom->name(o);
  }
  for (int m = 0; m < dom->morphism_count(); ++m) {
    const int fm = mor[m];
    if (fm < 0 || fm >= cod->morphism_count()) return "morphism image out of range";
    if (cod->source(fm) != obj[dom->source(m)] || cod->target(fm) != obj[dom->target(m)])
      return "morphism image has the wrong ends";
    for (int g = dom->out_begin(dom->target(m)); g < dom->out_end(dom->target(m)); ++g)
      if (mor[dom->compose(g, m)] != cod->compose(mor[g], fm))
        return "composition not preserved";
  }
  return {};
}

GroupoidFunctor compose(const GroupoidFunctor& g, const GroupoidFunctor& f) {
  if (f.cod != g.dom) throw InvalidArgument("functors are not composable");
  GroupoidFunctor h{f.dom, g.cod, {}, {}};
  h.obj.reserve(f.obj.size());
  for (int o : f.obj) h.obj.push_back(g.obj[o]);
  h.mor.reserve(f.mor.size());
  for (int m : f.mor) h.mor.push_back(g.mor[m]);
  return h;
}

std::vector<int> components(const FinGroupoid& g) {
  std::vector<int> parent(static_cast<std::size_t>(g.object_count()));
  std::iota(parent.begin(), parent.end(), 0);
  for (int m = 0; m < g.morphism_count(); ++m) {
    int a = find_root(parent, g.source(m)), b = find_root(parent, g.target(m));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> comp(parent.size(), -1), label(parent.size(), -1);
  int next = 0;
  for (int o = 0; o < g.object_count(); ++o) {
    int r = find_root(parent, o);
    if (label[r] < 0) label[r] = next++;
    comp[o] = label[r];
  }
  return comp;
}

std::vector<IsoClass> iso_classes(const FinGroupoid& g) {
  std::vector<int> comp = components(g);
  std::vector<IsoClass> out;
  for (int o = 0; o < g.object_count(); ++o) {
    if (comp[o] == static_cast<int>(out.size()))
      out.push_back({o, static_cast<std::uint64_t>(g.automorphisms(o).size()), 0});
    ++out[comp[o]].size;
  }
  return out;
}

mpq_class homotopy_cardinality(const FinGroupoid& g) {
  mpq_class total = 0;
  for (const auto& c : iso_classes(g)) total += mpq_class(1, c.automorphisms);
  total.canonicalize();
  return total;
}

bool is_discrete(const FinGroupoid& g) {
  for (int o = 0; o < g.object_count(); ++o)
    if (g.automorphisms(o).size() != 1) return false;
  return true;
}

GroupoidPtr product(const GroupoidPtr& g, const GroupoidPtr& h) {
  const int ng = g->object_count(), nh = h->object_count();
  std::vector<std::string> names;
  std::vector<int> first{0}, targets, ids, inv;
  for (int x = 0; x < ng; ++x)
    for (int y = 0; y < nh; ++y) {
      names.push_back("(" + g->name(x) + ", " + h->name(y) + ")");
      first.push_back(first.back() + g->out_degree(x) * h->out_degree(y));
    }
  auto id_of = [g, h, first, nh](int u, int v) {
    const int o = g->source(u) * nh + h->source(v);
    return first[o] + g->out_position(u) * h->out_degree(h->source(v)) + h->out_position(v);
  };
  for (int x = 0; x < ng; ++x)
    for (int y = 0; y < nh; ++y) {
      ids.push_back(id_of(g->identity(x), h->identity(y)));
      for (int u = g->out_begin(x); u < g->out_end(x); ++u)
        for (int v = h->out_begin(y); v < h->out_end(y); ++v) {
          targets.push_back(g->target(u) * nh + h->target(v));
          inv.push_back(id_of(g->inverse(u), h->inverse(v)));
        }
    }
  // Decode a product morphism back into its factors.
  auto factors = std::make_shared<std::vector<std::pair<int, int>>>();
  for (int x = 0; x < ng; ++x)
    for (int y = 0; y < nh; ++y)
      for (int u = g->out_begin(x); u < g->out_end(x); ++u)
        for (int v = h->out_begin(y); v < h->out_end(y); ++v) factors->emplace_back(u, v);
  return std::make_shared<FinGroupoid>(
      std::move(names), std::move(first), std::move(targets), std::move(ids), std::move(inv),
      [g, h, factors, id_of](int after, int before) {
        auto [u2, v2] = (*factors)[after];
        auto [u1, v1] = (*factors)[before];
        return id_of(g->compose(u2, u1), h->compose(v2, v1));
      });
}

GroupoidPtr disjoint_union(const GroupoidPtr& g, const GroupoidPtr& h) {
  const int no = g->object_count(), nm = g->morphism_count();
  std::vector<std::string> names;
  std::vector<int> first, targets, ids, inv;
  for (int o = 0; o < no; ++o) {
    names.push_back("L." + g->name(o));
    first.push_back(g->out_begin(o));
    ids.push_back(g->identity(o));
  }
  for (int o = 0; o < h->object_count(); ++o) {
    names.push_back("R." + h->name(o));
    first.push_back(nm + h->out_begin(o));
    ids.push_back(nm + h->identity(o));
  }
  first.push_back(nm + h->morphism_count());
  for (int m = 0; m < nm; ++m) {
    targets.push_back(g->target(m));
    inv.push_back(g->inverse(m));
  }
  for (int m = 0; m < h->morphism_count(); ++m) {
    targets.push_back(no + h->target(m));
    inv.push_back(nm + h->inverse(m));
  }
  return std::make_shared<FinGroupoid>(
      std::move(names), std::move(first), std::move(targets), std::move(ids), std::move(inv),
      [g, h, nm](int after, int before) {
        if (before < nm) return g->compose(after, before);
        return nm + h->compose(after - nm, before - nm);
      });
}

namespace {

// A groupoid whose objects sit over objects of `dom` and whose morphisms out
// of an object x are in bijection with the morphisms out of base[x].
// target_of(x, u) gives the target of the morphism lying over u.
struct Lifted {
  GroupoidPtr groupoid;
  std::vector<int> first;
};

Lifted lift(const GroupoidPtr& dom, const std::vector<int>& base, std::vector<std::string> names,
            const std::function<int(int, int)>& target_of) {
  const int n = static_cast<int>(base.size());
  auto first = std::make_shared<std::vector<int>>(1, 0);
  for (int x = 0; x < n; ++x) first->push_back(first->back() + dom->out_degree(base[x]));
  auto src = std::make_shared<std::vector<int>>();
  std::vector<int> targets, ids, inv;
  for (int x = 0; x < n; ++x) {
    ids.push_back((*first)[x] + dom->out_position(dom->identity(base[x])));
    for (int u = dom->out_begin(base[x]); u < dom->out_end(base[x]); ++u) {
      src->push_back(x);
      targets.push_back(target_of(x, u));
    }
  }
  for (std::size_t m = 0; m < targets.size(); ++m) {
    const int x = (*src)[m];
    const int u = dom->out_begin(base[x]) + static_cast<int>(m) - (*first)[x];
    inv.push_back((*first)[targets[m]] + dom->out_position(dom->inverse(u)));
  }
  auto bases = std::make_shared<std::vector<int>>(base);
  auto g = std::make_shared<FinGroupoid>(
      std::move(names), *first, std::move(targets), std::move(ids), std::move(inv),
      [dom, first, src, bases](int after, int before) {
        const int x = (*src)[before];
        const int y = (*src)[after];
        const int u1 = dom->out_begin((*bases)[x]) + before - (*first)[x];
        const int u2 = dom->out_begin((*bases)[y]) + after - (*first)[y];
        return (*first)[x] + dom->out_position(dom->compose(u2, u1));
      });
  return {g, *first};
}

GroupoidFunctor lifted_projection(const Lifted& l, const GroupoidPtr& dom,
                                  const std::vector<int>& base) {
  GroupoidFunctor p{l.groupoid, dom, base, {}};
  for (int x = 0; x < static_cast<int>(base.size()); ++x)
    for (int u = dom->out_begin(base[x]); u < dom->out_end(base[x]); ++u) p.mor.push_back(u);
  return p;
}

std::vector<std::vector<int>> preimages(const GroupoidFunctor& f) {
  std::vector<std::vector<int>> pre(static_cast<std::size_t>(f.cod->object_count()));
  for (int o = 0; o < f.dom->object_count(); ++o) pre[f.obj[o]].push_back(o);
  return pre;
}

struct FibreBuild {
  Lifted lifted;
  std::vector<int> base;
  std::vector<int> over;
  std::unordered_map<std::uint64_t, int> index;
};

FibreBuild build_fibre(const GroupoidFunctor& f, int z, const std::vector<std::vector<int>>& pre,
                       const std::function<bool(int)>& keep = {}) {
  FibreBuild fb;
  std::vector<std::string> names;
  for (int phi : f.cod->in(z))
    for (int x : pre[f.cod->source(phi)]) {
      if (keep && !keep(x)) continue;
      fb.index.emplace(pack3(x, phi, 0), static_cast<int>(fb.base.size()));
      fb.base.push_back(x);
      fb.over.push_back(phi);
      names.push_back(f.dom->name(x));
    }
  const auto& cod = *f.cod;
  fb.lifted = lift(f.dom, fb.base, std::move(names), [&](int x, int u) {
    const int phi2 = cod.compose(fb.over[x], cod.inverse(f.mor[u]));
    return fb.index.at(pack3(f.dom->target(u), phi2, 0));
  });
  return fb;
}

}  // namespace

Fibre fibre(const GroupoidFunctor& f, int z) {
  if (z < 0 || z >= f.cod->object_count()) throw InvalidArgument("fibre over an unknown object");
  FibreBuild fb = build_fibre(f, z, preimages(f));
  return {fb.lifted.groupoid, lifted_projection(fb.lifted, f.dom, fb.base), fb.over, {}};
}

Fibre fibre_pair(const GroupoidFunctor& f1, const GroupoidFunctor& f2, int z1, int z2) {
  if (f1.dom != f2.dom) throw InvalidArgument("fibre_pair needs functors with a common domain");
  const auto pre = preimages(f1);
  const auto& c1 = *f1.cod;
  const auto& c2 = *f2.cod;
  std::vector<int> base, over1, over2;
  std::vector<std::string> names;
  std::unordered_map<std::uint64_t, int> index;
  for (int phi1 : c1.in(z1))
    for (int x : pre[c1.source(phi1)])
      for (int phi2 : c2.in(z2)) {
        if (c2.source(phi2) != f2.obj[x]) continue;
        index.emplace(pack3(x, phi1, phi2), static_cast<int>(base.size()));
        base.push_back(x);
        over1.push_back(phi1);
        over2.push_back(phi2);
        names.push_back(f1.dom->name(x));
      }
  Lifted l = lift(f1.dom, base, std::move(names), [&](int x, int u) {
    const int a = c1.compose(over1[x], c1.inverse(f1.mor[u]));
    const int b = c2.compose(over2[x], c2.inverse(f2.mor[u]));
    return index.at(pack3(f1.dom->target(u), a, b));
  });
  return {l.groupoid, lifted_projection(l, f1.dom, base), over1, over2};
}

IsoComma iso_comma(const GroupoidFunctor& f, const GroupoidFunctor& g) {
  if (f.cod != g.cod) throw InvalidArgument("iso_comma needs a cospan");
  const auto& A = *f.dom;
  const auto& B = *g.dom;
  const auto& C = *f.cod;
  const auto pre_g = preimages(g);
  std::vector<int> as, bs, phis;
  std::vector<std::string> names;
  auto index = std::make_shared<std::unordered_map<std::uint64_t, int>>();
  for (int a = 0; a < A.object_count(); ++a)
    for (int phi = C.out_begin(f.obj[a]); phi < C.out_end(f.obj[a]); ++phi)
      for (int b : pre_g[C.target(phi)]) {
        index->emplace(pack3(a, b, phi), static_cast<int>(as.size()));
        as.push_back(a);
        bs.push_back(b);
        phis.push_back(phi);
        names.push_back("(" + A.name(a) + ", " + B.name(b) + ")");
      }
  const int n = static_cast<int>(as.size());
  auto first = std::make_shared<std::vector<int>>(1, 0);
  for (int x = 0; x < n; ++x) first->push_back(first->back() + A.out_degree(as[x]) * B.out_degree(bs[x]));
  auto ab = std::make_shared<std::vector<std::pair<int, int>>>();
  auto src = std::make_shared<std::vector<int>>();
  std::vector<int> targets, ids, inv;
  auto id_at = [&A, &B, first](int x, int u, int v) {
    return (*first)[x] + A.out_position(u) * B.out_degree(B.source(v)) + B.out_position(v);
  };
  for (int x = 0; x < n; ++x) {
    ids.push_back(id_at(x, A.identity(as[x]), B.identity(bs[x])));
    for (int u = A.out_begin(as[x]); u < A.out_end(as[x]); ++u)
      for (int v = B.out_begin(bs[x]); v < B.out_end(bs[x]); ++v) {
        const int phi2 = C.compose(g.mor[v], C.compose(phis[x], C.inverse(f.mor[u])));
        targets.push_back(index->at(pack3(A.target(u), B.target(v), phi2)));
        ab->emplace_back(u, v);
        src->push_back(x);
      }
  }
  for (std::size_t m = 0; m < targets.size(); ++m) {
    auto [u, v] = (*ab)[m];
    inv.push_back(id_at(targets[m], A.inverse(u), B.inverse(v)));
  }
  GroupoidPtr fa = f.dom, gb = g.dom;
  auto groupoid = std::make_shared<FinGroupoid>(
      std::move(names), *first, std::move(targets), std::move(ids), std::move(inv),
      [fa, gb, first, ab, src](int after, int before) {
        auto [u2, v2] = (*ab)[after];
        auto [u1, v1] = (*ab)[before];
        const int u = fa->compose(u2, u1), v = gb->compose(v2, v1);
        return (*first)[(*src)[before]] + fa->out_position(u) * gb->out_degree(gb->source(v)) +
               gb->out_position(v);
      });
  IsoComma out;
  out.groupoid = groupoid;
  out.to_a = {groupoid, f.dom, as, {}};
  out.to_b = {groupoid, g.dom, bs, {}};
  for (const auto& [u, v] : *ab) {
    out.to_a.mor.push_back(u);
    out.to_b.mor.push_back(v);
  }
  out.phi = std::move(phis);
  out.c = f.cod;
  out.f_obj = f.obj;
  out.index = index;
  return out;
}

GroupoidFunctor IsoComma::comparison(const GroupoidFunctor& p1, const GroupoidFunctor& p2) const {
  if (p1.dom != p2.dom || p1.cod != to_a.cod || p2.cod != to_b.cod)
    throw InvalidArgument("comparison needs a cone over the cospan");
  const auto& P = *p1.dom;
  const auto& A = *to_a.cod;
  const auto& B = *to_b.cod;
  GroupoidFunctor out{p1.dom, groupoid, {}, {}};
  // The connecting isomorphism of a strict cone is the identity at f(a).
  for (int p = 0; p < P.object_count(); ++p) {
    const int a = p1.obj[p], b = p2.obj[p];
    auto it = index->find(pack3(a, b, c->identity(f_obj[a])));
    if (it == index->end()) throw InvalidArgument("cone does not commute strictly");
    out.obj.push_back(it->second);
  }
  for (int w = 0; w < P.morphism_count(); ++w) {
    const int u = p1.mor[w], v = p2.mor[w];
    const int x = out.obj[P.source(w)];
    out.mor.push_back(groupoid->out_begin(x) +
                      A.out_position(u) * B.out_degree(B.source(v)) + B.out_position(v));
  }
  return out;
}

std::string EquivalenceWitness::to_json() const {
  nlohmann::json j;
  if (kind == Kind::kMissedClass) {
    j["kind"] = "missed-class";
    j["object"] = x;
  } else {
    j["kind"] = "hom-defect";
    j["x"] = x;
    j["y"] = y;
    j["hom_x_y"] = hom_xy;
    j["hom_fx_fy"] = hom_fxfy;
  }
  if (!over.empty()) j["over"] = over;
  return j.dump();
}

namespace {

EquivalenceVerdict equivalence_impl(const GroupoidFunctor& f, bool need_surjective) {
  const auto& D = *f.dom;
  const auto& C = *f.cod;
  const std::vector<int> cd = components(D);
  const std::vector<int> cc = components(C);
  std::vector<int> rep_d, rep_c;
  for (int o = 0; o < D.object_count(); ++o)
    if (cd[o] == static_cast<int>(rep_d.size())) rep_d.push_back(o);
  for (int o = 0; o < C.object_count(); ++o)
    if (cc[o] == static_cast<int>(rep_c.size())) rep_c.push_back(o);

  EquivalenceVerdict v;
  std::vector<int> hit(rep_c.size(), -1);
  for (int x : rep_d) {
    const int k = cc[f.obj[x]];
    if (hit[k] >= 0) {
      const int y = hit[k];
      v.holds = false;
      v.witness = EquivalenceWitness{EquivalenceWitness::Kind::kHomDefect, D.name(y), D.name(x),
                                     0, C.hom(f.obj[y], f.obj[x]).size(), {}};
      return v;
    }
    hit[k] = x;
  }
  if (need_surjective)
    for (std::size_t k = 0; k < rep_c.size(); ++k)
      if (hit[k] < 0) {
        v.holds = false;
        v.witness = EquivalenceWitness{EquivalenceWitness::Kind::kMissedClass, C.name(rep_c[k]),
                                       {}, 0, 0, {}};
        return v;
      }
  for (int x : rep_d) {
    const std::vector<int> aut = D.automorphisms(x);
    const std::size_t target = C.automorphisms(f.obj[x]).size();
    std::set<int> images;
    for (int u : aut) images.insert(f.mor[u]);
    if (images.size() != aut.size() || aut.size() != target) {
      v.holds = false;
      v.witness = EquivalenceWitness{EquivalenceWitness::Kind::kHomDefect, D.name(x), D.name(x),
                                     aut.size(), target, {}};
      return v;
    }
  }
  return v;
}

}  // namespace

EquivalenceVerdict is_equivalence(const GroupoidFunctor& f) { return equivalence_impl(f, true); }
EquivalenceVerdict is_mono_up_to_equiv(const GroupoidFunctor& f) { return equivalence_impl(f, false); }

bool strictly_commutes(const GroupoidSquare& sq) {
  if (sq.p1.dom != sq.p2.dom || sq.p1.cod != sq.f.dom || sq.p2.cod != sq.g.dom ||
      sq.f.cod != sq.g.cod)
    return false;
  return compose(sq.f, sq.p1) == compose(sq.g, sq.p2);
}

EquivalenceVerdict is_homotopy_pullback(const GroupoidSquare& sq, const Admissible& admissible) {
  if (!strictly_commutes(sq)) throw InvalidArgument("square does not commute strictly");
  const auto& A = *sq.f.dom;
  const auto& B = *sq.g.dom;
  const auto pre_p1 = preimages(sq.p1);
  const auto pre_g = preimages(sq.g);
  const std::vector<int> comp = components(A);
  int seen = 0;
  for (int a = 0; a < A.object_count(); ++a) {
    if (comp[a] != seen) continue;
    ++seen;
    FibreBuild top = build_fibre(sq.p1, a, pre_p1);
    FibreBuild bottom = admissible
                            ? build_fibre(sq.g, sq.f.obj[a], pre_g, [&](int b) { return admissible(a, b); })
                            : build_fibre(sq.g, sq.f.obj[a], pre_g);
    // (p, alpha) goes to (p2 p, f alpha); u goes to p2 u.
    GroupoidFunctor k{top.lifted.groupoid, bottom.lifted.groupoid, {}, {}};
    for (std::size_t x = 0; x < top.base.size(); ++x) {
      const int b = sq.p2.obj[top.base[x]];
      const int beta = sq.f.mor[top.over[x]];
      auto it = bottom.index.find(pack3(b, beta, 0));
      if (it == bottom.index.end()) throw InvalidArgument("apex object maps outside the admissible part");
      k.obj.push_back(it->second);
    }
    for (std::size_t x = 0; x < top.base.size(); ++x) {
      const int p = top.base[x];
      for (int u = sq.p1.dom->out_begin(p); u < sq.p1.dom->out_end(p); ++u)
        k.mor.push_back(bottom.lifted.first[k.obj[x]] + B.out_position(sq.p2.mor[u]));
    }
    EquivalenceVerdict v = is_equivalence(k);
    if (!v.holds) {
      v.witness->over = A.name(a);
      return v;
    }
  }
  return {};
}

EquivalenceVerdict is_homotopy_pullback_direct(const GroupoidSquare& sq) {
  if (!strictly_commutes(sq)) throw InvalidArgument("square does not commute strictly");
  IsoComma ic = iso_comma(sq.f, sq.g);
  return is_equivalence(ic.comparison(sq.p1, sq.p2));
}

std::string to_json(const FinGroupoid& g) {
  nlohmann::json j;
  j["objects"] = nlohmann::json::array();
  for (int o = 0; o < g.object_count(); ++o) j["objects"].push_back(g.name(o));
  j["hom"] = nlohmann::json::array();
  for (int x = 0; x < g.object_count(); ++x) {
    std::map<int, int> counts;
    for (int m = g.out_begin(x); m < g.out_end(x); ++m) ++counts[g.target(m)];
    for (auto [y, c] : counts) j["hom"].push_back({x, y, c});
  }
  return j.dump();
}

}  // namespace dsp
