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


#include "dspecies/decomp.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "json.hpp"

#include "dspecies/error.hpp"

namespace dsp {

namespace {

using simplex::DeltaMap;

// Morphism codes: 4 bits per carrier position holding the universe index of
// its image.
constexpr int kMaxPositions = 8;
constexpr int kMaxUniverse = 16;

int code_at(std::uint64_t c, int i) { return static_cast<int>(c >> (4 * i) & 15); }
void code_set(std::uint64_t& c, int i, int v) {
  c &= ~(std::uint64_t{15} << (4 * i));
  c |= static_cast<std::uint64_t>(v) << (4 * i);
}
std::uint64_t pack(int object, std::uint64_t code) {
  return static_cast<std::uint64_t>(object) << 32 | code;
}

int universe_index(const std::string& label) { return label[0] - 'a'; }

std::uint64_t own_code(const Simplex& s) {
  std::uint64_t c = 0;
  for (int i = 0; i < s.structure.size(); ++i) code_set(c, i, universe_index(s.structure.carrier.label(i)));
  return c;
}

std::string simplex_key(const Simplex& s) {
  const Structure& x = s.structure;
  std::string k;
  k.reserve(64);
  for (int i = 0; i < x.size(); ++i) k.push_back(x.carrier.label(i)[0]);
  k.push_back('|');
  for (auto v : x.carrier.leq_matrix()) k.push_back(static_cast<char>(v));
  k.push_back('|');
  for (int v : x.decoration.cells) k.push_back(static_cast<char>(v));
  k.push_back('|');
  for (int b = 0; b < 4; ++b) k.push_back(static_cast<char>(x.decoration.global >> (8 * b) & 255));
  for (int v : s.level) k.push_back(static_cast<char>(v));
  k.push_back('|');
  for (Mask m : s.chain)
    for (int b = 0; b < 4; ++b) k.push_back(static_cast<char>(m >> (8 * b) & 255));
  return k;
}

std::string simplex_name(const SpeciesDef& sp, const Simplex& s) {
  std::string n = describe(sp, s.structure);
  if (!s.level.empty()) {
    n += "@";
    for (int i = 0; i < s.structure.size(); ++i) {
      if (i) n += ",";
      n += s.structure.carrier.label(i) + ":" + std::to_string(s.level[static_cast<std::size_t>(i)]);
    }
  }
  if (!s.chain.empty()) {
    n += "@";
    for (std::size_t j = 0; j < s.chain.size(); ++j) {
      if (j) n += ";";
      bool first = true;
      for (const auto& l : s.structure.carrier.labels_of(s.chain[j])) {
        if (!first) n += ",";
        n += l;
        first = false;
      }
    }
  }
  return n;
}

// Shared by the level groupoid's composer and the level data.
struct MorTable {
  std::vector<std::uint64_t> codes;
  std::vector<int> sources;
  std::vector<int> sizes;  // carrier size per object
  std::unordered_map<std::uint64_t, int> by_code;

  int lookup(int source, std::uint64_t code) const {
    auto it = by_code.find(pack(source, code));
    if (it == by_code.end()) throw Error(ErrorCode::kInternal, "morphism code not found");
    return it->second;
  }
};

// Positions of the target of a morphism are the sorted universe indices.
int rank_in(std::uint64_t code, int n, int value) {
  int r = 0;
  for (int i = 0; i < n; ++i)
    if (code_at(code, i) < value) ++r;
  return r;
}

Simplex transport_simplex(const SpeciesDef& sp, const Simplex& s, const std::vector<int>& img) {
  const int n = s.structure.size();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return img[a] < img[b]; });
  Simplex t;
  Structure moved = transport_structure(sp, s.structure, order);
  std::vector<std::string> labels;
  for (int p = 0; p < n; ++p) labels.push_back(universe_label(img[order[p]]));
  t.structure = rename_structure(moved, std::move(labels));
  if (!s.level.empty())
    for (int p = 0; p < n; ++p) t.level.push_back(s.level[order[p]]);
  for (Mask m : s.chain) {
    Mask r = 0;
    for (int p = 0; p < n; ++p)
      if (m >> order[p] & 1) r |= Mask{1} << p;
    t.chain.push_back(r);
  }
  return t;
}

// Restriction of a payload to the positions in `keep`, with the layering and
// chain entries given relative to the old positions.
Simplex restrict_simplex(const SpeciesDef& sp, const Structure& x, Mask keep,
                         const std::vector<int>& level, const std::vector<Mask>& chain) {
  Simplex t;
  t.structure = restrict_structure(sp, x, keep);
  std::vector<int> pos;
  for (int i = 0; i < x.size(); ++i)
    if (keep >> i & 1) pos.push_back(i);
  if (!level.empty())
    for (int i : pos) t.level.push_back(level[static_cast<std::size_t>(i)]);
  for (Mask m : chain) {
    Mask r = 0;
    for (std::size_t p = 0; p < pos.size(); ++p)
      if (m >> pos[p] & 1) r |= Mask{1} << p;
    t.chain.push_back(r);
  }
  return t;
}

using Transform = std::function<std::pair<Simplex, Mask>(const Simplex&)>;

// theta^* on layered payloads: restrict along the free part, push the
// layering along the dual of the generic part.
Transform layered_transform(const SpeciesDef& sp, const DeltaMap& theta) {
  return [&sp, theta](const Simplex& s) {
    const int a = theta(0);
    const int w = theta(theta.source()) - a;
    Mask keep = 0;
    std::vector<int> lv(s.level.size(), 0);
    for (std::size_t i = 0; i < s.level.size(); ++i)
      if (s.level[i] > a && s.level[i] <= a + w) {
        keep |= Mask{1} << i;
        lv[i] = s.level[i] - a;
      }
    std::vector<int> gv;
    for (int v : theta.values()) gv.push_back(v - a);
    const simplex::UlDeltaMap h = simplex::joyal_dual(DeltaMap(theta.source(), w, gv));
    for (auto& l : lv)
      if (l > 0) l = h(l);
    Simplex t = restrict_simplex(sp, s.structure, keep, lv, {});
    return std::make_pair(std::move(t), keep);
  };
}

// theta^* on chains: reindex and restrict to the union of what is left.
Transform chain_transform(const SpeciesDef& sp, const DeltaMap& theta) {
  return [&sp, theta](const Simplex& s) {
    std::vector<Mask> chain;
    Mask keep = 0;
    for (int v : theta.values()) {
      chain.push_back(s.chain[static_cast<std::size_t>(v)]);
      keep |= chain.back();
    }
    Simplex t = restrict_simplex(sp, s.structure, keep, {}, chain);
    return std::make_pair(std::move(t), keep);
  };
}

}  // namespace

struct TruncatedSimplicialGroupoid::LevelData {
  GroupoidPtr groupoid;
  std::vector<Simplex> simplices;
  std::unordered_map<std::string, int> index;
  std::shared_ptr<const MorTable> table;
};

// Internal access to the level tables.
struct LevelAccess {
  using T = TruncatedSimplicialGroupoid;
  using Level = T::LevelData;

  static std::shared_ptr<const Level> make_level(const SpeciesDef& sp, std::vector<Simplex> simplices,
                                                 int u0, int usize) {
    auto lv = std::make_shared<Level>();
    auto table = std::make_shared<MorTable>();
    lv->simplices = std::move(simplices);
    const int n = static_cast<int>(lv->simplices.size());
    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (int o = 0; o < n; ++o) {
      const Simplex& s = lv->simplices[static_cast<std::size_t>(o)];
      table->sizes.push_back(s.structure.size());
      if (!lv->index.emplace(simplex_key(s), o).second)
        throw Error(ErrorCode::kInternal, "duplicate object in a level");
      names.push_back(simplex_name(sp, s));
    }
    std::vector<int> first{0}, targets, ids, inv;
    for (int o = 0; o < n; ++o) {
      const Simplex& s = lv->simplices[static_cast<std::size_t>(o)];
      const int m = s.structure.size();
      std::vector<int> img(static_cast<std::size_t>(m));
      std::vector<bool> used(static_cast<std::size_t>(usize), false);
      std::function<void(int)> rec = [&](int i) {
        if (i == m) {
          Simplex t = transport_simplex(sp, s, img);
          auto it = lv->index.find(simplex_key(t));
          if (it == lv->index.end())
            throw Error(ErrorCode::kInternal, "level not closed under relabelling: " + simplex_name(sp, t));
          std::uint64_t c = 0;
          for (int p = 0; p < m; ++p) code_set(c, p, img[p]);
          table->by_code.emplace(pack(o, c), static_cast<int>(targets.size()));
          table->codes.push_back(c);
          table->sources.push_back(o);
          targets.push_back(it->second);
          return;
        }
        for (int u = 0; u < usize; ++u) {
          if (used[u]) continue;
          used[u] = true;
          img[i] = u0 + u;
          rec(i + 1);
          used[u] = false;
        }
      };
      rec(0);
      first.push_back(static_cast<int>(targets.size()));
    }
    for (int o = 0; o < n; ++o) ids.push_back(table->lookup(o, own_code(lv->simplices[o])));
    for (std::size_t mo = 0; mo < targets.size(); ++mo) {
      const int src = table->sources[mo];
      const int tgt = targets[mo];
      const std::uint64_t c = table->codes[mo];
      const int m = lv->simplices[src].structure.size();
      const std::uint64_t own = own_code(lv->simplices[src]);
      std::uint64_t back = 0;
      for (int i = 0; i < m; ++i) code_set(back, rank_in(c, m, code_at(c, i)), code_at(own, i));
      inv.push_back(table->lookup(tgt, back));
    }
    std::shared_ptr<const MorTable> tab = table;
    lv->groupoid = std::make_shared<FinGroupoid>(
        std::move(names), std::move(first), std::move(targets), std::move(ids), std::move(inv),
        [tab](int after, int before) {
          // The i-th element of the source sits at the rank of its image in
          // the middle object.
          const std::uint64_t c1 = tab->codes[before];
          const std::uint64_t c2 = tab->codes[after];
          const int src = tab->sources[before];
          const int m = tab->sizes[src];
          std::uint64_t r = 0;
          for (int i = 0; i < m; ++i) code_set(r, i, code_at(c2, rank_in(c1, m, code_at(c1, i))));
          return tab->lookup(src, r);
        });
    lv->table = table;
    return lv;
  }

  static GroupoidFunctor level_functor(const Level& src, const Level& tgt, const Transform& f) {
    GroupoidFunctor F{src.groupoid, tgt.groupoid, {}, {}};
    const int n = static_cast<int>(src.simplices.size());
    std::vector<Mask> kept(static_cast<std::size_t>(n));
    for (int o = 0; o < n; ++o) {
      auto [t, keep] = f(src.simplices[static_cast<std::size_t>(o)]);
      auto it = tgt.index.find(simplex_key(t));
      if (it == tgt.index.end()) throw Error(ErrorCode::kInternal, "image object missing from the target level");
      F.obj.push_back(it->second);
      kept[static_cast<std::size_t>(o)] = keep;
    }
    F.mor.resize(static_cast<std::size_t>(src.groupoid->morphism_count()));
    for (int m = 0; m < src.groupoid->morphism_count(); ++m) {
      const int o = src.table->sources[m];
      const std::uint64_t c = src.table->codes[m];
      std::uint64_t r = 0;
      int q = 0;
      for (int i = 0; i < src.simplices[o].structure.size(); ++i)
        if (kept[o] >> i & 1) code_set(r, q++, code_at(c, i));
      F.mor[m] = tgt.table->lookup(F.obj[o], r);
    }
    return F;
  }

  static const Level& level(const T& t, int n) { return *t.levels_.at(static_cast<std::size_t>(n)); }
  static T& mut(const SimplicialPtr& p) { return const_cast<T&>(*p); }

  static void add_level(T& t, std::shared_ptr<const Level> l) { t.levels_.push_back(std::move(l)); }
  static std::shared_ptr<const Level> level_ptr(const T& t, int n) { return t.levels_.at(static_cast<std::size_t>(n)); }

  // Faces and degeneracies from theta^* computed on payloads.
  static void fill_structure_maps(T& t, const std::function<Transform(const DeltaMap&)>& tr) {
    const int N = t.max_level();
    t.faces_.assign(static_cast<std::size_t>(N + 1), {});
    t.degeneracies_.assign(static_cast<std::size_t>(N + 1), {});
    for (int n = 1; n <= N; ++n)
      for (int i = 0; i <= n; ++i)
        t.faces_[n].push_back(level_functor(level(t, n), level(t, n - 1), tr(DeltaMap::coface(n - 1, i))));
    for (int n = 0; n < N; ++n)
      for (int i = 0; i <= n; ++i)
        t.degeneracies_[n].push_back(
            level_functor(level(t, n), level(t, n + 1), tr(DeltaMap::codegeneracy(n, i))));
  }

  static T make(SpeciesPtr s, const BuildBounds& b, std::string provenance) {
    T t;
    t.species_ = std::move(s);
    t.bounds_ = b;
    t.provenance_ = std::move(provenance);
    return t;
  }

  static DecResult dec(const SimplicialPtr& src, bool bottom) {
    const T& t = *src;
    const int N = t.max_level();
    if (N < 1) throw InvalidArgument("decalage needs at least one level above X0");
    auto d = std::make_shared<T>();
    d->species_ = t.species_;
    d->bounds_ = t.bounds_;
    d->bounds_.levels = N - 1;
    d->provenance_ = std::string(bottom ? "dec_bot(" : "dec_top(") + t.provenance_ + ")";
    for (int k = 0; k < N; ++k) d->levels_.push_back(t.levels_[static_cast<std::size_t>(k + 1)]);
    const int sh = bottom ? 1 : 0;
    d->faces_.assign(static_cast<std::size_t>(N), {});
    d->degeneracies_.assign(static_cast<std::size_t>(N), {});
    for (int k = 1; k < N; ++k)
      for (int i = 0; i <= k; ++i) d->faces_[k].push_back(t.face(k + 1, i + sh));
    for (int k = 0; k + 1 < N; ++k)
      for (int i = 0; i <= k; ++i) d->degeneracies_[k].push_back(t.degeneracy(k + 1, i + sh));
    SimplicialMap m{d, src, {}};
    for (int k = 0; k < N; ++k) m.levels.push_back(t.face(k + 1, bottom ? 0 : k + 1));
    return {d, m};
  }
};

// ---------------------------------------------------------------------------
// TruncatedSimplicialGroupoid

GroupoidPtr TruncatedSimplicialGroupoid::level(int n) const {
  if (n < 0 || n > max_level()) throw InvalidArgument("level " + std::to_string(n) + " outside the truncation");
  return levels_[static_cast<std::size_t>(n)]->groupoid;
}

const Simplex& TruncatedSimplicialGroupoid::simplex(int n, int object) const {
  level(n);
  return levels_[static_cast<std::size_t>(n)]->simplices.at(static_cast<std::size_t>(object));
}

int TruncatedSimplicialGroupoid::find(int n, const Simplex& s) const {
  level(n);
  const auto& idx = levels_[static_cast<std::size_t>(n)]->index;
  auto it = idx.find(simplex_key(s));
  return it == idx.end() ? -1 : it->second;
}

const GroupoidFunctor& TruncatedSimplicialGroupoid::face(int n, int i) const {
  if (n < 1 || n > max_level() || i < 0 || i > n)
    throw InvalidArgument("no face d" + std::to_string(i) + " on X" + std::to_string(n));
  return faces_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

GroupoidFunctor& TruncatedSimplicialGroupoid::mutable_face(int n, int i) {
  face(n, i);
  return faces_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

const GroupoidFunctor& TruncatedSimplicialGroupoid::degeneracy(int n, int i) const {
  if (n < 0 || n >= max_level() || i < 0 || i > n)
    throw InvalidArgument("no degeneracy s" + std::to_string(i) + " on X" + std::to_string(n));
  return degeneracies_[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)];
}

GroupoidFunctor TruncatedSimplicialGroupoid::apply(const DeltaMap& theta) const {
  const int m = theta.source(), n = theta.target();
  level(m);
  level(n);
  const auto& v = theta.values();
  for (int x = 0; x < m; ++x)
    if (v[x] == v[x + 1]) {
      // theta = theta' s^x with theta' : [m-1] -> [n].
      std::vector<int> w(v.begin(), v.end());
      w.erase(w.begin() + x + 1);
      return compose(degeneracy(m - 1, x), apply(DeltaMap(m - 1, n, w)));
    }
  if (m == n) return GroupoidFunctor::identity(level(n));
  int c = n;
  while (std::find(v.begin(), v.end(), c) != v.end()) --c;
  // theta = d^c theta'' with theta'' : [m] -> [n-1].
  std::vector<int> w;
  for (int y : v) w.push_back(y < c ? y : y - 1);
  return compose(apply(DeltaMap(m, n - 1, w)), face(n, c));
}

std::vector<bool> TruncatedSimplicialGroupoid::degenerate(int n) const {
  std::vector<bool> out(static_cast<std::size_t>(level(n)->object_count()), false);
  if (n == 0) return out;
  for (int i = 0; i < n; ++i)
    for (int o : degeneracy(n - 1, i).obj) out[static_cast<std::size_t>(o)] = true;
  return out;
}

// ---------------------------------------------------------------------------
// Builds

namespace {

void check_bounds(const BuildBounds& b) {
  if (b.levels < 0 || b.size < 0) throw InvalidArgument("negative build bounds");
  if (b.universe_size() < b.size) throw InvalidArgument("universe smaller than the carrier bound");
  if (b.size > kMaxPositions || b.size > max_carrier_size())
    throw BoundExceeded("carrier size " + std::to_string(b.size) + " exceeds the build limit");
  if (b.universe_offset < 0 || b.universe_offset + b.universe_size() > kMaxUniverse)
    throw BoundExceeded("universe exceeds " + std::to_string(kMaxUniverse) + " labels");
}

// Structures on every subset of the universe with at most b.size elements.
std::vector<Structure> universe_structures(const SpeciesDef& sp, const BuildBounds& b) {
  std::vector<Structure> out;
  const int u = b.universe_size();
  for (Mask a = 0; a < (Mask{1} << u); ++a) {
    if (popcount(a) > b.size) continue;
    std::vector<std::string> labels;
    for (int i = 0; i < u; ++i)
      if (a >> i & 1) labels.push_back(universe_label(b.universe_offset + i));
    for (const FinPoset& c : labelled_carriers(sp, labels))
      for (Decoration& d : sp.decorations(c, b.decoration)) out.push_back({sp.tag(), c, std::move(d)});
  }
  return out;
}

}  // namespace

SimplicialPtr build(SpeciesPtr s, const BuildBounds& b) {
  if (!s) throw InvalidArgument("no species");
  check_bounds(b);
  auto t = std::make_shared<TruncatedSimplicialGroupoid>(
      LevelAccess::make(s, b, "build(" + s->tag() + ",N=" + std::to_string(b.levels) +
                                  ",size=" + std::to_string(b.size) + ")"));
  const std::vector<Structure> structures = universe_structures(*s, b);
  for (int k = 0; k <= b.levels; ++k) {
    std::vector<Simplex> simplices;
    for (const Structure& x : structures)
      for (auto& lv : monotone_levelings(x.carrier, k)) simplices.push_back({x, std::move(lv), {}});
    LevelAccess::add_level(*t, LevelAccess::make_level(*s, std::move(simplices), b.universe_offset,
                                                       b.universe_size()));
  }
  const SpeciesDef& sp = *s;
  LevelAccess::fill_structure_maps(*t, [&sp](const DeltaMap& th) { return layered_transform(sp, th); });
  return t;
}

SimplicialPtr fat_nerve(SpeciesPtr s, const BuildBounds& b, NerveVariant v) {
  if (!s) throw InvalidArgument("no species");
  check_bounds(b);
  const bool upper = v == NerveVariant::kUpper;
  auto t = std::make_shared<TruncatedSimplicialGroupoid>(
      LevelAccess::make(s, b, std::string(upper ? "upper" : "lower") + "_nerve(" + s->tag() + ")"));
  const std::vector<Structure> structures = universe_structures(*s, b);
  for (int k = 0; k <= b.levels; ++k) {
    std::vector<Simplex> simplices;
    for (const Structure& x : structures) {
      const std::vector<Mask> sets = upper ? upper_sets(x.carrier) : lower_sets(x.carrier);
      // Lower: A_0 <= ... <= A_k = carrier; upper: carrier = B_0 >= ... >= B_k.
      std::vector<Mask> chain(static_cast<std::size_t>(k + 1));
      std::function<void(int)> rec = [&](int j) {
        if (j < 0 || j > k) {
          simplices.push_back({x, {}, chain});
          return;
        }
        const Mask bound = upper ? chain[static_cast<std::size_t>(j - 1)] : chain[static_cast<std::size_t>(j + 1)];
        for (Mask m : sets)
          if ((m & ~bound) == 0) {
            chain[static_cast<std::size_t>(j)] = m;
            rec(upper ? j + 1 : j - 1);
          }
      };
      if (upper) {
        chain[0] = x.carrier.full();
        rec(1);
      } else {
        chain[static_cast<std::size_t>(k)] = x.carrier.full();
        rec(k - 1);
      }
    }
    LevelAccess::add_level(*t, LevelAccess::make_level(*s, std::move(simplices), b.universe_offset,
                                                       b.universe_size()));
  }
  const SpeciesDef& sp = *s;
  LevelAccess::fill_structure_maps(*t, [&sp](const DeltaMap& th) { return chain_transform(sp, th); });
  return t;
}

GroupoidFunctor direct_map(const TruncatedSimplicialGroupoid& t, const DeltaMap& theta) {
  const SpeciesDef& sp = *t.species();
  const auto& src = LevelAccess::level(t, theta.target());
  const auto& tgt = LevelAccess::level(t, theta.source());
  const bool chains = !src.simplices.empty() && !src.simplices.front().chain.empty();
  return LevelAccess::level_functor(src, tgt, chains ? chain_transform(sp, theta) : layered_transform(sp, theta));
}

DecResult dec_bot(const SimplicialPtr& t) { return LevelAccess::dec(t, true); }
DecResult dec_top(const SimplicialPtr& t) { return LevelAccess::dec(t, false); }

std::string SimplicialMap::check_simplicial() const {
  for (int n = 1; n <= max_level(); ++n)
    for (int i = 0; i <= n; ++i)
      if (!(compose(levels[n - 1], source->face(n, i)) == compose(target->face(n, i), levels[n])))
        return "d" + std::to_string(i) + "@X" + std::to_string(n);
  for (int n = 0; n < max_level(); ++n)
    for (int i = 0; i <= n; ++i)
      if (!(compose(levels[n + 1], source->degeneracy(n, i)) == compose(target->degeneracy(n, i), levels[n])))
        return "s" + std::to_string(i) + "@X" + std::to_string(n);
  return {};
}

SimplicialMap projection(const SimplicialPtr& from, const SimplicialPtr& to) {
  const int n = std::min(from->max_level(), to->max_level());
  const std::string tag = to->species()->tag();
  SimplicialMap m{from, to, {}};
  for (int k = 0; k <= n; ++k) {
    const auto& src = LevelAccess::level(*from, k);
    const auto& tgt = LevelAccess::level(*to, k);
    try {
      m.levels.push_back(LevelAccess::level_functor(src, tgt, [&tag](const Simplex& s) {
        Simplex t = s;
        t.structure.tag = tag;
        t.structure.decoration = Decoration{};
        return std::make_pair(std::move(t), s.structure.carrier.full());
      }));
    } catch (const Error& e) {
      if (e.code() == ErrorCode::kInternal)
        throw InvalidArgument("projection target does not contain the image at level " + std::to_string(k));
      throw;
    }
  }
  return m;
}

// ---------------------------------------------------------------------------
// Reports

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kFail: return "fail";
    case Verdict::kSkipped: return "skipped";
  }
  return "?";
}

bool AxiomReport::passed() const { return first_failure() == nullptr; }

int AxiomReport::count(Verdict v) const {
  return static_cast<int>(std::count_if(entries.begin(), entries.end(),
                                        [v](const ReportEntry& e) { return e.verdict == v; }));
}

const ReportEntry* AxiomReport::first_failure() const {
  for (const auto& e : entries)
    if (e.verdict == Verdict::kFail) return &e;
  return nullptr;
}

std::string AxiomReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["passed"] = passed();
  j["squares"] = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json s{{"square", e.name}, {"verdict", to_string(e.verdict)}};
    s["witness"] = e.witness ? nlohmann::json::parse(e.witness->to_json()) : nlohmann::json(nullptr);
    if (!e.detail.empty()) s["detail"] = e.detail;
    j["squares"].push_back(std::move(s));
  }
  return j.dump();
}

namespace {

ReportEntry square_entry(std::string name, const GroupoidSquare& sq, const Admissible& adm = {}) {
  ReportEntry e{std::move(name), Verdict::kPass, std::nullopt, {}};
  if (!strictly_commutes(sq)) {
    e.verdict = Verdict::kFail;
    e.detail = "square does not commute";
    return e;
  }
  EquivalenceVerdict v = is_homotopy_pullback(sq, adm);
  if (!v.holds) {
    e.verdict = Verdict::kFail;
    e.witness = v.witness;
  }
  return e;
}

std::string idx(const char* p, int i) { return p + std::to_string(i); }

// Gluing a in X_la with b in X_lb along their common image in X_lc has
// |a| + |b| - |c| elements; only gluings within the size bound exist in a
// size-truncated build.
Admissible within_bound(const TruncatedSimplicialGroupoid& t, const GroupoidFunctor& f, int la, int lb,
                        int lc) {
  return [&t, &f, la, lb, lc](int a, int b) {
    const int sa = t.simplex(la, a).structure.size();
    const int sb = t.simplex(lb, b).structure.size();
    const int sc = t.simplex(lc, f.obj[a]).structure.size();
    return sa + sb - sc <= t.bounds().size;
  };
}

}  // namespace

AxiomReport check_simplicial_identities(const TruncatedSimplicialGroupoid& t) {
  AxiomReport r{"simplicial-identities", {}};
  const int N = t.max_level();
  auto add = [&](std::string name, const GroupoidFunctor& a, const GroupoidFunctor& b) {
    r.entries.push_back({std::move(name), a == b ? Verdict::kPass : Verdict::kFail, std::nullopt, {}});
  };
  auto at = [](int n) { return "@X" + std::to_string(n); };
  for (int n = 2; n <= N; ++n)
    for (int j = 1; j <= n; ++j)
      for (int i = 0; i < j; ++i)
        add(idx("d", i) + idx("d", j) + "=" + idx("d", j - 1) + idx("d", i) + at(n),
            compose(t.face(n - 1, i), t.face(n, j)), compose(t.face(n - 1, j - 1), t.face(n, i)));
  for (int n = 0; n + 2 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= j; ++i)
        add(idx("s", i) + idx("s", j) + "=" + idx("s", j + 1) + idx("s", i) + at(n),
            compose(t.degeneracy(n + 1, i), t.degeneracy(n, j)),
            compose(t.degeneracy(n + 1, j + 1), t.degeneracy(n, i)));
  for (int n = 0; n + 1 <= N; ++n)
    for (int j = 0; j <= n; ++j)
      for (int i = 0; i <= n + 1; ++i) {
        const GroupoidFunctor lhs = compose(t.face(n + 1, i), t.degeneracy(n, j));
        const std::string name = idx("d", i) + idx("s", j);
        if (i == j || i == j + 1) {
          add(name + "=id" + at(n), lhs, GroupoidFunctor::identity(t.level(n)));
        } else if (i < j) {
          add(name + "=" + idx("s", j - 1) + idx("d", i) + at(n), lhs,
              compose(t.degeneracy(n - 1, j - 1), t.face(n, i)));
        } else {
          add(name + "=" + idx("s", j) + idx("d", i - 1) + at(n), lhs,
              compose(t.degeneracy(n - 1, j), t.face(n, i - 1)));
        }
      }
  return r;
}

AxiomReport check_decomposition(const TruncatedSimplicialGroupoid& t) {
  AxiomReport r{"decomposition", {}};
  const int N = t.max_level();
  simplex::IesqBounds b;
  b.max_a = b.max_b = b.max_n = b.max_k = N + 1;
  b.max_corner = N + 1;
  for (const auto& sq : simplex::enumerate_iesq(b)) {
    const simplex::DeltaSquare ds = simplex::pushout_square(sq);
    const int top = ds.free_top.target();
    const std::string name = simplex::name(ds.generic_outer) + "-" + simplex::name(ds.free_top) + "-vs-" +
                             simplex::name(ds.generic_inner) + "@X" + std::to_string(top);
    if (std::max(top, ds.generic_outer.source()) > N) {
      r.entries.push_back({name, Verdict::kSkipped, std::nullopt, "needs a level above the truncation"});
      continue;
    }
    GroupoidSquare gs{t.apply(ds.generic_outer), t.apply(ds.free_top), t.apply(ds.free_bottom),
                      t.apply(ds.generic_inner)};
    r.entries.push_back(square_entry(
        name, gs, within_bound(t, gs.f, ds.generic_outer.source(), ds.free_top.source(), ds.free_bottom.source())));
  }
  return r;
}

AxiomReport check_segal(const TruncatedSimplicialGroupoid& t) {
  AxiomReport r{"segal", {}};
  for (int n = 2; n <= t.max_level(); ++n) {
    GroupoidSquare gs{t.face(n, n), t.face(n, 0), t.face(n - 1, 0), t.face(n - 1, n - 1)};
    r.entries.push_back(square_entry(idx("d", n) + "-d0-vs-" + idx("d", n - 1) + "@X" + std::to_string(n), gs,
                                     within_bound(t, gs.f, n - 1, n - 1, n - 2)));
  }
  return r;
}

AxiomReport check_culf(const SimplicialMap& f) {
  const std::string bad = f.check_simplicial();
  if (!bad.empty()) throw InvalidArgument("map is not simplicial at " + bad);
  AxiomReport r{"culf", {}};
  const int M = f.max_level();
  for (int n = 0; n <= M; ++n)
    for (int m = 0; m <= M; ++m)
      for (const DeltaMap& th : simplex::all_delta_maps(m, n)) {
        if (!simplex::is_generic(th)) continue;
        GroupoidSquare gs{f.source->apply(th), f.levels[n], f.levels[m], f.target->apply(th)};
        r.entries.push_back(square_entry("culf:" + simplex::name(th) + "[" + std::to_string(m) + "->" +
                                             std::to_string(n) + "]",
                                         gs));
      }
  return r;
}

AxiomReport check_finiteness(const TruncatedSimplicialGroupoid& t) {
  AxiomReport r{"finiteness", {}};
  const int N = t.max_level();
  if (N < 2) throw InvalidArgument("finiteness checks need levels up to X2");
  {
    EquivalenceVerdict v = is_mono_up_to_equiv(t.degeneracy(0, 0));
    r.entries.push_back({"complete:s0@X0", v.holds ? Verdict::kPass : Verdict::kFail, v.witness, {}});
  }
  const FinGroupoid& X1 = *t.level(1);
  const std::vector<int> comp = components(X1);
  std::vector<int> reps;
  for (int x = 0, seen = 0; x < X1.object_count(); ++x)
    if (comp[x] == seen) {
      reps.push_back(x);
      ++seen;
    }
  auto discreteness = [&](const char* name, const GroupoidFunctor& g) {
    ReportEntry e{name, Verdict::kPass, std::nullopt, {}};
    std::size_t largest = 0;
    for (int x : reps) {
      Fibre fb = fibre(g, x);
      largest = std::max<std::size_t>(largest, static_cast<std::size_t>(fb.groupoid->object_count()));
      if (!is_discrete(*fb.groupoid)) {
        e.verdict = Verdict::kFail;
        e.detail = "fibre over " + X1.name(x) + " has non-trivial automorphisms";
        break;
      }
    }
    if (e.verdict == Verdict::kPass) e.detail = "largest fibre " + std::to_string(largest);
    return e;
  };
  r.entries.push_back({"locally-finite:X1", Verdict::kPass, std::nullopt,
                       std::to_string(reps.size()) + " classes, " + std::to_string(X1.morphism_count()) +
                           " morphisms"});
  r.entries.push_back(discreteness("locally-discrete:s0", t.degeneracy(0, 0)));
  r.entries.push_back(discreteness("locally-discrete:d1", t.face(2, 1)));
  ReportEntry len{"finite-length", Verdict::kPass, std::nullopt, {}};
  int checked = 0;
  for (int n = 2; n <= N && len.verdict == Verdict::kPass; ++n) {
    const GroupoidFunctor edge = t.apply(DeltaMap(1, n, {0, n}));
    const std::vector<bool> degen = t.degenerate(n);
    for (int x : reps) {
      if (t.simplex(1, x).structure.size() >= n) continue;
      Fibre fb = fibre(edge, x);
      ++checked;
      for (int o = 0; o < fb.groupoid->object_count(); ++o)
        if (!degen[static_cast<std::size_t>(fb.projection.obj[o])]) {
          len.verdict = Verdict::kFail;
          len.detail = "non-degenerate " + fb.groupoid->name(o) + " over " + X1.name(x);
          break;
        }
      if (len.verdict == Verdict::kFail) break;
    }
  }
  if (len.verdict == Verdict::kPass) len.detail = std::to_string(checked) + " fibres up to X" + std::to_string(N);
  r.entries.push_back(len);
  return r;
}

AxiomReport check_decalage_formulas(SpeciesPtr s, const BuildBounds& b) {
  AxiomReport r{"decalage", {}};
  BuildBounds bt = b;
  bt.levels = b.levels + 1;
  const SimplicialPtr t = build(s, bt);
  for (int pass = 0; pass < 2; ++pass) {
    const bool bottom = pass == 0;
    const DecResult d = bottom ? dec_bot(t) : dec_top(t);
    const SimplicialPtr nerve = fat_nerve(s, b, bottom ? NerveVariant::kLower : NerveVariant::kUpper);
    const std::string tag = bottom ? "dec-bot~lower" : "dec-top~upper";
    SimplicialMap cmp{d.dec, nerve, {}};
    for (int k = 0; k <= b.levels; ++k)
      cmp.levels.push_back(LevelAccess::level_functor(
          LevelAccess::level(*d.dec, k), LevelAccess::level(*nerve, k), [k, bottom](const Simplex& x) {
            Simplex y{x.structure, {}, {}};
            for (int i = 0; i <= k; ++i) {
              Mask m = 0;
              for (std::size_t p = 0; p < x.level.size(); ++p)
                if (bottom ? x.level[p] <= i + 1 : x.level[p] >= i + 1) m |= Mask{1} << p;
              y.chain.push_back(m);
            }
            return std::make_pair(std::move(y), x.structure.carrier.full());
          }));
    const std::string bad = cmp.check_simplicial();
    r.entries.push_back({tag + ":simplicial", bad.empty() ? Verdict::kPass : Verdict::kFail, std::nullopt,
                         bad.empty() ? std::string() : "fails to commute with " + bad});
    for (int k = 0; k <= b.levels; ++k) {
      EquivalenceVerdict v = is_equivalence(cmp.levels[k]);
      r.entries.push_back({tag + "@L" + std::to_string(k), v.holds ? Verdict::kPass : Verdict::kFail, v.witness, {}});
    }
  }
  return r;
}

namespace {

GroupoidFunctor product_functor(const GroupoidFunctor& f, const GroupoidFunctor& g, GroupoidPtr dom,
                                GroupoidPtr cod) {
  GroupoidFunctor h{dom, cod, {}, {}};
  const FinGroupoid& F = *f.dom;
  const FinGroupoid& G = *g.dom;
  const int ng = G.object_count();
  const int cg = g.cod->object_count();
  for (int x = 0; x < F.object_count(); ++x)
    for (int y = 0; y < ng; ++y) h.obj.push_back(f.obj[x] * cg + g.obj[y]);
  for (int x = 0; x < F.object_count(); ++x)
    for (int y = 0; y < ng; ++y)
      for (int u = F.out_begin(x); u < F.out_end(x); ++u)
        for (int v = G.out_begin(y); v < G.out_end(y); ++v) {
          const int fu = f.mor[u], gv = g.mor[v];
          const int o = f.cod->source(fu) * cg + g.cod->source(gv);
          h.mor.push_back(cod->out_begin(o) + f.cod->out_position(fu) * g.cod->out_degree(g.cod->source(gv)) +
                          g.cod->out_position(gv));
        }
  return h;
}

// Disjoint union of layered payloads; labels of `l` precede those of `r`.
GroupoidFunctor union_functor(const SpeciesDef& sp, const TruncatedSimplicialGroupoid& L,
                              const TruncatedSimplicialGroupoid& R, const TruncatedSimplicialGroupoid& big,
                              int k, GroupoidPtr dom) {
  const auto& ll = LevelAccess::level(L, k);
  const auto& rl = LevelAccess::level(R, k);
  const auto& bl = LevelAccess::level(big, k);
  GroupoidFunctor h{dom, bl.groupoid, {}, {}};
  for (const Simplex& a : ll.simplices)
    for (const Simplex& b : rl.simplices) {
      const int na = a.structure.size(), nb = b.structure.size();
      std::vector<std::string> labels = a.structure.carrier.labels();
      for (const auto& l : b.structure.carrier.labels()) labels.push_back(l);
      std::vector<std::uint8_t> leq(static_cast<std::size_t>((na + nb) * (na + nb)), 0);
      for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j) leq[i * (na + nb) + j] = a.structure.carrier.leq(i, j);
      for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j) leq[(na + i) * (na + nb) + na + j] = b.structure.carrier.leq(i, j);
      Simplex u;
      u.structure = {sp.tag(), FinPoset::from_matrix(std::move(labels), std::move(leq)),
                     sp.product(a.structure.decoration, na, b.structure.decoration, nb)};
      u.level = a.level;
      u.level.insert(u.level.end(), b.level.begin(), b.level.end());
      auto it = bl.index.find(simplex_key(u));
      if (it == bl.index.end()) throw Error(ErrorCode::kInternal, "union missing from the large build");
      h.obj.push_back(it->second);
    }
  const int nr = static_cast<int>(rl.simplices.size());
  for (int x = 0; x < static_cast<int>(ll.simplices.size()); ++x)
    for (int y = 0; y < nr; ++y) {
      const int na = ll.simplices[x].structure.size(), nb = rl.simplices[y].structure.size();
      const FinGroupoid& G = *ll.groupoid;
      const FinGroupoid& H = *rl.groupoid;
      for (int u = G.out_begin(x); u < G.out_end(x); ++u)
        for (int v = H.out_begin(y); v < H.out_end(y); ++v) {
          std::uint64_t c = ll.table->codes[u];
          for (int i = 0; i < nb; ++i) code_set(c, na + i, code_at(rl.table->codes[v], i));
          h.mor.push_back(bl.table->lookup(h.obj[static_cast<std::size_t>(x * nr + y)], c));
        }
    }
  return h;
}

}  // namespace

AxiomReport check_monoidal(SpeciesPtr s, int max_k, int size, const EnumBounds& e) {
  if (!s) throw InvalidArgument("no species");
  if (!s->monoidal()) throw NotMonoidalError(s->tag() + " is not monoidal");
  if (max_k < 0 || size < 0) throw InvalidArgument("negative bounds");
  const int N = std::max(max_k, 1);
  BuildBounds bl{N, size, e, size, 0};
  BuildBounds br{N, size, e, size, size};
  EnumBounds eb = e;
  eb.edges = 2 * e.edges;
  BuildBounds bb{N, 2 * size, eb, 2 * size, 0};
  const SimplicialPtr L = build(s, bl), R = build(s, br), B = build(s, bb);
  std::vector<GroupoidPtr> prods;
  std::vector<GroupoidFunctor> tensor;
  for (int k = 0; k <= N; ++k) {
    prods.push_back(product(L->level(k), R->level(k)));
    tensor.push_back(union_functor(*s, *L, *R, *B, k, prods.back()));
  }
  AxiomReport r{"monoidal", {}};
  // The union commutes with every face and degeneracy.
  std::string bad;
  for (int n = 1; n <= N && bad.empty(); ++n)
    for (int i = 0; i <= n && bad.empty(); ++i) {
      GroupoidFunctor pf = product_functor(L->face(n, i), R->face(n, i), prods[n], prods[n - 1]);
      if (!(compose(tensor[n - 1], pf) == compose(B->face(n, i), tensor[n])))
        bad = "d" + std::to_string(i) + "@X" + std::to_string(n);
    }
  for (int n = 0; n < N && bad.empty(); ++n)
    for (int i = 0; i <= n && bad.empty(); ++i) {
      GroupoidFunctor pf = product_functor(L->degeneracy(n, i), R->degeneracy(n, i), prods[n], prods[n + 1]);
      if (!(compose(tensor[n + 1], pf) == compose(B->degeneracy(n, i), tensor[n])))
        bad = "s" + std::to_string(i) + "@X" + std::to_string(n);
    }
  r.entries.push_back({"union:simplicial", bad.empty() ? Verdict::kPass : Verdict::kFail, std::nullopt, bad});
  for (int k = 0; k <= max_k; ++k) {
    const DeltaMap g(1, k, {0, k});
    GroupoidSquare gs{product_functor(L->apply(g), R->apply(g), prods[k], prods[1]), tensor[k], tensor[1],
                      B->apply(g)};
    r.entries.push_back(square_entry("union:" + simplex::name(g) + "[1->" + std::to_string(k) + "]@X" +
                                         std::to_string(k),
                                     gs));
  }
  return r;
}

}  // namespace dsp
