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


#include "dspecies/poset.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

#include "dspecies/error.hpp"

namespace dsp {

std::string universe_label(int i) {
  if (i < 0 || i >= 26) throw InvalidArgument("universe index out of range");
  return std::string(1, static_cast<char>('a' + i));
}

FinPoset::FinPoset(std::vector<std::string> labels, std::vector<std::uint8_t> leq)
    : labels_(std::move(labels)), leq_(std::move(leq)) {
  const int n = size();
  down_.assign(static_cast<std::size_t>(n), 0);
  up_.assign(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (leq_[static_cast<std::size_t>(i * n + j)]) {
        up_[i] |= Mask{1} << j;
        down_[j] |= Mask{1} << i;
      }
}

namespace {

void check_labels(const std::vector<std::string>& elements) {
  if (elements.size() > 32) throw BoundExceeded("posets are limited to 32 elements");
  std::set<std::string> seen;
  for (const auto& e : elements)
    if (!seen.insert(e).second) throw ValidationError("duplicate element label '" + e + "'");
}

}  // namespace

FinPoset FinPoset::make(std::vector<std::string> elements,
                        const std::vector<std::pair<std::string, std::string>>& pairs) {
  check_labels(elements);
  const int n = static_cast<int>(elements.size());
  std::vector<std::uint8_t> m(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  auto find = [&](const std::string& l) {
    auto it = std::find(elements.begin(), elements.end(), l);
    if (it == elements.end()) throw ValidationError("unknown element label '" + l + "'");
    return static_cast<int>(it - elements.begin());
  };
  for (const auto& [x, y] : pairs) m[find(x) * n + find(y)] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (m[i * n + k])
        for (int j = 0; j < n; ++j)
          if (m[k * n + j]) m[i * n + j] = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (m[i * n + j] && m[j * n + i])
        throw ValidationError("order relation has a cycle through '" + elements[i] +
                              "' and '" + elements[j] + "'");
  return FinPoset(std::move(elements), std::move(m));
}

FinPoset FinPoset::from_matrix(std::vector<std::string> elements, std::vector<std::uint8_t> leq) {
  check_labels(elements);
  const int n = static_cast<int>(elements.size());
  if (leq.size() != static_cast<std::size_t>(n * n))
    throw ValidationError("order matrix has the wrong size");
  for (int i = 0; i < n; ++i) {
    if (!leq[i * n + i]) throw ValidationError("order is not reflexive");
    for (int j = 0; j < n; ++j) {
      if (i != j && leq[i * n + j] && leq[j * n + i])
        throw ValidationError("order is not antisymmetric");
      for (int k = 0; k < n; ++k)
        if (leq[i * n + j] && leq[j * n + k] && !leq[i * n + k])
          throw ValidationError("order is not transitive");
    }
  }
  for (auto& v : leq) v = v ? 1 : 0;
  return FinPoset(std::move(elements), std::move(leq));
}

FinPoset FinPoset::discrete(std::vector<std::string> elements) { return make(std::move(elements), {}); }

FinPoset FinPoset::chain(std::vector<std::string> elements) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i + 1 < elements.size(); ++i) pairs.emplace_back(elements[i], elements[i + 1]);
  return make(std::move(elements), pairs);
}

int FinPoset::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

Mask FinPoset::mask_of(const std::vector<std::string>& labels) const {
  Mask m = 0;
  for (const auto& l : labels) {
    int i = index_of(l);
    if (i < 0) throw InvalidArgument("unknown element label '" + l + "'");
    m |= Mask{1} << i;
  }
  return m;
}

std::vector<std::string> FinPoset::labels_of(Mask m) const {
  std::vector<std::string> out;
  for (int i = 0; i < size(); ++i)
    if (m >> i & 1) out.push_back(labels_[i]);
  return out;
}

bool FinPoset::is_discrete() const {
  for (int i = 0; i < size(); ++i)
    if (down(i) != (Mask{1} << i)) return false;
  return true;
}

bool FinPoset::is_chain() const {
  for (int i = 0; i < size(); ++i)
    if ((down(i) | up(i)) != full()) return false;
  return true;
}

std::vector<std::pair<int, int>> FinPoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) {
      if (!less(i, j)) continue;
      // Strictly between i and j.
      Mask between = up(i) & down(j) & ~(Mask{1} << i) & ~(Mask{1} << j);
      if (!between) out.emplace_back(i, j);
    }
  return out;
}

std::optional<std::array<int, 3>> convexity_violation(const FinPoset& p, Mask k) {
  for (int a = 0; a < p.size(); ++a) {
    if (!(k >> a & 1)) continue;
    for (int b = 0; b < p.size(); ++b) {
      if (!(k >> b & 1) || !p.leq(a, b)) continue;
      Mask between = p.up(a) & p.down(b) & ~k;
      if (between) return std::array<int, 3>{a, __builtin_ctz(between), b};
    }
  }
  return std::nullopt;
}

bool is_convex_subset(const FinPoset& p, Mask k) { return !convexity_violation(p, k); }
bool is_convex_subset(const FinPoset& p, const std::vector<std::string>& k) {
  return is_convex_subset(p, p.mask_of(k));
}

bool is_lower_set(const FinPoset& p, Mask k) {
  for (int b = 0; b < p.size(); ++b)
    if ((k >> b & 1) && (p.down(b) & ~k)) return false;
  return true;
}

bool is_upper_set(const FinPoset& p, Mask k) {
  for (int a = 0; a < p.size(); ++a)
    if ((k >> a & 1) && (p.up(a) & ~k)) return false;
  return true;
}

bool is_lower_set(const FinPoset& p, const std::vector<std::string>& k) {
  return is_lower_set(p, p.mask_of(k));
}
bool is_upper_set(const FinPoset& p, const std::vector<std::string>& k) {
  return is_upper_set(p, p.mask_of(k));
}

std::vector<Mask> lower_sets(const FinPoset& p) {
  std::vector<Mask> out;
  for (Mask k = 0; k <= p.full(); ++k) {
    if (is_lower_set(p, k)) out.push_back(k);
    if (k == p.full()) break;
  }
  return out;
}

std::vector<Mask> upper_sets(const FinPoset& p) {
  std::vector<Mask> out;
  for (Mask k : lower_sets(p)) out.push_back(p.full() & ~k);
  std::sort(out.begin(), out.end());
  return out;
}

FinPoset restrict(const FinPoset& p, Mask k) {
  std::vector<int> keep;
  for (int i = 0; i < p.size(); ++i)
    if (k >> i & 1) keep.push_back(i);
  const int m = static_cast<int>(keep.size());
  std::vector<std::string> labels;
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(m * m));
  for (int x = 0; x < m; ++x) {
    labels.push_back(p.label(keep[x]));
    for (int y = 0; y < m; ++y) leq[x * m + y] = p.leq(keep[x], keep[y]) ? 1 : 0;
  }
  return FinPoset::from_matrix(std::move(labels), std::move(leq));
}

FinPoset restrict(const FinPoset& p, const std::vector<std::string>& k) {
  return restrict(p, p.mask_of(k));
}

FinPoset disjoint_union(const FinPoset& p, const FinPoset& q) {
  const int n = p.size() + q.size();
  std::vector<std::string> labels;
  for (const auto& l : p.labels()) labels.push_back("L." + l);
  for (const auto& l : q.labels()) labels.push_back("R." + l);
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n * n), 0);
  for (int i = 0; i < p.size(); ++i)
    for (int j = 0; j < p.size(); ++j) leq[i * n + j] = p.leq(i, j);
  const int o = p.size();
  for (int i = 0; i < q.size(); ++i)
    for (int j = 0; j < q.size(); ++j) leq[(o + i) * n + o + j] = q.leq(i, j);
  return FinPoset::from_matrix(std::move(labels), std::move(leq));
}

Mask Layering::layer(int i) const {
  Mask m = 0;
  for (std::size_t x = 0; x < level.size(); ++x)
    if (level[x] == i) m |= Mask{1} << x;
  return m;
}

bool Layering::has_empty_layer() const {
  for (int i = 1; i <= n; ++i)
    if (!layer(i)) return true;
  return false;
}

Layering make_layering(FinPoset carrier, int n, std::vector<int> level) {
  if (n < 0) throw InvalidArgument("negative layer count");
  if (static_cast<int>(level.size()) != carrier.size())
    throw InvalidArgument("layering needs one level per element");
  for (int i = 0; i < carrier.size(); ++i) {
    if (level[i] < 1 || level[i] > n) throw InvalidArgument("level out of range");
    for (int j = 0; j < carrier.size(); ++j)
      if (carrier.leq(i, j) && level[i] > level[j])
        throw InvalidArgument("layering is not monotone at '" + carrier.label(i) + "' <= '" +
                              carrier.label(j) + "'");
  }
  return {std::move(carrier), n, std::move(level)};
}

std::vector<std::vector<int>> monotone_levelings(const FinPoset& p, int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> level(static_cast<std::size_t>(p.size()), 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == p.size()) {
      out.push_back(level);
      return;
    }
    int lo = 1;
    for (int j = 0; j < i; ++j)
      if (p.leq(j, i)) lo = std::max(lo, level[j]);
    int hi = n;
    for (int j = 0; j < i; ++j)
      if (p.leq(i, j)) hi = std::min(hi, level[j]);
    for (int v = lo; v <= hi; ++v) {
      level[i] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

std::vector<Layering> enumerate_layerings(const FinPoset& p, int n) {
  std::vector<Layering> out;
  for (auto& lv : monotone_levelings(p, n)) out.push_back({p, n, std::move(lv)});
  return out;
}

Layering push_layering(const Layering& l, const simplex::UlDeltaMap& g) {
  if (g.source() != l.n)
    throw InvalidArgument("push_layering: map source " + std::to_string(g.source()) +
                          " does not match " + std::to_string(l.n) + " layers");
  std::vector<int> level;
  for (int v : l.level) level.push_back(g(v));
  return {l.carrier, g.target(), std::move(level)};
}

Layering pull_layering(const Layering& l, const simplex::UlDeltaMap& i) {
  if (!simplex::is_convex(i)) throw InvalidArgument("pull_layering needs a convex map");
  if (i.target() != l.n) throw InvalidArgument("pull_layering: arity mismatch");
  if (i.source() == 0) return {FinPoset(), 0, {}};
  const int lo = i(1), hi = i(i.source());
  Mask keep = 0;
  std::vector<int> level;
  for (int x = 0; x < l.carrier.size(); ++x)
    if (l.level[x] >= lo && l.level[x] <= hi) {
      keep |= Mask{1} << x;
      level.push_back(l.level[x] - lo + 1);
    }
  return {restrict(l.carrier, keep), i.source(), std::move(level)};
}

canon::RelStructure rel_structure(const FinPoset& p) {
  canon::RelStructure s{p.size(), 0, {}};
  s.relations.emplace_back(p.leq_matrix().begin(), p.leq_matrix().end());
  return s;
}

std::string canonical_key(const FinPoset& p) {
  return canon::to_hex(canon::canonical_form(rel_structure(p)).bytes);
}

std::vector<std::vector<int>> isomorphisms(const FinPoset& p, const FinPoset& q) {
  return canon::isomorphisms(rel_structure(p), rel_structure(q));
}

std::uint64_t automorphism_count(const FinPoset& p) {
  return canon::automorphism_count(rel_structure(p));
}

namespace {

using Matrix = std::vector<std::uint8_t>;

// Posets on {0..n-1} in which i < j implies i < j as integers: each new
// element sits above a lower set of the previous ones.
std::vector<Matrix> natural_posets(int n) {
  std::vector<Matrix> current{Matrix{}};
  for (int m = 0; m < n; ++m) {
    std::vector<Matrix> next;
    for (const Matrix& leq : current) {
      std::vector<std::string> labels;
      for (int i = 0; i < m; ++i) labels.push_back(std::to_string(i));
      FinPoset p = FinPoset::from_matrix(labels, leq);
      for (Mask d : lower_sets(p)) {
        const int k = m + 1;
        Matrix grown(static_cast<std::size_t>(k * k), 0);
        for (int i = 0; i < m; ++i)
          for (int j = 0; j < m; ++j) grown[i * k + j] = leq[i * m + j];
        for (int i = 0; i < m; ++i)
          if (d >> i & 1) grown[i * k + m] = 1;
        grown[m * k + m] = 1;
        next.push_back(std::move(grown));
      }
    }
    current = std::move(next);
  }
  return current;
}

const std::vector<Matrix>& labelled_posets(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<Matrix>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::set<Matrix> all;
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (const Matrix& leq : natural_posets(n)) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      Matrix m(leq.size());
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m[perm[i] * n + perm[j]] = leq[i * n + j];
      all.insert(std::move(m));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return cache.emplace(n, std::vector<Matrix>(all.begin(), all.end())).first->second;
}

}  // namespace

std::vector<FinPoset> all_posets(const std::vector<std::string>& labels) {
  const int n = static_cast<int>(labels.size());
  if (n > 6) throw BoundExceeded("labelled poset enumeration is limited to 6 elements");
  std::vector<FinPoset> out;
  for (const Matrix& m : labelled_posets(n)) out.push_back(FinPoset::from_matrix(labels, m));
  return out;
}

std::vector<FinPoset> poset_classes(int n) {
  if (n > max_carrier_size()) throw BoundExceeded("poset enumeration size over bound");
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(universe_label(i));
  std::map<std::string, FinPoset> classes;
  for (const Matrix& m : natural_posets(n)) {
    FinPoset p = FinPoset::from_matrix(labels, m);
    classes.emplace(canonical_key(p), std::move(p));
  }
  std::vector<FinPoset> out;
  for (auto& [key, p] : classes) out.push_back(std::move(p));
  return out;
}

}  // namespace dsp
