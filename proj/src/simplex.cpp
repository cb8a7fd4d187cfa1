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

#include "dspecies/simplex.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "dspecies/error.hpp"

namespace dsp::simplex {

namespace {

bool weakly_increasing(const std::vector<int>& v) {
  return std::is_sorted(v.begin(), v.end());
}

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

// Extends `prefix` to every weakly increasing sequence of `length` values in
// [lo, hi] and hands each to `emit`.
template <typename Emit>
void monotone_sequences(int length, int lo, int hi, std::vector<int>& prefix,
                        Emit&& emit) {
  if (static_cast<int>(prefix.size()) == length) {
    emit(prefix);
    return;
  }
  int start = prefix.empty() ? lo : prefix.back();
  for (int v = start; v <= hi; ++v) {
    prefix.push_back(v);
    monotone_sequences(length, lo, hi, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace

DeltaMap::DeltaMap(int source, int target, std::vector<int> values)
    : source_(source), target_(target), values_(std::move(values)) {
  if (source < 0 || target < 0)
    throw InvalidArgument("Delta objects are [n] with n >= 0");
  if (static_cast<int>(values_.size()) != source + 1)
    throw InvalidArgument("Delta map needs source+1 values, got " + join(values_));
  if (!weakly_increasing(values_))
    throw InvalidArgument("Delta map is not monotone: " + join(values_));
  for (int v : values_)
    if (v < 0 || v > target)
      throw InvalidArgument("Delta map value out of range: " + join(values_));
}

DeltaMap DeltaMap::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n + 1));
  for (int i = 0; i <= n; ++i) v[static_cast<std::size_t>(i)] = i;
  return DeltaMap(n, n, std::move(v));
}

DeltaMap DeltaMap::coface(int n, int k) {
  if (k < 0 || k > n + 1) throw InvalidArgument("coface index out of range");
  std::vector<int> v;
  for (int i = 0; i <= n; ++i) v.push_back(i < k ? i : i + 1);
  return DeltaMap(n, n + 1, std::move(v));
}

DeltaMap DeltaMap::codegeneracy(int n, int k) {
  if (k < 0 || k > n) throw InvalidArgument("codegeneracy index out of range");
  std::vector<int> v;
  for (int i = 0; i <= n + 1; ++i) v.push_back(i <= k ? i : i - 1);
  return DeltaMap(n + 1, n, std::move(v));
}

DeltaMap DeltaMap::free_inclusion(int n, int a, int b) {
  if (a < 0 || b < 0) throw InvalidArgument("negative offset");
  std::vector<int> v;
  for (int i = 0; i <= n; ++i) v.push_back(a + i);
  return DeltaMap(n, a + n + b, std::move(v));
}

UlDeltaMap::UlDeltaMap(int source, int target, std::vector<int> values)
    : source_(source), target_(target), values_(std::move(values)) {
  if (source < 0 || target < 0)
    throw InvalidArgument("underlined ordinals have n >= 0");
  if (static_cast<int>(values_.size()) != source)
    throw InvalidArgument("underlined map needs `source` values, got " + join(values_));
  if (!weakly_increasing(values_))
    throw InvalidArgument("underlined map is not monotone: " + join(values_));
  for (int v : values_)
    if (v < 1 || v > target)
      throw InvalidArgument("underlined map value out of range: " + join(values_));
}

UlDeltaMap UlDeltaMap::identity(int n) {
  std::vector<int> v;
  for (int x = 1; x <= n; ++x) v.push_back(x);
  return UlDeltaMap(n, n, std::move(v));
}

UlDeltaMap UlDeltaMap::coface(int n, int k) {
  if (k < 0 || k > n) throw InvalidArgument("coface index out of range");
  std::vector<int> v;
  for (int x = 1; x <= n; ++x) v.push_back(x <= k ? x : x + 1);
  return UlDeltaMap(n, n + 1, std::move(v));
}

UlDeltaMap UlDeltaMap::codegeneracy(int n, int k) {
  if (k < 0 || k > n - 1) throw InvalidArgument("codegeneracy index out of range");
  std::vector<int> v;
  for (int x = 1; x <= n + 1; ++x) v.push_back(x <= k + 1 ? x : x - 1);
  return UlDeltaMap(n + 1, n, std::move(v));
}

UlDeltaMap UlDeltaMap::convex(int n, int a, int b) {
  if (a < 0 || b < 0) throw InvalidArgument("negative offset");
  std::vector<int> v;
  for (int x = 1; x <= n; ++x) v.push_back(a + x);
  return UlDeltaMap(n, a + n + b, std::move(v));
}

UlDeltaMap UlDeltaMap::extend(const UlDeltaMap& f, int a, int b) {
  if (a < 0 || b < 0) throw InvalidArgument("negative offset");
  std::vector<int> v;
  for (int x = 1; x <= a; ++x) v.push_back(x);
  for (int y : f.values()) v.push_back(a + y);
  for (int x = 1; x <= b; ++x) v.push_back(a + f.target() + x);
  return UlDeltaMap(a + f.source() + b, a + f.target() + b, std::move(v));
}

DeltaMap compose(const DeltaMap& g, const DeltaMap& f) {
  if (f.target() != g.source())
    throw InvalidArgument("Delta maps not composable: " + name(g) + " after " + name(f));
  std::vector<int> v;
  for (int x : f.values()) v.push_back(g(x));
  return DeltaMap(f.source(), g.target(), std::move(v));
}

UlDeltaMap compose(const UlDeltaMap& g, const UlDeltaMap& f) {
  if (f.target() != g.source())
    throw InvalidArgument("underlined maps not composable: " + to_string(g) +
                          " after " + to_string(f));
  std::vector<int> v;
  for (int x : f.values()) v.push_back(g(x));
  return UlDeltaMap(f.source(), g.target(), std::move(v));
}

bool is_generic(const DeltaMap& m) {
  return m(0) == 0 && m(m.source()) == m.target();
}

bool is_free(const DeltaMap& m) {
  for (int i = 0; i < m.source(); ++i)
    if (m(i + 1) != m(i) + 1) return false;
  return true;
}

Factorization generic_free_factorize(const DeltaMap& m) {
  // The free part is the inclusion of the interval [m(0), m(top)].
  const int lo = m(0);
  const int width = m(m.source()) - lo;
  std::vector<int> g;
  for (int v : m.values()) g.push_back(v - lo);
  return {DeltaMap(m.source(), width, std::move(g)),
          DeltaMap::free_inclusion(width, lo, m.target() - lo - width)};
}

UlDeltaMap joyal_dual(const DeltaMap& g) {
  if (!is_generic(g)) throw InvalidArgument("Joyal duality needs a generic map, got " + name(g));
  std::vector<int> v;
  int i = 1;
  for (int dot = 1; dot <= g.target(); ++dot) {
    while (g(i) < dot) ++i;
    v.push_back(i);
  }
  return UlDeltaMap(g.target(), g.source(), std::move(v));
}

DeltaMap joyal_dual_inverse(const UlDeltaMap& h) {
  std::vector<int> v;
  for (int i = 0; i <= h.target(); ++i) {
    int count = 0;
    for (int y : h.values())
      if (y <= i) ++count;
    v.push_back(count);
  }
  return DeltaMap(h.target(), h.source(), std::move(v));
}

UlDeltaMap free_to_convex(const DeltaMap& f) {
  if (!is_free(f)) throw InvalidArgument("not a free map: " + name(f));
  if (f.source() == 0) return UlDeltaMap(0, f.target(), {});
  const int a = f(0);
  return UlDeltaMap::convex(f.source(), a, f.target() - f.source() - a);
}

bool is_convex(const UlDeltaMap& m) {
  for (int x = 1; x < m.source(); ++x)
    if (m(x + 1) != m(x) + 1) return false;
  return true;
}

int convex_offset(const UlDeltaMap& m) {
  if (!is_convex(m)) throw InvalidArgument("not a convex map: " + to_string(m));
  return m.source() == 0 ? 0 : m(1) - 1;
}

ConvexPullback pullback_convex(const UlDeltaMap& f, const UlDeltaMap& i) {
  if (!is_convex(i)) throw InvalidArgument("pullback needs a convex map, got " + to_string(i));
  if (f.target() != i.target()) throw InvalidArgument("pullback cospan has mismatched targets");
  if (i.source() == 0) {
    return {0, UlDeltaMap(0, f.source(), {}), UlDeltaMap(0, 0, {})};
  }
  const int lo = i(1);
  const int hi = i(i.source());
  std::vector<int> pre;
  for (int x = 1; x <= f.source(); ++x)
    if (f(x) >= lo && f(x) <= hi) pre.push_back(x);
  const int apex = static_cast<int>(pre.size());
  std::vector<int> f0;
  for (int x : pre) f0.push_back(f(x) - lo + 1);
  // f is monotone, so the preimage of an interval is an interval.
  UlDeltaMap j(apex, f.source(), pre);
  return {apex, std::move(j), UlDeltaMap(apex, i.source(), std::move(f0))};
}

bool commutes(const UlSquare& sq) {
  if (sq.j.target() != sq.g.source() || sq.f.target() != sq.i.source() ||
      sq.j.source() != sq.f.source() || sq.g.target() != sq.i.target())
    return false;
  return compose(sq.g, sq.j) == compose(sq.i, sq.f);
}

UlSquare IesqSquare::square() const {
  return {UlDeltaMap::convex(n(), a, b), UlDeltaMap::extend(f, a, b), f,
          UlDeltaMap::convex(k(), a, b)};
}

bool is_iesq(const UlSquare& sq) {
  if (!commutes(sq)) throw InvalidArgument("square does not commute");
  if (!is_convex(sq.j) || !is_convex(sq.i)) return false;
  const int n = sq.f.source(), k = sq.f.target();
  const int n_outer = sq.j.target(), k_outer = sq.i.target();
  std::vector<int> candidates;
  if (k > 0) {
    candidates.push_back(convex_offset(sq.i));
  } else if (n > 0) {
    candidates.push_back(convex_offset(sq.j));
  } else {
    for (int a = 0; a <= n_outer; ++a) candidates.push_back(a);
  }
  for (int a : candidates) {
    const int b = n_outer - n - a;
    if (b < 0 || k_outer - k - a != b) continue;
    if (n > 0 && convex_offset(sq.j) != a) continue;
    if (k > 0 && convex_offset(sq.i) != a) continue;
    if (sq.g == UlDeltaMap::extend(sq.f, a, b)) return true;
  }
  return false;
}

DeltaSquare pushout_square(const IesqSquare& sq) {
  return {joyal_dual_inverse(UlDeltaMap::extend(sq.f, sq.a, sq.b)),
          joyal_dual_inverse(sq.f), DeltaMap::free_inclusion(sq.n(), sq.a, sq.b),
          DeltaMap::free_inclusion(sq.k(), sq.a, sq.b)};
}

std::vector<IesqSquare> enumerate_iesq(const IesqBounds& bounds) {
  std::vector<IesqSquare> out;
  for (int a = 0; a <= bounds.max_a; ++a)
    for (int b = 0; b <= bounds.max_b; ++b)
      for (int n = 0; n <= bounds.max_n; ++n)
        for (int k = 0; k <= bounds.max_k; ++k) {
          if (bounds.max_corner >= 0 &&
              (a + n + b > bounds.max_corner || a + k + b > bounds.max_corner))
            continue;
          for (auto& f : all_ul_maps(n, k)) out.push_back({a, b, std::move(f)});
        }
  std::stable_sort(out.begin(), out.end(), [](const IesqSquare& x, const IesqSquare& y) {
    auto key = [](const IesqSquare& s) {
      return std::tuple(s.a + s.n() + s.b, s.a, s.b, s.n(), s.k());
    };
    if (key(x) != key(y)) return key(x) < key(y);
    return x.f < y.f;
  });
  return out;
}

std::vector<DeltaMap> all_delta_maps(int m, int n) {
  std::vector<DeltaMap> out;
  std::vector<int> prefix;
  monotone_sequences(m + 1, 0, n, prefix,
                     [&](const std::vector<int>& v) { out.emplace_back(m, n, v); });
  return out;
}

std::vector<UlDeltaMap> all_ul_maps(int m, int n) {
  std::vector<UlDeltaMap> out;
  if (n == 0 && m > 0) return out;
  std::vector<int> prefix;
  monotone_sequences(m, 1, n, prefix,
                     [&](const std::vector<int>& v) { out.emplace_back(m, n, v); });
  return out;
}

bool is_pullback(const UlSquare& sq, int bound) {
  if (!commutes(sq)) return false;
  for (int r = 0; r <= bound; ++r) {
    for (const auto& u : all_ul_maps(r, sq.g.source())) {
      const auto gu = compose(sq.g, u);
      for (const auto& v : all_ul_maps(r, sq.f.target())) {
        if (compose(sq.i, v) != gu) continue;
        int factorizations = 0;
        for (const auto& w : all_ul_maps(r, sq.f.source()))
          if (compose(sq.j, w) == u && compose(sq.f, w) == v) ++factorizations;
        if (factorizations != 1) return false;
      }
    }
  }
  return true;
}

bool is_pushout(const UlSquare& sq, int bound) {
  if (!commutes(sq)) return false;
  for (int r = 0; r <= bound; ++r) {
    for (const auto& x : all_ul_maps(sq.g.source(), r)) {
      const auto xj = compose(x, sq.j);
      for (const auto& y : all_ul_maps(sq.f.target(), r)) {
        if (compose(y, sq.f) != xj) continue;
        int factorizations = 0;
        for (const auto& w : all_ul_maps(sq.g.target(), r))
          if (compose(w, sq.g) == x && compose(w, sq.i) == y) ++factorizations;
        if (factorizations != 1) return false;
      }
    }
  }
  return true;
}

bool is_pushout(const DeltaSquare& sq, int bound) {
  if (compose(sq.free_top, sq.generic_inner) != compose(sq.generic_outer, sq.free_bottom))
    return false;
  for (int r = 0; r <= bound; ++r) {
    for (const auto& x : all_delta_maps(sq.generic_inner.target(), r)) {
      const auto xg = compose(x, sq.generic_inner);
      for (const auto& y : all_delta_maps(sq.generic_outer.source(), r)) {
        if (compose(y, sq.free_bottom) != xg) continue;
        int factorizations = 0;
        for (const auto& w : all_delta_maps(sq.free_top.target(), r))
          if (compose(w, sq.free_top) == x && compose(w, sq.generic_outer) == y)
            ++factorizations;
        if (factorizations != 1) return false;
      }
    }
  }
  return true;
}

std::string name(const DeltaMap& m) {
  if (m == DeltaMap::identity(m.source())) return "id";
  if (m.target() == m.source() + 1) {
    for (int k = 0; k <= m.target(); ++k)
      if (m == DeltaMap::coface(m.source(), k)) return "d" + std::to_string(k);
  }
  if (m.source() == m.target() + 1) {
    for (int k = 0; k <= m.target(); ++k)
      if (m == DeltaMap::codegeneracy(m.target(), k)) return "s" + std::to_string(k);
  }
  return join(m.values());
}

std::string to_string(const UlDeltaMap& m) {
  return std::to_string(m.source()) + "->" + std::to_string(m.target()) + join(m.values());
}

}  // namespace dsp::simplex
