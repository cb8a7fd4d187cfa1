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


#include <numeric>

#include "doctest.h"

#include "dspecies/error.hpp"
#include "dspecies/simplex.hpp"

using namespace dsp::simplex;

namespace {

long binomial(int n, int k) {
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_SUITE("simplex") {

TEST_CASE("monotone map counts match binomials") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      CHECK(static_cast<long>(all_delta_maps(m, n).size()) == binomial(m + n + 1, m + 1));
      CHECK(static_cast<long>(all_ul_maps(m, n).size()) == binomial(m + n - 1 + (n == 0 && m == 0), m));
    }
}

TEST_CASE("every map factors uniquely as free after generic") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 4; ++n)
      for (const DeltaMap& f : all_delta_maps(m, n)) {
        const Factorization fac = generic_free_factorize(f);
        CHECK(is_generic(fac.generic));
        CHECK(is_free(fac.free));
        CHECK(compose(fac.free, fac.generic) == f);
        CHECK(is_generic(f) == (fac.free == DeltaMap::identity(n)));
      }
}

TEST_CASE("joyal duality is a bijection swapping cofaces and codegeneracies") {
  for (int m = 0; m <= 3; ++m)
    for (int n = 0; n <= 3; ++n) {
      int generic = 0;
      for (const DeltaMap& g : all_delta_maps(m, n)) {
        if (!is_generic(g)) {
          CHECK_THROWS_AS(joyal_dual(g), dsp::InvalidArgument);
          continue;
        }
        ++generic;
        const UlDeltaMap h = joyal_dual(g);
        CHECK(h.source() == n);
        CHECK(h.target() == m);
        CHECK(joyal_dual_inverse(h) == g);
      }
      // Generic maps [m] -> [n] correspond to all maps n -> m.
      CHECK(generic == static_cast<int>(all_ul_maps(n, m).size()));
    }
  for (int n = 0; n <= 3; ++n)
    for (int k = 0; k <= n; ++k) CHECK(joyal_dual(DeltaMap::codegeneracy(n, k)) == UlDeltaMap::coface(n, k));
  for (int n = 1; n <= 3; ++n)
    for (int k = 0; k + 1 < n + 1 && k < n; ++k)
      CHECK(joyal_dual(DeltaMap::coface(n, k + 1)) == UlDeltaMap::codegeneracy(n, k));
}

TEST_CASE("joyal duality reverses composition") {
  for (int a = 0; a <= 2; ++a)
    for (int b = 0; b <= 2; ++b)
      for (int c = 0; c <= 2; ++c)
        for (const DeltaMap& f : all_delta_maps(a, b))
          for (const DeltaMap& g : all_delta_maps(b, c)) {
            if (!is_generic(f) || !is_generic(g)) continue;
            CHECK(joyal_dual(compose(g, f)) == compose(joyal_dual(f), joyal_dual(g)));
          }
}

TEST_CASE("free maps are the convex inclusions") {
  for (int n = 0; n <= 3; ++n)
    for (int a = 0; a <= 2; ++a)
      for (int b = 0; b <= 2; ++b) {
        const DeltaMap f = DeltaMap::free_inclusion(n, a, b);
        CHECK(is_free(f));
        if (n > 0) {
          CHECK(free_to_convex(f) == UlDeltaMap::convex(n, a, b));
          CHECK(convex_offset(UlDeltaMap::convex(n, a, b)) == a);
        }
      }
  CHECK_FALSE(is_convex(UlDeltaMap(2, 3, {1, 3})));
  CHECK(is_convex(UlDeltaMap(2, 3, {2, 3})));
}

TEST_CASE("convex maps are stable under pullback") {
  for (int n = 0; n <= 3; ++n)
    for (const UlDeltaMap& f : all_ul_maps(n, 3))
      for (int k = 0; k <= 3; ++k)
        for (int a = 0; a + k <= 3; ++a) {
          const UlDeltaMap i = UlDeltaMap::convex(k, a, 3 - a - k);
          const ConvexPullback pb = pullback_convex(f, i);
          CHECK(is_convex(pb.j));
          const UlSquare sq{pb.j, f, pb.f0, i};
          CHECK(commutes(sq));
          CHECK(is_pullback(sq, 4));
        }
}

TEST_CASE("identity-extension squares are pullbacks and dual to generic-free pushouts") {
  IesqBounds b;
  b.max_corner = 3;
  const auto squares = enumerate_iesq(b);
  CHECK(!squares.empty());
  for (const IesqSquare& s : squares) {
    const UlSquare u = s.square();
    CHECK(commutes(u));
    CHECK(is_iesq(u));
    CHECK(is_pullback(u, 4));
    const DeltaSquare d = pushout_square(s);
    CHECK(is_generic(d.generic_outer));
    CHECK(is_generic(d.generic_inner));
    CHECK(is_free(d.free_top));
    CHECK(is_free(d.free_bottom));
    CHECK(compose(d.free_top, d.generic_inner) == compose(d.generic_outer, d.free_bottom));
    CHECK(is_pushout(d, 4));
  }
}

TEST_CASE("a commuting square of the wrong shape is not an iesq") {
  // 1 -> 2 twice, with the bottom map collapsing everything.
  const UlSquare sq{UlDeltaMap::convex(1, 0, 1), UlDeltaMap(2, 1, {1, 1}), UlDeltaMap::identity(1),
                    UlDeltaMap::identity(1)};
  REQUIRE(commutes(sq));
  CHECK_FALSE(is_iesq(sq));
  const UlSquare bad{UlDeltaMap::convex(1, 0, 1), UlDeltaMap::identity(2), UlDeltaMap::identity(1),
                     UlDeltaMap::convex(1, 1, 0)};
  CHECK_THROWS_AS(is_iesq(bad), dsp::InvalidArgument);
}

TEST_CASE("names") {
  CHECK(name(DeltaMap::identity(2)) == "id");
  CHECK(name(DeltaMap::coface(2, 1)) == "d1");
  CHECK(name(DeltaMap::codegeneracy(2, 0)) == "s0");
  CHECK(to_string(UlDeltaMap::coface(1, 0)) == "1->2[2]");
}

}
