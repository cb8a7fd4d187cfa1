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

#ifndef DSPECIES_SIMPLEX_HPP
#define DSPECIES_SIMPLEX_HPP

// Map algebra of the topologist's simplex category Delta (objects [n] =
// {0..n}) and the algebraist's Delta (objects n = {1..n}, including the empty
// ordinal).  Maps are stored as explicit value sequences.

#include <compare>
#include <string>
#include <vector>

namespace dsp::simplex {

/// A monotone map [source] -> [target].  values[i] is the image of i.
class DeltaMap {
 public:
  DeltaMap(int source, int target, std::vector<int> values);

  static DeltaMap identity(int n);
  /// d^k : [n] -> [n+1], skipping k.
  static DeltaMap coface(int n, int k);
  /// s^k : [n+1] -> [n], repeating k.
  static DeltaMap codegeneracy(int n, int k);
  /// The free map [n] -> [a+n+b] at offset a.
  static DeltaMap free_inclusion(int n, int a, int b);

  int source() const noexcept { return source_; }
  int target() const noexcept { return target_; }
  const std::vector<int>& values() const noexcept { return values_; }
  int operator()(int i) const { return values_.at(static_cast<std::size_t>(i)); }

  friend bool operator==(const DeltaMap&, const DeltaMap&) = default;
  friend auto operator<=>(const DeltaMap&, const DeltaMap&) = default;

 private:
  int source_;
  int target_;
  std::vector<int> values_;
};

/// A monotone map source -> target between underlined ordinals.  values[x-1]
/// is the image of x; values are 1-based.
class UlDeltaMap {
 public:
  UlDeltaMap(int source, int target, std::vector<int> values);

  static UlDeltaMap identity(int n);
  /// d^k : n -> n+1, skipping k+1 (0 <= k <= n).
  static UlDeltaMap coface(int n, int k);
  /// s^k : n+1 -> n, repeating k+1 (0 <= k <= n-1).
  static UlDeltaMap codegeneracy(int n, int k);
  /// The convex inclusion n -> a+n+b.
  static UlDeltaMap convex(int n, int a, int b);
  /// The ordinal sum id_a + f + id_b.
  static UlDeltaMap extend(const UlDeltaMap& f, int a, int b);

  int source() const noexcept { return source_; }
  int target() const noexcept { return target_; }
  const std::vector<int>& values() const noexcept { return values_; }
  /// Image of x, 1 <= x <= source.
  int operator()(int x) const { return values_.at(static_cast<std::size_t>(x - 1)); }

  friend bool operator==(const UlDeltaMap&, const UlDeltaMap&) = default;
  friend auto operator<=>(const UlDeltaMap&, const UlDeltaMap&) = default;

 private:
  int source_;
  int target_;
  std::vector<int> values_;
};

/// g after f.  Throws InvalidArgument when the maps are not composable.
DeltaMap compose(const DeltaMap& g, const DeltaMap& f);
UlDeltaMap compose(const UlDeltaMap& g, const UlDeltaMap& f);

bool is_generic(const DeltaMap& m);
bool is_free(const DeltaMap& m);

struct Factorization {
  DeltaMap generic;
  DeltaMap free;
};

/// The unique factorization m = free o generic.
Factorization generic_free_factorize(const DeltaMap& m);

/// Joyal duality on generic maps: a generic g : [m] -> [n] goes to the map
/// n -> m sending the dot j to the unique i with g(i-1) < j <= g(i).
/// Throws InvalidArgument for non-generic input.
UlDeltaMap joyal_dual(const DeltaMap& g);
/// Inverse of joyal_dual: h : n -> m goes to i |-> #{j : h(j) <= i}.
DeltaMap joyal_dual_inverse(const UlDeltaMap& h);

/// The convex map k -> n corresponding to a free map [k] -> [n].  Every map
/// out of [0] goes to the unique map 0 -> n.
UlDeltaMap free_to_convex(const DeltaMap& f);

bool is_convex(const UlDeltaMap& m);

/// Offset a of a convex map n -> a+n+b.  The empty map has offset 0.
int convex_offset(const UlDeltaMap& m);

struct ConvexPullback {
  int apex;
  UlDeltaMap j;   // apex -> source(f), convex
  UlDeltaMap f0;  // apex -> source(i)
};

/// Pullback of the convex map i along f (both with the same target).  The apex
/// is the preimage under f of the image interval of i.
ConvexPullback pullback_convex(const UlDeltaMap& f, const UlDeltaMap& i);

/// A square in the algebraist's Delta:
///
///        j
///   n' <---- n
///   |        |
///  g|        |f
///   v        v
///   k' <---- k
///        i
struct UlSquare {
  UlDeltaMap j;
  UlDeltaMap g;
  UlDeltaMap f;
  UlDeltaMap i;
};

bool commutes(const UlSquare& sq);

/// Identity-extension square: g = id_a + f + id_b, j and i convex at offset a.
struct IesqSquare {
  int a;
  int b;
  UlDeltaMap f;

  int n() const { return f.source(); }
  int k() const { return f.target(); }
  UlSquare square() const;
};

/// Whether a commuting square has identity-extension shape.  Throws
/// InvalidArgument if the square does not commute.
bool is_iesq(const UlSquare& sq);

/// A commutative square of generic against free maps in Delta:
///
///            free_top
///   [n'] <------------- [n]
///    ^                   ^
///    | generic_outer     | generic_inner
///    |                   |
///   [k'] <------------- [k]
///           free_bottom
struct DeltaSquare {
  DeltaMap generic_outer;
  DeltaMap generic_inner;
  DeltaMap free_top;
  DeltaMap free_bottom;
};

/// The generic-free pushout square in Delta corresponding to an iesq.
DeltaSquare pushout_square(const IesqSquare& sq);

struct IesqBounds {
  int max_a = 1;
  int max_b = 1;
  int max_n = 2;
  int max_k = 2;
  /// When non-negative, also require a+n+b and a+k+b to be at most this.
  int max_corner = -1;
};

/// All identity-extension squares within bounds, ordered by (a+n+b, a, b, f).
std::vector<IesqSquare> enumerate_iesq(const IesqBounds& bounds);

/// All monotone maps [m] -> [n] (resp. m -> n), in lexicographic order.
std::vector<DeltaMap> all_delta_maps(int m, int n);
std::vector<UlDeltaMap> all_ul_maps(int m, int n);

/// Brute-force universal-property checks against every cone through objects
/// of size at most `bound`.
bool is_pullback(const UlSquare& sq, int bound);
bool is_pushout(const UlSquare& sq, int bound);
bool is_pushout(const DeltaSquare& sq, int bound);

/// "d2", "s0", "id" for generators, otherwise the value list "[0,1,3]".
std::string name(const DeltaMap& m);
std::string to_string(const UlDeltaMap& m);

}  // namespace dsp::simplex

#endif  // DSPECIES_SIMPLEX_HPP
