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


#ifndef DSPECIES_POSET_HPP
#define DSPECIES_POSET_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dspecies/canon.hpp"
#include "dspecies/simplex.hpp"

namespace dsp {

/// Subsets of a poset as bitmasks over element positions.
using Mask = std::uint32_t;

inline int popcount(Mask m) { return __builtin_popcount(m); }

/// Label of the i-th element of the working universe: "a", "b", ...
std::string universe_label(int i);

/// A finite poset on labelled elements.  The order relation is stored as its
/// reflexive-transitive closure.
class FinPoset {
 public:
  FinPoset() = default;

  /// Builds the closure of `pairs` (cover or order pairs).  Throws
  /// ValidationError on duplicate labels, unknown labels or cycles.
  static FinPoset make(std::vector<std::string> elements,
                       const std::vector<std::pair<std::string, std::string>>& pairs);
  /// Takes a full order matrix; validates reflexivity, antisymmetry and
  /// transitivity.
  static FinPoset from_matrix(std::vector<std::string> elements, std::vector<std::uint8_t> leq);
  static FinPoset discrete(std::vector<std::string> elements);
  /// elements[0] < elements[1] < ...
  static FinPoset chain(std::vector<std::string> elements);

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  /// Position of a label, or -1.
  int index_of(const std::string& label) const;

  bool leq(int i, int j) const { return leq_[static_cast<std::size_t>(i * size() + j)] != 0; }
  bool less(int i, int j) const { return i != j && leq(i, j); }
  const std::vector<std::uint8_t>& leq_matrix() const noexcept { return leq_; }
  /// Principal down-set and up-set of i (both contain i).
  Mask down(int i) const { return down_[static_cast<std::size_t>(i)]; }
  Mask up(int i) const { return up_[static_cast<std::size_t>(i)]; }
  Mask full() const { return size() == 32 ? ~Mask{0} : (Mask{1} << size()) - 1; }

  /// Throws InvalidArgument on unknown labels.
  Mask mask_of(const std::vector<std::string>& labels) const;
  std::vector<std::string> labels_of(Mask m) const;

  bool is_discrete() const;
  bool is_chain() const;
  /// Covering pairs (x, y) with x < y and nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;

  friend bool operator==(const FinPoset& a, const FinPoset& b) {
    return a.labels_ == b.labels_ && a.leq_ == b.leq_;
  }

 private:
  FinPoset(std::vector<std::string> labels, std::vector<std::uint8_t> leq);

  std::vector<std::string> labels_;
  std::vector<std::uint8_t> leq_;
  std::vector<Mask> down_, up_;
};

bool is_convex_subset(const FinPoset& p, Mask k);
bool is_convex_subset(const FinPoset& p, const std::vector<std::string>& k);
/// A witness (a, x, b) with a <= x <= b, a and b in k, x outside k.
std::optional<std::array<int, 3>> convexity_violation(const FinPoset& p, Mask k);
bool is_lower_set(const FinPoset& p, Mask k);
bool is_upper_set(const FinPoset& p, Mask k);
bool is_lower_set(const FinPoset& p, const std::vector<std::string>& k);
bool is_upper_set(const FinPoset& p, const std::vector<std::string>& k);
std::vector<Mask> lower_sets(const FinPoset& p);
std::vector<Mask> upper_sets(const FinPoset& p);

/// Full induced subposet; elements keep their relative order.
FinPoset restrict(const FinPoset& p, Mask k);
FinPoset restrict(const FinPoset& p, const std::vector<std::string>& k);

/// Coproduct with labels prefixed "L." and "R.".
FinPoset disjoint_union(const FinPoset& p, const FinPoset& q);

/// A monotone map from the carrier to the chain 1 < ... < n.
struct Layering {
  FinPoset carrier;
  int n = 0;
  /// level[i] in 1..n for each element position i.
  std::vector<int> level;

  Mask layer(int i) const;
  bool has_empty_layer() const;
  friend bool operator==(const Layering&, const Layering&) = default;
};

/// Validates monotonicity and range.
Layering make_layering(FinPoset carrier, int n, std::vector<int> level);
/// All monotone level assignments P -> n, in lexicographic order.
std::vector<std::vector<int>> monotone_levelings(const FinPoset& p, int n);
std::vector<Layering> enumerate_layerings(const FinPoset& p, int n);
/// Postcomposition with g : n -> m.
Layering push_layering(const Layering& l, const simplex::UlDeltaMap& g);
/// Restriction to the layers over the image of the convex map i : k -> n,
/// relabelled through i.
Layering pull_layering(const Layering& l, const simplex::UlDeltaMap& i);

canon::RelStructure rel_structure(const FinPoset& p);
/// Hex key, equal exactly for isomorphic posets.
std::string canonical_key(const FinPoset& p);
/// All order isomorphisms p -> q as iso[i] = position in q.
std::vector<std::vector<int>> isomorphisms(const FinPoset& p, const FinPoset& q);
std::uint64_t automorphism_count(const FinPoset& p);

/// Every poset on the given labels (all labelled orders).
std::vector<FinPoset> all_posets(const std::vector<std::string>& labels);
/// One representative per isomorphism class of n-element posets, labelled
/// by the universe and sorted by canonical key.
std::vector<FinPoset> poset_classes(int n);

}  // namespace dsp

#endif  // DSPECIES_POSET_HPP
