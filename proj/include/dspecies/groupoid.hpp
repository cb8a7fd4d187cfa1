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


#ifndef DSPECIES_GROUPOID_HPP
#define DSPECIES_GROUPOID_HPP

// Explicit finite groupoids, functors between them, homotopy fibres,
// iso-comma squares, equivalence testing and homotopy cardinality.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dsp {

/// Morphisms are numbered so that the morphisms out of each object form a
/// contiguous block [out_begin(o), out_end(o)).
class FinGroupoid {
 public:
  /// Returns the id of `after o before`.
  using Composer = std::function<int(int after, int before)>;

  FinGroupoid(std::vector<std::string> names, std::vector<int> first_out,
              std::vector<int> targets, std::vector<int> identities, std::vector<int> inverses,
              Composer compose);

  class Builder;

  /// One object whose automorphism group has the given multiplication table
  /// on 0..order-1, with 0 the unit.
  static FinGroupoid from_group(std::string name, int order,
                                const std::function<int(int, int)>& multiply);
  static FinGroupoid discrete(std::vector<std::string> names);
  /// Exactly one morphism between any two objects.
  static FinGroupoid codiscrete(std::vector<std::string> names);

  int object_count() const noexcept { return static_cast<int>(names_.size()); }
  int morphism_count() const noexcept { return static_cast<int>(targets_.size()); }
  const std::string& name(int o) const { return names_.at(static_cast<std::size_t>(o)); }
  /// First object with this name, or -1.
  int find_object(const std::string& name) const;

  int source(int m) const { return sources_[static_cast<std::size_t>(m)]; }
  int target(int m) const { return targets_[static_cast<std::size_t>(m)]; }
  int identity(int o) const { return identities_[static_cast<std::size_t>(o)]; }
  int inverse(int m) const { return inverses_[static_cast<std::size_t>(m)]; }
  /// Throws InvalidArgument unless target(before) == source(after).
  int compose(int after, int before) const;

  int out_begin(int o) const { return first_out_[static_cast<std::size_t>(o)]; }
  int out_end(int o) const { return first_out_[static_cast<std::size_t>(o) + 1]; }
  int out_degree(int o) const { return out_end(o) - out_begin(o); }
  /// Position of m inside the block of its source.
  int out_position(int m) const { return m - out_begin(source(m)); }
  const std::vector<int>& in(int o) const { return in_[static_cast<std::size_t>(o)]; }

  std::vector<int> hom(int x, int y) const;
  std::vector<int> automorphisms(int x) const { return hom(x, x); }

  /// Verifies the groupoid laws on the tables; returns a description of the
  /// first violation or an empty string.
  std::string check_laws() const;

 private:
  std::vector<std::string> names_;
  std::vector<int> first_out_;
  std::vector<int> sources_;
  std::vector<int> targets_;
  std::vector<int> identities_;
  std::vector<int> inverses_;
  std::vector<std::vector<int>> in_;
  Composer compose_;
  std::unordered_map<std::string, int> by_name_;
};

/// Assembles a groupoid from explicit tables in any order.
class FinGroupoid::Builder {
 public:
  int add_object(std::string name);
  int add_morphism(int source, int target);
  void set_identity(int object, int morphism);
  void set_inverse(int morphism, int inverse);
  void set_composite(int after, int before, int result);
  /// Throws InvalidArgument if a table entry is missing.
  FinGroupoid build() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::pair<int, int>> morphisms_;
  std::map<int, int> identities_;
  std::map<int, int> inverses_;
  std::map<std::pair<int, int>, int> composites_;
};

using GroupoidPtr = std::shared_ptr<const FinGroupoid>;

struct GroupoidFunctor {
  GroupoidPtr dom;
  GroupoidPtr cod;
  std::vector<int> obj;
  std::vector<int> mor;

  static GroupoidFunctor identity(GroupoidPtr g);
  /// Checks sources, targets, identities, inverses and composition; returns
  /// the first violation or an empty string.
  std::string check() const;
  friend bool operator==(const GroupoidFunctor& a, const GroupoidFunctor& b) {
    return a.dom == b.dom && a.cod == b.cod && a.obj == b.obj && a.mor == b.mor;
  }
};

/// g after f.
GroupoidFunctor compose(const GroupoidFunctor& g, const GroupoidFunctor& f);

/// Component index of every object, numbered in order of first appearance.
std::vector<int> components(const FinGroupoid& g);

struct IsoClass {
  int representative;
  std::uint64_t automorphisms;
  int size;  // number of objects in the class
};
std::vector<IsoClass> iso_classes(const FinGroupoid& g);

/// Sum over isomorphism classes of 1/|Aut|.
mpq_class homotopy_cardinality(const FinGroupoid& g);

bool is_discrete(const FinGroupoid& g);

GroupoidPtr product(const GroupoidPtr& g, const GroupoidPtr& h);
GroupoidPtr disjoint_union(const GroupoidPtr& g, const GroupoidPtr& h);

/// A homotopy fibre together with its projection to the domain.  over[x] is
/// the connecting isomorphism of fibre object x (for pair fibres, over2 holds
/// the second one).
struct Fibre {
  GroupoidPtr groupoid;
  GroupoidFunctor projection;
  std::vector<int> over;
  std::vector<int> over2;
};

/// Objects (x, phi : F x -> z); morphisms u : x -> x' with phi' F(u) = phi.
Fibre fibre(const GroupoidFunctor& f, int z);
/// Homotopy fibre of (F1, F2) : D -> Z1 x Z2 over (z1, z2).
Fibre fibre_pair(const GroupoidFunctor& f1, const GroupoidFunctor& f2, int z1, int z2);

struct IsoComma {
  GroupoidPtr groupoid;
  GroupoidFunctor to_a;
  GroupoidFunctor to_b;
  std::vector<int> phi;  // connecting isomorphism f(a) -> g(b) per object

  /// The functor from the apex of a strictly commuting cone (p1 : P -> A,
  /// p2 : P -> B) sending p to (p1 p, p2 p, id).
  GroupoidFunctor comparison(const GroupoidFunctor& p1, const GroupoidFunctor& p2) const;

  GroupoidPtr c;
  std::vector<int> f_obj;
  /// Packed (a, b, phi) -> object id.
  std::shared_ptr<const std::unordered_map<std::uint64_t, int>> index;
};

/// Objects (a, b, phi : f a -> g b); morphisms (u, v) with phi' f(u) = g(v) phi.
IsoComma iso_comma(const GroupoidFunctor& f, const GroupoidFunctor& g);

struct EquivalenceWitness {
  enum class Kind { kMissedClass, kHomDefect };
  Kind kind;
  std::string x;  // missed object (codomain) or first object (domain)
  std::string y;  // second object (domain), empty for a missed class
  std::size_t hom_xy = 0;
  std::size_t hom_fxfy = 0;
  std::string over;  // base point when produced by a fibrewise test

  std::string to_json() const;
};

struct EquivalenceVerdict {
  bool holds = true;
  std::optional<EquivalenceWitness> witness;
  explicit operator bool() const { return holds; }
};

/// Essentially surjective and fully faithful.
EquivalenceVerdict is_equivalence(const GroupoidFunctor& f);
/// Fully faithful, hence injective on isomorphism classes.
EquivalenceVerdict is_mono_up_to_equiv(const GroupoidFunctor& f);

/// p1 : P -> A, p2 : P -> B, f : A -> C, g : B -> C with f p1 = g p2.
struct GroupoidSquare {
  GroupoidFunctor p1;
  GroupoidFunctor p2;
  GroupoidFunctor f;
  GroupoidFunctor g;
};

bool strictly_commutes(const GroupoidSquare& sq);

/// Whether b in B may appear over a in A.  Used for size-truncated models,
/// where only the part of the pullback within the size bound is available.
/// Must depend on isomorphism classes only.
using Admissible = std::function<bool(int a, int b)>;

/// For every component representative a of A, compares the homotopy fibre of
/// p1 over a with the homotopy fibre of g over f(a), restricted to admissible
/// objects when a filter is given.  Throws InvalidArgument if the square does
/// not commute.
EquivalenceVerdict is_homotopy_pullback(const GroupoidSquare& sq, const Admissible& admissible = {});
/// Builds the full iso-comma of (f, g) and tests the comparison functor.
EquivalenceVerdict is_homotopy_pullback_direct(const GroupoidSquare& sq);

/// Objects with hom-set sizes to every other object in their class.
std::string to_json(const FinGroupoid& g);

}  // namespace dsp

#endif  // DSPECIES_GROUPOID_HPP
