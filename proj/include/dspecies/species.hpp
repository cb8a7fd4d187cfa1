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


#ifndef DSPECIES_SPECIES_HPP
#define DSPECIES_SPECIES_HPP

// Restriction species and directed restriction species.  A structure is a
// carrier poset with a decoration; decorations are relational (an optional
// n*n integer matrix plus one global integer), which lets restriction,
// transport and canonical labelling be generic.

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "dspecies/groupoid.hpp"
#include "dspecies/poset.hpp"

namespace dsp {

struct Decoration {
  std::vector<int> cells;  // empty, or n*n row-major
  int global = 0;

  friend bool operator==(const Decoration&, const Decoration&) = default;
  friend auto operator<=>(const Decoration&, const Decoration&) = default;
};

/// Bounds on decorations for species whose fibres R[P] are infinite.
struct EnumBounds {
  int edges = 2;
};

struct Structure {
  std::string tag;
  FinPoset carrier;
  Decoration decoration;

  int size() const { return carrier.size(); }
  friend bool operator==(const Structure&, const Structure&) = default;
};

/// Plug-in interface.  Implementations must be pure: every method depends
/// only on its arguments.
class SpeciesDef {
 public:
  virtual ~SpeciesDef() = default;

  virtual std::string tag() const = 0;
  /// Directed species restrict along convex inclusions of posets.  Ordinary
  /// species live on discrete carriers and restrict along any subset.
  virtual bool directed() const = 0;
  virtual bool monoidal() const { return true; }
  virtual bool has_cells() const { return false; }

  /// Carrier condition.  Defaults: every poset (directed) or every discrete
  /// poset (ordinary).
  virtual bool supports(const FinPoset& carrier) const;
  /// Throws ValidationError naming the first problem.
  virtual void validate(const FinPoset& carrier, const Decoration& d) const;
  /// Every decoration of `carrier` within bounds.  Must be closed under
  /// transport along automorphisms and under restriction.
  virtual std::vector<Decoration> decorations(const FinPoset& carrier, const EnumBounds& b) const;
  /// Decoration of the substructure on the positions `keep` (ascending).
  virtual Decoration restrict(const FinPoset& carrier, const Decoration& d,
                              const std::vector<int>& keep) const;
  /// Decoration after moving old position order[p] to position p.
  virtual Decoration transport(const Decoration& d, int n, const std::vector<int>& order) const;
  /// Decoration of the disjoint union (left block first).
  virtual Decoration product(const Decoration& a, int na, const Decoration& b, int nb) const;
  /// Human-readable decoration suffix, e.g. "a-b,b-b" for graph edges.
  virtual std::string describe(const Structure& x) const;
};

using SpeciesPtr = std::shared_ptr<const SpeciesDef>;

/// Validates and tags.
Structure make_structure(const SpeciesDef& s, FinPoset carrier, Decoration d);

/// The restriction X|K.  For directed species K must be convex; otherwise
/// ConvexityError reports a <= x <= b with x missing.
Structure restrict_structure(const SpeciesDef& s, const Structure& x, Mask keep);
Structure restrict_structure(const SpeciesDef& s, const Structure& x,
                             const std::vector<std::string>& keep);
/// Moves old position order[p] to position p.
Structure transport_structure(const SpeciesDef& s, const Structure& x, const std::vector<int>& order);
/// Replaces labels position by position.
Structure rename_structure(const Structure& x, std::vector<std::string> labels);
/// Reorders positions so that labels ascend.
Structure sort_structure(const SpeciesDef& s, const Structure& x);

canon::RelStructure rel_structure(const Structure& x);
/// "tag:hex", equal exactly for isomorphic structures.
std::string structure_key(const Structure& x);
/// Structure isomorphisms as iso[i] = position in y.
std::vector<std::vector<int>> structure_isomorphisms(const Structure& x, const Structure& y);
std::uint64_t automorphism_count(const Structure& x);
/// A representative with carrier labels "a", "b", ...  Throws ParseError.
Structure decode_key(const SpeciesDef& s, const std::string& key);
/// Carrier size encoded in a key, without decoding.
int key_size(const std::string& key);

/// Objects: decorations of `carrier`; morphisms: carrier automorphisms
/// carrying one decoration to another.
FinGroupoid enumerate_structures(const SpeciesDef& s, const FinPoset& carrier, const EnumBounds& b);

/// The structure on the disjoint union of carriers.  Throws NotMonoidalError.
Structure product_structure(const SpeciesDef& s, const Structure& x, const Structure& y);

/// Directed species supported on discrete posets with the same restriction.
SpeciesPtr embed_ordinary(SpeciesPtr ordinary);

SpeciesPtr sets();
SpeciesPtr graphs();
SpeciesPtr posets();
SpeciesPtr forests();
SpeciesPtr linear_orders();
SpeciesPtr double_posets();
SpeciesPtr acyclic_digraphs();

/// "set", "graph", "poset", "forest", "linear", "dposet", "dag" (plus a few
/// aliases).  Throws InvalidArgument.
SpeciesPtr species_by_name(const std::string& name);
std::vector<std::string> builtin_species_names();

/// One structure per isomorphism class with at most max_size elements,
/// sorted by (size, key).
std::vector<Structure> basis(const SpeciesDef& s, int max_size, const EnumBounds& b);

/// Carriers considered for n-element structures on the given labels: all
/// labelled posets for directed species, the discrete one otherwise, filtered
/// by supports().
std::vector<FinPoset> labelled_carriers(const SpeciesDef& s, const std::vector<std::string>& labels);

std::string describe(const SpeciesDef& s, const Structure& x);

}  // namespace dsp

#endif  // DSPECIES_SPECIES_HPP
