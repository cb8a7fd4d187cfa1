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


#ifndef DSPECIES_DECOMP_HPP
#define DSPECIES_DECOMP_HPP

// Truncated simplicial groupoids of layered structures, and the checkers for
// the simplicial identities, the decomposition-space axiom, the Segal
// condition, CULF maps, finiteness conditions and decalage.
//
// Level n is modelled on a fixed universe of labels: objects are structures
// whose carrier is a subset of the universe, together with an n-layering;
// morphisms out of an object are the injections of its carrier into the
// universe.  Free face maps restrict to literal subsets, so all simplicial
// identities hold on the nose.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "dspecies/groupoid.hpp"
#include "dspecies/simplex.hpp"
#include "dspecies/species.hpp"

namespace dsp {

struct BuildBounds {
  int levels = 3;  // truncation N
  int size = 3;    // largest carrier
  EnumBounds decoration;
  int universe = 0;         // universe size; 0 means `size`
  int universe_offset = 0;  // index of the first universe label

  int universe_size() const { return universe > 0 ? universe : size; }
};

/// Payload of an object.  Layered levels fill `level`; fat nerves fill
/// `chain` (subsets of the carrier, as masks over its positions).
struct Simplex {
  Structure structure;
  std::vector<int> level;
  std::vector<Mask> chain;

  friend bool operator==(const Simplex&, const Simplex&) = default;
};

class TruncatedSimplicialGroupoid;
using SimplicialPtr = std::shared_ptr<const TruncatedSimplicialGroupoid>;

class TruncatedSimplicialGroupoid {
 public:
  struct LevelData;

  int max_level() const { return static_cast<int>(levels_.size()) - 1; }
  GroupoidPtr level(int n) const;
  const Simplex& simplex(int n, int object) const;
  /// Object id of a payload, or -1.
  int find(int n, const Simplex& s) const;

  /// d_i : X_n -> X_{n-1}, 0 <= i <= n.
  const GroupoidFunctor& face(int n, int i) const;
  /// s_i : X_n -> X_{n+1}, 0 <= i <= n < N.
  const GroupoidFunctor& degeneracy(int n, int i) const;
  /// Test hook for mutation checks.
  GroupoidFunctor& mutable_face(int n, int i);

  /// theta^* : X_n -> X_m for theta : [m] -> [n], composed from the stored
  /// face and degeneracy functors.
  GroupoidFunctor apply(const simplex::DeltaMap& theta) const;

  const std::string& provenance() const { return provenance_; }
  const SpeciesPtr& species() const { return species_; }
  const BuildBounds& bounds() const { return bounds_; }

  /// Objects of X_n in the image of some degeneracy.
  std::vector<bool> degenerate(int n) const;

  friend struct LevelAccess;

 private:
  std::vector<std::shared_ptr<const LevelData>> levels_;
  std::vector<std::vector<GroupoidFunctor>> faces_;
  std::vector<std::vector<GroupoidFunctor>> degeneracies_;
  std::string provenance_;
  SpeciesPtr species_;
  BuildBounds bounds_;
};

/// X_k = pairs (structure with carrier in the universe, k-layering).
SimplicialPtr build(SpeciesPtr s, const BuildBounds& b);

enum class NerveVariant { kLower, kUpper };
/// Level k: structures with a chain of k+1 lower sets ending at the carrier
/// (kLower), or of k+1 upper sets starting at the carrier (kUpper, the nerve
/// of the opposite category).  On discrete carriers every subset qualifies,
/// which gives the nerve of all structure inclusions.
SimplicialPtr fat_nerve(SpeciesPtr s, const BuildBounds& b, NerveVariant v);

/// A level-wise functor commuting with faces and degeneracies.
struct SimplicialMap {
  SimplicialPtr source;
  SimplicialPtr target;
  std::vector<GroupoidFunctor> levels;

  int max_level() const { return static_cast<int>(levels.size()) - 1; }
  /// Name of the first face or degeneracy that fails to commute, or empty.
  std::string check_simplicial() const;
};

struct DecResult {
  SimplicialPtr dec;
  SimplicialMap dec_map;
};

/// Level k is X_{k+1} without d_0 and s_0; the dec map is d_0.
DecResult dec_bot(const SimplicialPtr& t);
/// Level k is X_{k+1} without the top face and degeneracy; the dec map is
/// the top face.
DecResult dec_top(const SimplicialPtr& t);

/// Forgets the decoration: from a build of any species into a build of
/// `target` on the same universe (posets for directed species, sets for
/// ordinary ones).  Throws InvalidArgument if an image is missing.
SimplicialMap projection(const SimplicialPtr& from, const SimplicialPtr& to);

enum class Verdict { kPass, kFail, kSkipped };
const char* to_string(Verdict v);

struct ReportEntry {
  std::string name;
  Verdict verdict = Verdict::kPass;
  std::optional<EquivalenceWitness> witness;
  std::string detail;
};

struct AxiomReport {
  std::string suite;
  std::vector<ReportEntry> entries;

  bool passed() const;
  int count(Verdict v) const;
  const ReportEntry* first_failure() const;
  /// {"suite":..., "squares":[{"square","verdict","witness"}...]}
  std::string to_json() const;
};

AxiomReport check_simplicial_identities(const TruncatedSimplicialGroupoid& t);
/// Every identity-extension square with corners <= N + 1; those needing a
/// level above N are reported as skipped.
AxiomReport check_decomposition(const TruncatedSimplicialGroupoid& t);
/// The squares d_n, d_0 over d_{n-1}, d_0 on X_n for 2 <= n <= N.
AxiomReport check_segal(const TruncatedSimplicialGroupoid& t);
/// Naturality squares against every generic map within the truncation.
/// Throws InvalidArgument if the map is not simplicial.
AxiomReport check_culf(const SimplicialMap& f);
/// Completeness, local finiteness, local discreteness and locally finite
/// length (the last one for n <= N).
AxiomReport check_finiteness(const TruncatedSimplicialGroupoid& t);
/// Dec_bot(build) against the lower fat nerve and Dec_top(build) against the
/// upper one, for levels <= b.levels.
AxiomReport check_decalage_formulas(SpeciesPtr s, const BuildBounds& b);
/// Disjoint union of layered structures as a map X x X -> X, checked to be
/// simplicial and CULF against the long-edge maps, for k <= max_k.
AxiomReport check_monoidal(SpeciesPtr s, int max_k, int size, const EnumBounds& e);

/// theta^* computed directly on payloads (free part restricts, generic part
/// pushes the layering or reindexes the chain), for cross-checking apply().
GroupoidFunctor direct_map(const TruncatedSimplicialGroupoid& t, const simplex::DeltaMap& theta);

}  // namespace dsp

#endif  // DSPECIES_DECOMP_HPP
