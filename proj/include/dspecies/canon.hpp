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


#ifndef DSPECIES_CANON_HPP
#define DSPECIES_CANON_HPP

// Canonical labelling of small relational structures: n vertices carrying a
// few integer-valued binary relations and one global integer attribute.

#include <cstdint>
#include <string>
#include <vector>

namespace dsp::canon {

struct RelStructure {
  int n = 0;
  int global = 0;
  /// Each relation is an n*n row-major matrix with entries in 0..255.
  std::vector<std::vector<int>> relations;

  int at(std::size_t r, int i, int j) const {
    return relations[r][static_cast<std::size_t>(i * n + j)];
  }
  friend bool operator==(const RelStructure&, const RelStructure&) = default;
};

struct CanonicalForm {
  /// order[p] is the vertex placed at position p.
  std::vector<int> order;
  /// Byte encoding of the structure relabelled by `order`.
  std::string bytes;
};

/// Colour refinement followed by a pruned search over colour-respecting
/// orders.  Throws BoundExceeded above max_carrier_size().
CanonicalForm canonical_form(const RelStructure& s);

/// The structure with vertex order[p] moved to position p.
RelStructure permute(const RelStructure& s, const std::vector<int>& order);

/// All isomorphisms a -> b as maps iso[v] = image of v.
std::vector<std::vector<int>> isomorphisms(const RelStructure& a, const RelStructure& b);
std::vector<std::vector<int>> automorphisms(const RelStructure& s);
std::uint64_t automorphism_count(const RelStructure& s);

std::string encode(const RelStructure& s);
/// Inverse of encode.  Throws ParseError on malformed input.
RelStructure decode(const std::string& bytes);

std::string to_hex(const std::string& bytes);
std::string from_hex(const std::string& hex);

}  // namespace dsp::canon

#endif  // DSPECIES_CANON_HPP
