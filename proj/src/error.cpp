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

#include "dspecies/error.hpp"

#include <cstdlib>

namespace dsp {

ConvexityError::ConvexityError(std::string lower, std::string middle,
                               std::string upper)
    : ValidationError("subset is not convex: " + lower + " <= " + middle +
                      " <= " + upper + " with " + middle + " missing"),
      lower_(std::move(lower)),
      middle_(std::move(middle)),
      upper_(std::move(upper)) {}

int max_carrier_size() {
  if (const char* env = std::getenv("DSPECIES_MAX_SIZE")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v <= 16) return static_cast<int>(v);
  }
  return 10;
}

}  // namespace dsp
