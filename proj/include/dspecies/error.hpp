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

#ifndef DSPECIES_ERROR_HPP
#define DSPECIES_ERROR_HPP

#include <stdexcept>
#include <string>

namespace dsp {

// Numeric values match the C API status codes and the CLI exit codes.
enum class ErrorCode : int {
  kParse = 2,
  kValidation = 3,
  kNotConnected = 4,
  kInvalidArgument = 5,
  kBoundExceeded = 6,
  kNotMonoidal = 7,
  kInternal = 9,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(ErrorCode::kParse, what) {}
};

class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what)
      : Error(ErrorCode::kValidation, what) {}
};

/// Raised when a directed species is restricted to a non-convex subset.
/// Carries the offending triple a <= x <= b with a, b kept and x dropped.
class ConvexityError : public ValidationError {
 public:
  ConvexityError(std::string lower, std::string middle, std::string upper);
  const std::string& lower() const noexcept { return lower_; }
  const std::string& middle() const noexcept { return middle_; }
  const std::string& upper() const noexcept { return upper_; }

 private:
  std::string lower_, middle_, upper_;
};

class NotConnectedError : public Error {
 public:
  explicit NotConnectedError(const std::string& what)
      : Error(ErrorCode::kNotConnected, what) {}
};

class NotMonoidalError : public Error {
 public:
  explicit NotMonoidalError(const std::string& what)
      : Error(ErrorCode::kNotMonoidal, what) {}
};

class InvalidArgument : public Error {
 public:
  explicit InvalidArgument(const std::string& what)
      : Error(ErrorCode::kInvalidArgument, what) {}
};

class BoundExceeded : public Error {
 public:
  explicit BoundExceeded(const std::string& what)
      : Error(ErrorCode::kBoundExceeded, what) {}
};

/// Largest carrier size accepted by canonical labelling and enumeration.
/// Defaults to 10; the DSPECIES_MAX_SIZE environment variable overrides it.
int max_carrier_size();

}  // namespace dsp

#endif  // DSPECIES_ERROR_HPP
