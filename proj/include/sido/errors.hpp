// Copyright 2026 The sido Authors
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

#pragma once

#include <stdexcept>
#include <string>

#include <nlohmann/json.hpp>

namespace sido {

/// Raised when an argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Brute-force enumeration refused because the candidate space is too large.
class SizeCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A failed exact check. `witness` pins down where it failed (an edge, an
/// assignment, a bag path) so callers can report it verbatim.
class CheckFailure : public std::runtime_error {
 public:
  CheckFailure(const std::string& what, nlohmann::json witness)
      : std::runtime_error(what), witness_(std::move(witness)) {}

  const nlohmann::json& witness() const noexcept { return witness_; }

 private:
  nlohmann::json witness_;
};

/// Two distributions disagree on the marginal of their shared indices.
class MarginalMismatch : public CheckFailure {
 public:
  using CheckFailure::CheckFailure;
};

/// minimum_covering_subfamily was asked for a set that already sits inside one
/// bag; the caller is expected to descend into that bag instead.
class ContainedInSingleBag : public InvalidArgument {
 public:
  ContainedInSingleBag(const std::string& what, int bag)
      : InvalidArgument(what), bag_(bag) {}

  /// Lowest-index bag containing the whole set.
  int bag() const noexcept { return bag_; }

 private:
  int bag_;
};

}  // namespace sido
