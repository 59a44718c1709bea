// Copyright 2026 The mdsteer Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace mdsteer {

/// Input violates a precondition (non-unit direction, unnormalized model, ...).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A numeric argument lies outside the domain where a formula is defined.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Input file or document is structurally malformed.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A mixture of assemblages broke the per-setting normalization.
class NormalizationError : public ValidationError {
 public:
  NormalizationError(int setting, double total)
      : ValidationError("assemblage normalization violated for x" +
                        std::to_string(setting + 1) + ": sum of traces = " +
                        std::to_string(total)),
        setting_(setting),
        total_(total) {}

  /// Zero-based setting index.
  int setting() const noexcept { return setting_; }
  double total() const noexcept { return total_; }

 private:
  int setting_;
  double total_;
};

}  // namespace mdsteer
