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

#include <string_view>

namespace mdsteer {

/// Numerical slack used by every validity check in the library.
struct Tolerances {
  double equality = 1e-12;       // unit norms, Hermiticity, trace of states
  double psd = 1e-10;            // allowed negative eigenvalue
  double normalization = 1e-10;  // probability sums
  double nonnegativity = 1e-12;  // individual probabilities
  double no_signalling = 1e-9;
  double arccos_clamp = 1e-12;
};

/// Parses an override string ("1e-9" or "psd=1e-9,equality=1e-13").
/// Throws ValidationError on unknown keys or malformed numbers.
Tolerances parse_tolerances(std::string_view text, Tolerances base = {});

/// Process-wide defaults, read once from MDSTEER_TOL when set.
const Tolerances& tolerances();

}  // namespace mdsteer
