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

#include <Eigen/Core>
#include <array>

#include "mdsteer/kernel.hpp"
#include "mdsteer/tolerance.hpp"

namespace mdsteer {

/// Outcome +1 is stored at index 0, outcome -1 at index 1.
constexpr int outcome_index(int outcome) { return outcome == 1 ? 0 : 1; }
constexpr int outcome_value(int index) { return index == 0 ? 1 : -1; }

/// (<x1y1>, <x1y2>, <x2y1>, <x2y2>).
using CorrelatorVector = Eigen::Vector4d;

enum CorrelatorIndex : int { kX1Y1 = 0, kX1Y2 = 1, kX2Y1 = 2, kX2Y2 = 3 };

/// Two projective measurements per party.
struct MeasurementSettings {
  std::array<Direction, 2> alice;
  std::array<Direction, 2> bob;
};

/// Conditional distribution p(ab|xy) for two settings and two outcomes per
/// party. Every index is zero-based; outcome index 0 means +1.
class Behavior {
 public:
  using Table = std::array<double, 16>;

  Behavior() { table_.fill(0.0); }
  explicit Behavior(const Table& table) : table_(table) {}

  /// Validated construction.
  static Behavior checked(const Table& table, const Tolerances& tol = tolerances());
  static Behavior uniform();

  static constexpr int flat_index(int x, int y, int a, int b) {
    return ((x * 2 + y) * 2 + a) * 2 + b;
  }

  double operator()(int x, int y, int a, int b) const { return table_[flat_index(x, y, a, b)]; }
  double& operator()(int x, int y, int a, int b) { return table_[flat_index(x, y, a, b)]; }

  const Table& table() const { return table_; }

  /// p(a|x) computed under Bob's setting y.
  double alice_marginal(int x, int y, int a) const;
  /// p(b|y) computed under Alice's setting x.
  double bob_marginal(int x, int y, int b) const;

  /// Throws ValidationError naming the first offending entry or setting pair.
  void validate(const Tolerances& tol = tolerances()) const;

 private:
  Table table_;
};

struct NoSignallingReport {
  double max_deviation = 0.0;
  bool pass = true;
};

/// p(ab|xy) = Tr[(P_a^x (x) P_b^y) rho] with P_a^x = (I + a n.sigma)/2.
Behavior behavior_from_quantum(const TwoQubitState& state, const MeasurementSettings& settings);

/// <xy> = sum_ab ab p(ab|xy).
CorrelatorVector correlators(const Behavior& behavior);

/// Correlators straight from the state, bypassing the probability table.
CorrelatorVector quantum_correlators(const TwoQubitState& state, const MeasurementSettings& settings);

/// PR box: ab = -1 only for x = y = 2.
Behavior pr_box();

/// Settings of the tilted extremal family, 0 < delta <= pi/6.
MeasurementSettings tilted_settings(double delta);

/// (|00> + |11>)/sqrt(2) measured with tilted_settings(delta).
Behavior tilted_behavior(double delta);

/// Settings of the randomness family, 0 <= gamma <= pi/12.
MeasurementSettings randomness_settings(double gamma);

Behavior randomness_behavior(double gamma);

NoSignallingReport no_signalling_check(const Behavior& behavior,
                                       const Tolerances& tol = tolerances());

/// e11 + e12 + e21 - e22.
double chsh_value(const Behavior& behavior);
double chsh_value(const CorrelatorVector& c);

}  // namespace mdsteer
