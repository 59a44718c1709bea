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
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include "mdsteer/behavior.hpp"

namespace mdsteer {

/// State cos(theta)|00> - sin(theta)|11> with Alice directions n1, n2 and Bob
/// directions m1, m2.
struct QuantumAnsatz {
  double theta = 0.0;
  std::array<Direction, 4> directions;

  MeasurementSettings settings() const {
    return {{directions[0], directions[1]}, {directions[2], directions[3]}};
  }
};

struct OptimizerConfig {
  int restarts = 20;
  int grid_density = 12;
  double tol = 1e-7;
  std::uint64_t seed = 0;
  /// Search all of the Bloch sphere instead of the x-z plane.
  bool full_sphere = false;
  /// Keep Bob's two directions orthogonal (mutually unbiased measurements).
  bool orthogonal_bob = false;
  int max_iterations = 4000;
  unsigned workers = 0;
};

struct CurvePoint {
  double p = 0.0;
  double value = 0.0;
  std::optional<double> delta;  // value - local_bound(p)
  std::optional<double> rate;   // randomness rate of the behavior
  std::optional<QuantumAnsatz> argmax;
};

/// md_operator of the ansatz's correlators.
double quantum_value(const QuantumAnsatz& ansatz, double p);

/// Number of free parameters the search uses under `config`.
int ansatz_dimension(const OptimizerConfig& config);

/// Maps a parameter vector (theta first, then angles) onto an ansatz.
/// theta is clamped into [0, pi/2].
QuantumAnsatz decode_ansatz(const Eigen::VectorXd& params, const OptimizerConfig& config);

/// Best value found by grid search followed by simplex refinement from
/// several starts. Deterministic for a fixed config.
CurvePoint quantum_max(double p, const OptimizerConfig& config = {});

enum class CurveKind { kLocal, kPrBox, kQuantum, kTilted, kRandomness };

struct CurveParams {
  double delta = std::numbers::pi / 6;
  double gamma = 0.0;
  OptimizerConfig optimizer;
};

/// One point per grid entry.
///   local      value = 4p(1-p)
///   prbox      value = 2 sqrt(2 - 4p(1-p)), delta
///   quantum    value = quantum_max, delta, argmax
///   tilted     value = tilted closed form at params.delta, delta
///   randomness value = operator on the randomness behavior at params.gamma,
///              delta, rate
std::vector<CurvePoint> curve(CurveKind kind, const std::vector<double>& p_grid,
                              const CurveParams& params = {});

/// n evenly spaced points from lo to hi inclusive.
std::vector<double> linear_grid(double lo, double hi, int steps);

}  // namespace mdsteer
