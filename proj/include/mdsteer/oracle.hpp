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

// Brute-force check of the measurement-dependent bound from extremal
// hidden-variable strategies: Alice answers deterministically (type chi),
// Bob holds a pure state whose outcome biases trace an ellipse in xi.

#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include "mdsteer/behavior.hpp"

namespace mdsteer {

struct ExtremalStrategy {
  /// 1: (+,+), 2: (-,-), 3: (+,-), 4: (-,+) for Alice's answers to (x1, x2).
  int chi = 1;
  /// Position on Bob's ellipse.
  double xi = 0.0;
  /// Overlap angle of Bob's measurements; pi/4 means mutually unbiased.
  double beta = std::numbers::pi / 4;
  /// p(x1|chi xi) and p(x2|chi xi).
  double p1 = 0.5;
  double p2 = 0.5;

  /// p1 = 1 - p, p2 = p.
  static ExtremalStrategy with_md_parameter(int chi, double xi, double p,
                                            double beta = std::numbers::pi / 4);

  /// Throws ValidationError on a bad chi, beta outside [0, pi/2] or p1 + p2 != 1.
  void validate() const;
};

/// beta = arctan(sqrt(1 - mu) / sqrt(mu)) for mu = Tr[P_+^{y1} P_+^{y2}].
double beta_from_overlap(double mu);

/// Tr[P_+^{y1} P_+^{y2}] = (1 + m1.m2) / 2 for projective qubit measurements.
double bob_overlap(const Direction& y1, const Direction& y2);

/// Column chi of the extremal correlator table. Entries can reach 2 in
/// magnitude because of the 1/p(xy) reweighting.
CorrelatorVector extremal_correlators(const ExtremalStrategy& s);

struct StrategyMixture {
  std::vector<std::pair<ExtremalStrategy, double>> components;

  /// Weights non-negative and summing to one; every strategy valid.
  void validate() const;
};

CorrelatorVector mixture_correlators(const StrategyMixture& m);

/// sqrt(alpha1) + sqrt(alpha2) including the cos(2 beta) cross terms.
double general_beta_operator(const CorrelatorVector& c, double p1, double p2, double beta);

/// 4 p1 p2 sin(2 beta).
double general_beta_bound(double p1, double p2, double beta);

/// Equal mix of chi1 and chi3 at xi = -pi/4; meets 4p(1-p) with equality.
StrategyMixture saturating_mixture(double p);

struct SweepConfig {
  int grid_points = 720;
  int max_components = 6;
  unsigned workers = 0;  // 0: hardware concurrency
};

/// Mixture number `index` of a sweep seeded with `seed`.
StrategyMixture random_mixture(std::uint64_t seed, std::uint64_t index, double p, double beta,
                               const SweepConfig& config = {});

struct SweepReport {
  double p = 0.0;
  std::int64_t samples = 0;
  double max_value = 0.0;
  double bound = 0.0;
  bool pass = false;
  std::uint64_t seed = 0;
  /// md_operator of saturating_mixture(p).
  double saturation = 0.0;
};

/// Samples random mixtures plus every pure grid strategy and reports the
/// largest md_operator value against 4p(1-p). Requires 0 < p <= 0.5 and
/// samples >= 1.
SweepReport bound_sweep(double p, std::int64_t samples, std::uint64_t seed,
                        const SweepConfig& config = {});

}  // namespace mdsteer
