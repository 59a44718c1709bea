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

#include "mdsteer/behavior.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "mdsteer/error.hpp"

namespace mdsteer {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRangeSlack = 1e-12;

std::string entry_name(int x, int y, int a, int b) {
  std::ostringstream os;
  os << "[" << x << "][" << y << "][" << a << "][" << b << "]";
  return os.str();
}

}  // namespace

Behavior Behavior::checked(const Table& table, const Tolerances& tol) {
  Behavior b(table);
  b.validate(tol);
  return b;
}

Behavior Behavior::uniform() {
  Table t;
  t.fill(0.25);
  return Behavior(t);
}

double Behavior::alice_marginal(int x, int y, int a) const {
  return (*this)(x, y, a, 0) + (*this)(x, y, a, 1);
}

double Behavior::bob_marginal(int x, int y, int b) const {
  return (*this)(x, y, 0, b) + (*this)(x, y, 1, b);
}

void Behavior::validate(const Tolerances& tol) const {
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      double total = 0.0;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const double v = (*this)(x, y, a, b);
          if (!std::isfinite(v) || v < -tol.nonnegativity) {
            throw ValidationError("invalid probability at " + entry_name(x, y, a, b) +
                                  ": " + std::to_string(v));
          }
          total += v;
        }
      }
      if (std::abs(total - 1.0) > tol.normalization) {
        throw ValidationError("probabilities for setting pair [" + std::to_string(x) +
                              "][" + std::to_string(y) + "] sum to " +
                              std::to_string(total));
      }
    }
  }
}

Behavior behavior_from_quantum(const TwoQubitState& state, const MeasurementSettings& settings) {
  Behavior out;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < 2; ++a) {
        const Matrix2c<double> pa = projector(settings.alice[x], outcome_value(a));
        for (int b = 0; b < 2; ++b) {
          const Matrix2c<double> pb = projector(settings.bob[y], outcome_value(b));
          const Matrix4c<double> joint = tensor(pa, pb);
          // Clip rounding noise like -1e-17 so the table stays non-negative.
          out(x, y, a, b) = std::max(0.0, expectation(state, joint));
        }
      }
    }
  }
  return out;
}

CorrelatorVector correlators(const Behavior& behavior) {
  CorrelatorVector c;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      c(2 * x + y) = behavior(x, y, 0, 0) + behavior(x, y, 1, 1) - behavior(x, y, 0, 1) -
                     behavior(x, y, 1, 0);
    }
  }
  return c;
}

CorrelatorVector quantum_correlators(const TwoQubitState& state,
                                     const MeasurementSettings& settings) {
  CorrelatorVector c;
  for (int x = 0; x < 2; ++x) {
    const Matrix2c<double> ax = pauli_observable(settings.alice[x]);
    for (int y = 0; y < 2; ++y) {
      c(2 * x + y) = expectation(state, tensor(ax, pauli_observable(settings.bob[y])));
    }
  }
  return c;
}

Behavior pr_box() {
  Behavior out;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      const int product = (x == 1 && y == 1) ? -1 : 1;
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          out(x, y, a, b) = outcome_value(a) * outcome_value(b) == product ? 0.5 : 0.0;
        }
      }
    }
  }
  return out;
}

MeasurementSettings tilted_settings(double delta) {
  if (!(delta > 0.0 && delta <= kPi / 6 + kRangeSlack)) {
    throw ValidationError("tilt angle must lie in (0, pi/6], got " + std::to_string(delta));
  }
  const double s = std::sin(delta);
  const double c = std::cos(delta);
  return MeasurementSettings{
      {Direction::make(0, 0, 1), Direction::make(c, 0, -s)},
      {Direction::make(1, 0, 0), Direction::make(-s, 0, c)},
  };
}

Behavior tilted_behavior(double delta) {
  return behavior_from_quantum(maximally_entangled_plus<double>(), tilted_settings(delta));
}

MeasurementSettings randomness_settings(double gamma) {
  if (!(gamma >= 0.0 && gamma <= kPi / 12 + kRangeSlack)) {
    throw ValidationError("randomness angle must lie in [0, pi/12], got " +
                          std::to_string(gamma));
  }
  const double a2 = 2 * kPi / 3 - 2 * gamma;
  const double b2 = kPi / 6 + gamma;
  return MeasurementSettings{
      {Direction::make(0, 0, 1), Direction::make(std::sin(a2), 0, std::cos(a2))},
      {Direction::make(std::cos(3 * gamma), 0, std::sin(3 * gamma)),
       Direction::make(-std::sin(b2), 0, std::cos(b2))},
  };
}

Behavior randomness_behavior(double gamma) {
  return behavior_from_quantum(maximally_entangled_plus<double>(), randomness_settings(gamma));
}

NoSignallingReport no_signalling_check(const Behavior& behavior, const Tolerances& tol) {
  double dev = 0.0;
  for (int k = 0; k < 2; ++k) {
    for (int o = 0; o < 2; ++o) {
      dev = std::max(dev, std::abs(behavior.alice_marginal(k, 0, o) -
                                   behavior.alice_marginal(k, 1, o)));
      dev = std::max(dev, std::abs(behavior.bob_marginal(0, k, o) -
                                   behavior.bob_marginal(1, k, o)));
    }
  }
  return {dev, dev <= tol.no_signalling};
}

double chsh_value(const CorrelatorVector& c) {
  return c(kX1Y1) + c(kX1Y2) + c(kX2Y1) - c(kX2Y2);
}

double chsh_value(const Behavior& behavior) { return chsh_value(correlators(behavior)); }

}  // namespace mdsteer
