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

#include "mdsteer/inequality.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "mdsteer/error.hpp"

namespace mdsteer {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRangeSlack = 1e-12;

}  // namespace

void check_md_parameter(double p) {
  if (!(p >= 0.0 && p <= 0.5)) {
    throw DomainError("measurement dependence parameter must lie in [0, 0.5], got " +
                      std::to_string(p));
  }
}

double md_operator(const CorrelatorVector& c, double p) {
  check_md_parameter(p);
  const double q = 1.0 - p;
  const Eigen::Vector2d sum(p * c(kX1Y1) + q * c(kX2Y1), p * c(kX1Y2) + q * c(kX2Y2));
  const Eigen::Vector2d diff(p * c(kX1Y1) - q * c(kX2Y1), p * c(kX1Y2) - q * c(kX2Y2));
  return std::sqrt(sum.squaredNorm()) + std::sqrt(diff.squaredNorm());
}

double local_bound(double p) {
  check_md_parameter(p);
  return 4.0 * p * (1.0 - p);
}

double violation(const CorrelatorVector& c, double p) { return md_operator(c, p) - local_bound(p); }

double pr_closed_form(double p) {
  check_md_parameter(p);
  return 2.0 * std::sqrt(2.0 - 4.0 * p * (1.0 - p));
}

double tilted_closed_form(double delta, double p) {
  check_md_parameter(p);
  if (!(delta > 0.0 && delta <= kPi / 6 + kRangeSlack)) {
    throw DomainError("tilt angle must lie in (0, pi/6], got " + std::to_string(delta));
  }
  const double c2 = std::cos(delta) * std::cos(delta);
  const double s = std::sin(delta);
  const double pm1 = p - 1.0;
  const double first = 2.0 * pm1 * s + p;
  const double second = p - 2.0 * pm1 * s;
  return std::sqrt(c2 * (first * first + pm1 * pm1)) +
         std::sqrt(c2 * (second * second + pm1 * pm1));
}

double tilted_bell_value(const CorrelatorVector& c, double delta) {
  const double s = std::sin(delta);
  const double c2 = std::cos(2.0 * delta);
  if (s == 0.0 || std::abs(c2) < 1e-15) {
    throw DomainError("tilted Bell expression undefined at delta = " + std::to_string(delta));
  }
  return c(kX1Y1) + (c(kX1Y2) + c(kX2Y1)) / s - c(kX2Y2) / c2;
}

double binary_entropy(double q) {
  if (!(q >= 0.0 && q <= 1.0)) throw DomainError("binary entropy argument outside [0, 1]");
  double h = 0.0;
  if (q > 0.0) h -= q * std::log2(q);
  if (q < 1.0) h -= (1.0 - q) * std::log2(1.0 - q);
  return h;
}

double randomness_entropy_argument(double gamma, const Tolerances& tol) {
  if (!(gamma >= 0.0 && gamma <= kPi / 12 + kRangeSlack)) {
    throw DomainError("randomness angle must lie in [0, pi/12], got " + std::to_string(gamma));
  }
  const double s = std::sin(3.0 * gamma) + 3.0 * std::cos(gamma + kPi / 6);
  double arg = -s / (2.0 * std::sqrt(2.0));
  if (std::abs(arg) > 1.0) {
    if (std::abs(arg) - 1.0 > tol.arccos_clamp) {
      throw DomainError("arccos argument " + std::to_string(arg) + " outside [-1, 1]");
    }
    arg = std::copysign(1.0, arg);
  }
  const double q =
      0.5 + s / 2.0 - 3.0 / std::sqrt(2.0) * std::cos(std::acos(arg) / 3.0);
  // q is 0.5 at gamma = 0 up to rounding; keep it inside the entropy domain.
  if (q < 0.0 && q > -tol.arccos_clamp) return 0.0;
  if (q > 1.0 && q < 1.0 + tol.arccos_clamp) return 1.0;
  return q;
}

double randomness_rate(double gamma, const Tolerances& tol) {
  return 1.0 + binary_entropy(randomness_entropy_argument(gamma, tol));
}

}  // namespace mdsteer
