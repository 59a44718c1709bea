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

#include "mdsteer/behavior.hpp"
#include "mdsteer/tolerance.hpp"

namespace mdsteer {

/// Measurement-dependence parameter p in [0, 0.5] and the setting-probability
/// floor l in [0, 0.5]. p = 0.5 is free choice.
struct MdParams {
  double p = 0.5;
  double l = 0.5;
};

/// Throws DomainError unless 0 <= p <= 0.5.
void check_md_parameter(double p);

/// sqrt(alpha1) + sqrt(alpha2) with
///   alpha1 = (p e11 + (1-p) e21)^2 + (p e12 + (1-p) e22)^2
///   alpha2 = (p e11 - (1-p) e21)^2 + (p e12 - (1-p) e22)^2.
double md_operator(const CorrelatorVector& c, double p);

/// 4p(1-p).
double local_bound(double p);

/// md_operator - local_bound, signed.
double violation(const CorrelatorVector& c, double p);

/// 2 sqrt(2 - 4p(1-p)).
double pr_closed_form(double p);

/// Closed form of md_operator on the tilted family, 0 < delta <= pi/6.
double tilted_closed_form(double delta, double p);

/// <A0B0> + (<A0B1> + <A1B0>)/sin(delta) - <A1B1>/cos(2 delta).
double tilted_bell_value(const CorrelatorVector& c, double delta);

/// h(q) = -q log2 q - (1-q) log2(1-q).
double binary_entropy(double q);

/// Argument of the binary entropy inside randomness_rate.
double randomness_entropy_argument(double gamma, const Tolerances& tol = tolerances());

/// Random bits per round certified by the randomness family, 0 <= gamma <= pi/12.
double randomness_rate(double gamma, const Tolerances& tol = tolerances());

}  // namespace mdsteer
