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

// Hidden-variable bias on Alice's setting choice: two hidden values with
// p(lambda1) = sin^2(delta), p(lambda2) = cos^2(delta), and
// p(x1|lambda1) = cos^2(theta), p(x1|lambda2) = cos^2(phi).

#include <Eigen/Core>

namespace mdsteer {

struct BiasModel {
  double theta_lambda = 0.0;
  double phi_lambda = 0.0;
  double delta_lambda = 0.0;
};

struct SettingMarginals {
  /// p(lambda), one entry per hidden value.
  Eigen::VectorXd p_lambda;
  /// p(x|lambda): row lambda, column setting.
  Eigen::MatrixX2d p_x_given_lambda;
  double p_x1 = 0.0;
  double p_x2 = 0.0;
};

/// p(x) = sum_lambda p(x|lambda) p(lambda).
SettingMarginals marginal_setting_prob(const BiasModel& model);

/// Same for an arbitrary number of hidden values. Throws ValidationError on
/// unnormalized inputs.
SettingMarginals marginal_setting_prob(const Eigen::VectorXd& p_lambda,
                                       const Eigen::MatrixX2d& p_x_given_lambda);

/// True iff every p(x|lambda) lies in [l, 1 - l]. Rows must sum to one.
bool md_bound_check(const Eigen::MatrixX2d& p_x_given_lambda, double l);

struct ConstraintReport {
  SettingMarginals marginals;
  /// p(x|lambda) identical across hidden values.
  bool measurement_independent = false;
  /// Largest l for which md_bound_check passes.
  double max_l = 0.0;
  /// p(x1) = 0.5 within the tolerance while measurement dependent.
  bool masquerades_free_choice = false;
};

ConstraintReport constraint_report(const BiasModel& model, double free_choice_tol = 0.01);
ConstraintReport constraint_report(const Eigen::VectorXd& p_lambda,
                                   const Eigen::MatrixX2d& p_x_given_lambda,
                                   double free_choice_tol = 0.01);

}  // namespace mdsteer
