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

#include "mdsteer/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mdsteer/error.hpp"
#include "mdsteer/tolerance.hpp"

namespace mdsteer {
namespace {

constexpr double kIndependenceTol = 1e-12;

void check_rows(const Eigen::MatrixX2d& p_x_given_lambda) {
  const double tol = tolerances().normalization;
  for (Eigen::Index l = 0; l < p_x_given_lambda.rows(); ++l) {
    const auto row = p_x_given_lambda.row(l);
    if (!row.allFinite() || row.minCoeff() < -tol || std::abs(row.sum() - 1.0) > tol) {
      throw ValidationError("p(x|lambda" + std::to_string(l + 1) +
                            ") is not a probability distribution");
    }
  }
}

}  // namespace

SettingMarginals marginal_setting_prob(const Eigen::VectorXd& p_lambda,
                                       const Eigen::MatrixX2d& p_x_given_lambda) {
  if (p_lambda.size() != p_x_given_lambda.rows() || p_lambda.size() == 0) {
    throw ValidationError("p(lambda) and p(x|lambda) disagree on the number of hidden values");
  }
  const double tol = tolerances().normalization;
  if (!p_lambda.allFinite() || p_lambda.minCoeff() < -tol ||
      std::abs(p_lambda.sum() - 1.0) > tol) {
    throw ValidationError("p(lambda) is not a probability distribution");
  }
  check_rows(p_x_given_lambda);
  SettingMarginals out;
  out.p_lambda = p_lambda;
  out.p_x_given_lambda = p_x_given_lambda;
  const Eigen::RowVector2d px = p_lambda.transpose() * p_x_given_lambda;
  out.p_x1 = px(0);
  out.p_x2 = 1.0 - px(0);
  return out;
}

SettingMarginals marginal_setting_prob(const BiasModel& model) {
  const auto sq = [](double v) { return v * v; };
  Eigen::VectorXd p_lambda(2);
  p_lambda << sq(std::sin(model.delta_lambda)), sq(std::cos(model.delta_lambda));
  Eigen::MatrixX2d p_x(2, 2);
  p_x << sq(std::cos(model.theta_lambda)), sq(std::sin(model.theta_lambda)),
      sq(std::cos(model.phi_lambda)), sq(std::sin(model.phi_lambda));
  return marginal_setting_prob(p_lambda, p_x);
}

bool md_bound_check(const Eigen::MatrixX2d& p_x_given_lambda, double l) {
  if (!(l >= 0.0 && l <= 0.5)) throw ValidationError("l must lie in [0, 0.5]");
  check_rows(p_x_given_lambda);
  return p_x_given_lambda.minCoeff() >= l && p_x_given_lambda.maxCoeff() <= 1.0 - l;
}

ConstraintReport constraint_report(const Eigen::VectorXd& p_lambda,
                                   const Eigen::MatrixX2d& p_x_given_lambda,
                                   double free_choice_tol) {
  ConstraintReport r;
  r.marginals = marginal_setting_prob(p_lambda, p_x_given_lambda);
  const auto& px = r.marginals.p_x_given_lambda;
  r.measurement_independent = true;
  for (Eigen::Index l = 1; l < px.rows(); ++l) {
    if ((px.row(l) - px.row(0)).cwiseAbs().maxCoeff() > kIndependenceTol) {
      r.measurement_independent = false;
    }
  }
  // Each row sums to one, so the smallest entry is also 1 - largest.
  r.max_l = std::clamp(px.minCoeff(), 0.0, 0.5);
  r.masquerades_free_choice =
      !r.measurement_independent && std::abs(r.marginals.p_x1 - 0.5) <= free_choice_tol;
  return r;
}

ConstraintReport constraint_report(const BiasModel& model, double free_choice_tol) {
  const auto m = marginal_setting_prob(model);
  return constraint_report(m.p_lambda, m.p_x_given_lambda, free_choice_tol);
}

}  // namespace mdsteer
