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
#include <random>
#include <vector>

#include "mdsteer/behavior.hpp"
#include "mdsteer/kernel.hpp"

namespace mdsteer {

/// Bob's unnormalized conditional states sigma_{a|x}, indexed (x, a) with
/// outcome index 0 meaning +1.
class Assemblage {
 public:
  using Elements = std::array<std::array<Matrix2c<double>, 2>, 2>;

  Assemblage();
  explicit Assemblage(const Elements& elements) : elements_(elements) {}

  static Assemblage checked(const Elements& elements, const Tolerances& tol = tolerances());

  const Matrix2c<double>& operator()(int x, int a) const { return elements_[x][a]; }
  Matrix2c<double>& operator()(int x, int a) { return elements_[x][a]; }

  /// Tr sigma_{a|x} = p(a|x).
  double marginal(int x, int a) const { return std::real(elements_[x][a].trace()); }

  /// Positivity of every element and sum_a Tr sigma_{a|x} = 1 for each x.
  /// Throws ValidationError, or NormalizationError for the normalization part.
  void validate(const Tolerances& tol = tolerances()) const;

 private:
  Elements elements_;
};

/// Rows: setting x1, x2. Columns: outcome +1, -1.
using EtaTable = Eigen::Matrix2d;

/// Discrete measurement-dependent local hidden state model.
struct MdLhsModel {
  /// p(lambda|x): row x, column lambda.
  Eigen::Matrix<double, 2, Eigen::Dynamic> p_lambda_given_x;
  /// p(a|x, lambda): one 2 x n block per setting, row a, column lambda.
  std::array<Eigen::Matrix<double, 2, Eigen::Dynamic>, 2> p_a_given_x_lambda;
  /// rho_{lambda|x}: states[x][lambda].
  std::array<std::vector<Matrix2c<double>>, 2> states;

  int lambda_count() const { return static_cast<int>(p_lambda_given_x.cols()); }

  /// Throws ValidationError on shape mismatch, negative or unnormalized
  /// distributions, or invalid hidden states.
  void validate(const Tolerances& tol = tolerances()) const;
};

/// Seeded random model with `lambdas` hidden values. p(lambda|x) differs
/// between the two settings; states are random mixed qubit states.
MdLhsModel random_mdlhs_model(std::uint64_t seed, int lambdas);

/// Random qubit density matrix (Hilbert-Schmidt measure).
template <class Urng>
Matrix2c<double> random_qubit_density(Urng& rng) {
  std::normal_distribution<double> normal;
  Matrix2c<double> g;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) g(i, j) = {normal(rng), normal(rng)};
  }
  Matrix2c<double> rho = g * g.adjoint();
  rho /= std::real(rho.trace());
  return rho;
}

/// sigma_{a|x} = Tr_A[(P_a^x (x) I) rho].
Assemblage assemblage_from_state(const TwoQubitState& state,
                                 const std::array<Direction, 2>& alice);

/// sigma_{a|x} = sum_lambda p(lambda|x) p(a|x lambda) rho_{lambda|x}.
Assemblage assemblage_from_mdlhs(const MdLhsModel& model);

/// p(ab|xy) = Tr[P_b^y sigma_{a|x}].
Behavior behavior_from_assemblage(const Assemblage& assemblage,
                                  const std::array<Direction, 2>& bob);

/// p(ab|xy) = sum_lambda p(lambda|x) p(a|x lambda) Tr[P_b^y rho_{lambda|x}].
Behavior mdlhv_behavior(const MdLhsModel& model, const std::array<Direction, 2>& bob);

/// Largest entrywise gap between behavior_from_assemblage(assemblage_from_mdlhs)
/// and mdlhv_behavior.
double mdlhv_decomposition_check(const MdLhsModel& model, const std::array<Direction, 2>& bob);

/// (1 - eta) gamma + eta sigma, elementwise in (a, x). Throws
/// NormalizationError when an outcome-dependent eta breaks normalization.
Assemblage mix_assemblages(const Assemblage& steerable, const Assemblage& mdlhs,
                           const EtaTable& eta, const Tolerances& tol = tolerances());

struct WeightParams {
  EtaTable eta;
  Eigen::VectorXd p_lambda_x1;
  Eigen::VectorXd p_lambda_x2;
};

/// sum_lambda [p(lambda|x1) - (eta^{-|x2} / eta^{-|x1}) p(lambda|x2)].
/// Signed; DomainError when eta^{-|x1} = 0.
double md_weight(const WeightParams& params, const Tolerances& tol = tolerances());

struct WeightLimits {
  double low;   // p(x1|lambda) = l
  double high;  // p(x1|lambda) = 1 - l
};

WeightLimits weight_limit_values(double l, double p_x1, double eta_ratio);

/// Upper bound on the weight under which the mixture stays steerable.
double weight_bound(double p_plus_x1, double p_plus_x2, const EtaTable& eta);

}  // namespace mdsteer
