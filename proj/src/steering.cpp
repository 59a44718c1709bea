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

#include "mdsteer/steering.hpp"

#include <cmath>
#include <random>
#include <string>

#include "mdsteer/error.hpp"

namespace mdsteer {
namespace {

void check_distribution(const Eigen::Ref<const Eigen::VectorXd>& dist, const std::string& what,
                        const Tolerances& tol) {
  if (!dist.allFinite() || (dist.size() > 0 && dist.minCoeff() < -tol.nonnegativity)) {
    throw ValidationError(what + " has a negative or non-finite entry");
  }
  if (std::abs(dist.sum() - 1.0) > tol.normalization) {
    throw ValidationError(what + " sums to " + std::to_string(dist.sum()));
  }
}

void check_eta_open(const EtaTable& eta) {
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) {
      if (!(eta(x, a) > 0.0 && eta(x, a) < 1.0)) {
        throw ValidationError("eta entries must lie in (0, 1)");
      }
    }
  }
}

}  // namespace

Assemblage::Assemblage() {
  for (auto& row : elements_) row.fill(Matrix2c<double>::Zero());
}

Assemblage Assemblage::checked(const Elements& elements, const Tolerances& tol) {
  Assemblage out(elements);
  out.validate(tol);
  return out;
}

void Assemblage::validate(const Tolerances& tol) const {
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) {
      if (!elements_[x][a].allFinite() || !is_psd(elements_[x][a], tol.psd, tol.equality)) {
        throw ValidationError("assemblage element (x" + std::to_string(x + 1) + ", a=" +
                              std::to_string(outcome_value(a)) +
                              ") is not positive semidefinite");
      }
    }
    const double total = marginal(x, 0) + marginal(x, 1);
    if (std::abs(total - 1.0) > tol.normalization) throw NormalizationError(x, total);
  }
}

void MdLhsModel::validate(const Tolerances& tol) const {
  const int n = lambda_count();
  if (n < 1) throw ValidationError("model needs at least one hidden value");
  for (int x = 0; x < 2; ++x) {
    const std::string sx = "x" + std::to_string(x + 1);
    check_distribution(p_lambda_given_x.row(x).transpose(), "p(lambda|" + sx + ")", tol);
    if (p_a_given_x_lambda[x].cols() != n || static_cast<int>(states[x].size()) != n) {
      throw ValidationError("model arrays disagree on the number of hidden values");
    }
    for (int l = 0; l < n; ++l) {
      const std::string sl = std::to_string(l);
      check_distribution(p_a_given_x_lambda[x].col(l), "p(a|" + sx + ", lambda" + sl + ")",
                         tol);
      const auto& rho = states[x][l];
      if (!rho.allFinite() || !is_psd(rho, tol.psd, tol.equality) ||
          std::abs(std::real(rho.trace()) - 1.0) > tol.normalization) {
        throw ValidationError("rho(lambda" + sl + "|" + sx + ") is not a density matrix");
      }
    }
  }
}

MdLhsModel random_mdlhs_model(std::uint64_t seed, int lambdas) {
  if (lambdas < 1) throw ValidationError("model needs at least one hidden value");
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  MdLhsModel m;
  m.p_lambda_given_x.resize(2, lambdas);
  for (int x = 0; x < 2; ++x) {
    for (int l = 0; l < lambdas; ++l) m.p_lambda_given_x(x, l) = expo(rng);
    m.p_lambda_given_x.row(x) /= m.p_lambda_given_x.row(x).sum();
    m.p_a_given_x_lambda[x].resize(2, lambdas);
    for (int l = 0; l < lambdas; ++l) {
      const double plus = unit(rng);
      m.p_a_given_x_lambda[x](0, l) = plus;
      m.p_a_given_x_lambda[x](1, l) = 1.0 - plus;
      m.states[x].push_back(random_qubit_density(rng));
    }
  }
  return m;
}

Assemblage assemblage_from_state(const TwoQubitState& state,
                                 const std::array<Direction, 2>& alice) {
  Assemblage out;
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) {
      const Matrix4c<double> op =
          tensor(projector(alice[x], outcome_value(a)), Matrix2c<double>::Identity()) *
          state.density();
      out(x, a) = partial_trace_a(op);
    }
  }
  return out;
}

Assemblage assemblage_from_mdlhs(const MdLhsModel& model) {
  model.validate();
  Assemblage out;
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) {
      Matrix2c<double> sigma = Matrix2c<double>::Zero();
      for (int l = 0; l < model.lambda_count(); ++l) {
        sigma += model.p_lambda_given_x(x, l) * model.p_a_given_x_lambda[x](a, l) *
                 model.states[x][l];
      }
      out(x, a) = sigma;
    }
  }
  return out;
}

Behavior behavior_from_assemblage(const Assemblage& assemblage,
                                  const std::array<Direction, 2>& bob) {
  Behavior out;
  for (int y = 0; y < 2; ++y) {
    for (int b = 0; b < 2; ++b) {
      const Matrix2c<double> pb = projector(bob[y], outcome_value(b));
      for (int x = 0; x < 2; ++x) {
        for (int a = 0; a < 2; ++a) out(x, y, a, b) = std::real((pb * assemblage(x, a)).trace());
      }
    }
  }
  return out;
}

Behavior mdlhv_behavior(const MdLhsModel& model, const std::array<Direction, 2>& bob) {
  model.validate();
  Behavior out;
  for (int x = 0; x < 2; ++x) {
    for (int y = 0; y < 2; ++y) {
      for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
          const Matrix2c<double> pb = projector(bob[y], outcome_value(b));
          double sum = 0.0;
          for (int l = 0; l < model.lambda_count(); ++l) {
            const double p_b = std::real((pb * model.states[x][l]).trace());
            sum += model.p_lambda_given_x(x, l) * model.p_a_given_x_lambda[x](a, l) * p_b;
          }
          out(x, y, a, b) = sum;
        }
      }
    }
  }
  return out;
}

double mdlhv_decomposition_check(const MdLhsModel& model, const std::array<Direction, 2>& bob) {
  const Behavior via_assemblage = behavior_from_assemblage(assemblage_from_mdlhs(model), bob);
  const Behavior direct = mdlhv_behavior(model, bob);
  double residual = 0.0;
  for (int i = 0; i < 16; ++i) {
    residual = std::max(residual, std::abs(via_assemblage.table()[i] - direct.table()[i]));
  }
  return residual;
}

Assemblage mix_assemblages(const Assemblage& steerable, const Assemblage& mdlhs,
                           const EtaTable& eta, const Tolerances& tol) {
  if (!(eta.minCoeff() >= 0.0 && eta.maxCoeff() <= 1.0)) {
    throw ValidationError("mixing weights must lie in [0, 1]");
  }
  Assemblage out;
  for (int x = 0; x < 2; ++x) {
    for (int a = 0; a < 2; ++a) {
      out(x, a) = (1.0 - eta(x, a)) * steerable(x, a) + eta(x, a) * mdlhs(x, a);
    }
  }
  out.validate(tol);
  return out;
}

double md_weight(const WeightParams& params, const Tolerances& tol) {
  if (params.eta(0, 1) == 0.0) throw DomainError("eta^{-|x1} is zero");
  check_eta_open(params.eta);
  if (params.p_lambda_x1.size() != params.p_lambda_x2.size()) {
    throw ValidationError("p(lambda|x1) and p(lambda|x2) have different sizes");
  }
  check_distribution(params.p_lambda_x1, "p(lambda|x1)", tol);
  check_distribution(params.p_lambda_x2, "p(lambda|x2)", tol);
  const double ratio = params.eta(1, 1) / params.eta(0, 1);
  return (params.p_lambda_x1 - ratio * params.p_lambda_x2).sum();
}

WeightLimits weight_limit_values(double l, double p_x1, double eta_ratio) {
  if (p_x1 <= 0.0 || p_x1 >= 1.0) throw DomainError("p(x1) must lie strictly inside (0, 1)");
  if (!(l >= 0.0 && l <= 0.5)) throw ValidationError("l must lie in [0, 0.5]");
  if (!(eta_ratio > 0.0)) throw ValidationError("eta ratio must be positive");
  const double p_x2 = 1.0 - p_x1;
  return {l / p_x1 - eta_ratio * (1.0 - l) / p_x2, (1.0 - l) / p_x1 - l * eta_ratio / p_x2};
}

double weight_bound(double p_plus_x1, double p_plus_x2, const EtaTable& eta) {
  if (eta(0, 1) == 0.0) throw DomainError("eta^{-|x1} is zero");
  check_eta_open(eta);
  for (double p : {p_plus_x1, p_plus_x2}) {
    if (!(p >= 0.0 && p <= 1.0)) throw ValidationError("marginals must lie in [0, 1]");
  }
  return (p_plus_x2 * (eta(1, 0) + eta(1, 1)) - p_plus_x1 * (eta(0, 0) + eta(0, 1))) / eta(0, 1);
}

}  // namespace mdsteer
