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

#include "mdsteer/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "mdsteer/error.hpp"
#include "mdsteer/inequality.hpp"
#include "mdsteer/parallel.hpp"

namespace mdsteer {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBoundSlack = 1e-9;

void check_pair(double p1, double p2) {
  if (!(p1 >= 0.0 && p2 >= 0.0) || std::abs(p1 + p2 - 1.0) > 1e-12) {
    throw ValidationError("setting probabilities must be non-negative and sum to one");
  }
}

}  // namespace

ExtremalStrategy ExtremalStrategy::with_md_parameter(int chi, double xi, double p, double beta) {
  ExtremalStrategy s{chi, xi, beta, 1.0 - p, p};
  s.validate();
  return s;
}

void ExtremalStrategy::validate() const {
  if (chi < 1 || chi > 4) throw ValidationError("chi must be 1..4, got " + std::to_string(chi));
  if (!(beta >= 0.0 && beta <= kPi / 2)) throw ValidationError("beta must lie in [0, pi/2]");
  if (!std::isfinite(xi)) throw ValidationError("xi must be finite");
  check_pair(p1, p2);
}

double beta_from_overlap(double mu) {
  if (!(mu >= 0.0 && mu <= 1.0)) throw DomainError("overlap must lie in [0, 1]");
  return std::atan2(std::sqrt(1.0 - mu), std::sqrt(mu));
}

double bob_overlap(const Direction& y1, const Direction& y2) {
  return 0.5 * (1.0 + y1.vector().dot(y2.vector()));
}

CorrelatorVector extremal_correlators(const ExtremalStrategy& s) {
  s.validate();
  const double plus = 2.0 * std::cos(s.xi + s.beta);
  const double minus = 2.0 * std::cos(s.xi - s.beta);
  // Alice's answers to x1 and x2 for each response type.
  static constexpr int kAnswers[4][2] = {{1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
  const int a1 = kAnswers[s.chi - 1][0];
  const int a2 = kAnswers[s.chi - 1][1];
  return CorrelatorVector(a1 * s.p1 * plus, a1 * s.p1 * minus, a2 * s.p2 * plus,
                          a2 * s.p2 * minus);
}

void StrategyMixture::validate() const {
  if (components.empty()) throw ValidationError("mixture has no components");
  double total = 0.0;
  for (const auto& [strategy, weight] : components) {
    strategy.validate();
    if (!(weight >= 0.0)) throw ValidationError("mixture weights must be non-negative");
    total += weight;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw ValidationError("mixture weights sum to " + std::to_string(total));
  }
}

CorrelatorVector mixture_correlators(const StrategyMixture& m) {
  m.validate();
  CorrelatorVector c = CorrelatorVector::Zero();
  for (const auto& [strategy, weight] : m.components) c += weight * extremal_correlators(strategy);
  return c;
}

double general_beta_operator(const CorrelatorVector& c, double p1, double p2, double beta) {
  check_pair(p1, p2);
  if (!(beta > 0.0 && beta < kPi / 2)) throw DomainError("beta must lie in (0, pi/2)");
  const double cross = 2.0 * std::cos(2.0 * beta);
  const auto quadratic = [cross](double u, double v) {
    return std::max(0.0, u * u + v * v - cross * u * v);
  };
  const double alpha1 =
      quadratic(p2 * c(kX1Y1) + p1 * c(kX2Y1), p2 * c(kX1Y2) + p1 * c(kX2Y2));
  const double alpha2 =
      quadratic(p2 * c(kX1Y1) - p1 * c(kX2Y1), p2 * c(kX1Y2) - p1 * c(kX2Y2));
  return std::sqrt(alpha1) + std::sqrt(alpha2);
}

double general_beta_bound(double p1, double p2, double beta) {
  check_pair(p1, p2);
  return 4.0 * p1 * p2 * std::sin(2.0 * beta);
}

StrategyMixture saturating_mixture(double p) {
  return StrategyMixture{{{ExtremalStrategy::with_md_parameter(1, -kPi / 4, p), 0.5},
                          {ExtremalStrategy::with_md_parameter(3, -kPi / 4, p), 0.5}}};
}

StrategyMixture random_mixture(std::uint64_t seed, std::uint64_t index, double p, double beta,
                               const SweepConfig& config) {
  std::mt19937_64 rng(sub_seed(seed, index));
  std::uniform_int_distribution<int> count(1, std::max(1, config.max_components));
  std::uniform_int_distribution<int> chi(1, 4);
  std::uniform_int_distribution<int> grid(0, std::max(1, config.grid_points) - 1);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
  std::bernoulli_distribution on_grid(0.5);
  std::exponential_distribution<double> expo(1.0);

  StrategyMixture m;
  const int k = count(rng);
  double total = 0.0;
  for (int i = 0; i < k; ++i) {
    const double xi = on_grid(rng) ? 2.0 * kPi * grid(rng) / config.grid_points : angle(rng);
    const double w = expo(rng);
    m.components.emplace_back(ExtremalStrategy::with_md_parameter(chi(rng), xi, p, beta), w);
    total += w;
  }
  for (auto& component : m.components) component.second /= total;
  return m;
}

SweepReport bound_sweep(double p, std::int64_t samples, std::uint64_t seed,
                        const SweepConfig& config) {
  if (!(p > 0.0 && p <= 0.5)) throw DomainError("bound sweep needs 0 < p <= 0.5");
  if (samples < 1) throw ValidationError("bound sweep needs at least one sample");
  if (config.grid_points < 1) throw ValidationError("grid needs at least one point");

  SweepReport report;
  report.p = p;
  report.samples = samples;
  report.seed = seed;
  report.bound = local_bound(p);
  report.saturation = md_operator(mixture_correlators(saturating_mixture(p)), p);

  double best = 0.0;
  for (int chi = 1; chi <= 4; ++chi) {
    for (int i = 0; i < config.grid_points; ++i) {
      const auto s = ExtremalStrategy::with_md_parameter(chi, 2.0 * kPi * i / config.grid_points, p);
      best = std::max(best, md_operator(extremal_correlators(s), p));
    }
  }

  std::vector<double> worker_max(std::max(1u, config.workers == 0
                                                  ? std::thread::hardware_concurrency()
                                                  : config.workers),
                                 0.0);
  parallel_chunks(static_cast<std::size_t>(samples), static_cast<unsigned>(worker_max.size()),
                  [&](unsigned w, std::size_t begin, std::size_t end) {
                    double local = 0.0;
                    for (std::size_t i = begin; i < end; ++i) {
                      const auto m = random_mixture(seed, i, p, kPi / 4, config);
                      local = std::max(local, md_operator(mixture_correlators(m), p));
                    }
                    worker_max[w] = local;
                  });
  for (double v : worker_max) best = std::max(best, v);

  report.max_value = best;
  report.pass = best <= report.bound + kBoundSlack;
  return report;
}

}  // namespace mdsteer
