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

#include "mdsteer/optimizer.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "mdsteer/error.hpp"
#include "mdsteer/inequality.hpp"
#include "mdsteer/nelder_mead.hpp"
#include "mdsteer/parallel.hpp"

namespace mdsteer {
namespace {

constexpr double kPi = std::numbers::pi;

struct Candidate {
  double value;
  std::size_t index;
};

bool better(const Candidate& a, const Candidate& b) {
  return a.value > b.value || (a.value == b.value && a.index < b.index);
}

void keep_top(std::vector<Candidate>& top, const Candidate& c, std::size_t k) {
  if (top.size() < k) {
    top.push_back(c);
    std::push_heap(top.begin(), top.end(), better);
  } else if (better(c, top.front())) {
    std::pop_heap(top.begin(), top.end(), better);
    top.back() = c;
    std::push_heap(top.begin(), top.end(), better);
  }
}

/// Grid parameters: theta and one planar angle per independent direction.
int grid_dimension(const OptimizerConfig& config) { return config.orthogonal_bob ? 4 : 5; }

/// Grid point -> full parameter vector (azimuths zero in full-sphere mode).
Eigen::VectorXd grid_point(std::size_t index, const OptimizerConfig& config) {
  const int g = config.grid_density;
  const int dims = grid_dimension(config);
  Eigen::VectorXd planar(dims);
  for (int d = 0; d < dims; ++d) {
    const int k = static_cast<int>(index % g);
    index /= g;
    planar(d) = d == 0 ? (g == 1 ? 0.0 : 0.5 * kPi * k / (g - 1)) : 2.0 * kPi * k / g;
  }
  if (!config.full_sphere) return planar;
  Eigen::VectorXd full = Eigen::VectorXd::Zero(ansatz_dimension(config));
  full(0) = planar(0);
  for (int d = 1; d < dims; ++d) full(2 * d - 1) = planar(d);
  return full;
}

}  // namespace

double quantum_value(const QuantumAnsatz& ansatz, double p) {
  return md_operator(quantum_correlators(pure_state(ansatz.theta), ansatz.settings()), p);
}

int ansatz_dimension(const OptimizerConfig& config) {
  if (!config.full_sphere) return config.orthogonal_bob ? 4 : 5;
  return config.orthogonal_bob ? 8 : 9;
}

QuantumAnsatz decode_ansatz(const Eigen::VectorXd& params, const OptimizerConfig& config) {
  if (params.size() != ansatz_dimension(config)) {
    throw ValidationError("ansatz parameter vector has the wrong size");
  }
  QuantumAnsatz a;
  a.theta = std::clamp(params(0), 0.0, 0.5 * kPi);
  if (!config.full_sphere) {
    for (int i = 0; i < 3; ++i) a.directions[i] = Direction::planar(params(1 + i));
    a.directions[3] = Direction::planar(config.orthogonal_bob ? params(3) + 0.5 * kPi : params(4));
    return a;
  }
  for (int i = 0; i < 3; ++i) {
    a.directions[i] = Direction::spherical(params(1 + 2 * i), params(2 + 2 * i));
  }
  if (!config.orthogonal_bob) {
    a.directions[3] = Direction::spherical(params(7), params(8));
    return a;
  }
  // Unit vector orthogonal to m1: rotate within the tangent plane at m1.
  const double pol = params(5);
  const double az = params(6);
  const double w = params(7);
  const Eigen::Vector3d u(std::cos(pol) * std::cos(az), std::cos(pol) * std::sin(az),
                          -std::sin(pol));
  const Eigen::Vector3d v(-std::sin(az), std::cos(az), 0.0);
  const Eigen::Vector3d m2 = std::cos(w) * u + std::sin(w) * v;
  a.directions[3] = Direction::make(m2.x(), m2.y(), m2.z());
  return a;
}

CurvePoint quantum_max(double p, const OptimizerConfig& config) {
  check_md_parameter(p);
  if (config.grid_density < 1 || config.restarts < 1) {
    throw ValidationError("optimizer needs grid_density >= 1 and restarts >= 1");
  }
  std::size_t grid_size = 1;
  for (int d = 0; d < grid_dimension(config); ++d) grid_size *= config.grid_density;

  const std::size_t grid_starts = std::max(1, config.restarts / 2);
  const unsigned workers =
      config.workers == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.workers;
  std::vector<std::vector<Candidate>> tops(workers);
  parallel_chunks(grid_size, workers, [&](unsigned w, std::size_t begin, std::size_t end) {
    for (std::size_t i = begin; i < end; ++i) {
      const double v = quantum_value(decode_ansatz(grid_point(i, config), config), p);
      keep_top(tops[w], {v, i}, grid_starts);
    }
  });
  std::vector<Candidate> merged;
  for (const auto& t : tops) {
    for (const auto& c : t) keep_top(merged, c, grid_starts);
  }
  std::sort(merged.begin(), merged.end(), better);

  const int dim = ansatz_dimension(config);
  std::vector<Eigen::VectorXd> starts;
  for (const auto& c : merged) starts.push_back(grid_point(c.index, config));
  for (int r = static_cast<int>(starts.size()); r < config.restarts; ++r) {
    std::mt19937_64 rng(sub_seed(config.seed, static_cast<std::uint64_t>(r)));
    std::uniform_real_distribution<double> angle(0.0, 2.0 * kPi);
    Eigen::VectorXd x(dim);
    x(0) = 0.25 * angle(rng);
    for (int d = 1; d < dim; ++d) x(d) = angle(rng);
    starts.push_back(x);
  }

  const auto objective = [&](const Eigen::VectorXd& x) {
    return -quantum_value(decode_ansatz(x, config), p);
  };
  NelderMeadOptions<double> options;
  options.max_iterations = config.max_iterations;
  options.value_tolerance = std::min(config.tol, 1e-10);

  std::vector<Candidate> results(starts.size());
  std::vector<Eigen::VectorXd> argmaxes(starts.size());
  parallel_chunks(starts.size(), workers, [&](unsigned, std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      auto res = nelder_mead_minimize(objective, starts[r], options);
      // Restart from the optimum until the gain drops below tol.
      for (int round = 0; round < 8; ++round) {
        NelderMeadOptions<double> polish = options;
        polish.initial_step = 0.05;
        auto next = nelder_mead_minimize(objective, res.argmin, polish);
        const bool improved = next.value < res.value - config.tol;
        if (next.value < res.value) res = next;
        if (!improved) break;
      }
      results[r] = {-res.value, r};
      argmaxes[r] = res.argmin;
    }
  });
  const auto best = std::min_element(results.begin(), results.end(), better);

  CurvePoint point;
  point.p = p;
  point.argmax = decode_ansatz(argmaxes[best->index], config);
  point.value = quantum_value(*point.argmax, p);
  point.delta = point.value - local_bound(p);
  return point;
}

std::vector<CurvePoint> curve(CurveKind kind, const std::vector<double>& p_grid,
                              const CurveParams& params) {
  for (double p : p_grid) check_md_parameter(p);
  std::vector<CurvePoint> out;
  out.reserve(p_grid.size());
  std::optional<CorrelatorVector> randomness;
  double rate = 0.0;
  if (kind == CurveKind::kRandomness) {
    randomness = correlators(randomness_behavior(params.gamma));
    rate = randomness_rate(params.gamma);
  }
  for (double p : p_grid) {
    CurvePoint pt;
    pt.p = p;
    switch (kind) {
      case CurveKind::kLocal:
        pt.value = local_bound(p);
        break;
      case CurveKind::kPrBox:
        pt.value = pr_closed_form(p);
        pt.delta = pt.value - local_bound(p);
        break;
      case CurveKind::kQuantum:
        pt = quantum_max(p, params.optimizer);
        break;
      case CurveKind::kTilted:
        pt.value = tilted_closed_form(params.delta, p);
        pt.delta = pt.value - local_bound(p);
        break;
      case CurveKind::kRandomness:
        pt.value = md_operator(*randomness, p);
        pt.delta = pt.value - local_bound(p);
        pt.rate = rate;
        break;
    }
    out.push_back(std::move(pt));
  }
  return out;
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
  if (steps < 1) throw ValidationError("grid needs at least one point");
  if (steps == 1) return {lo};
  std::vector<double> grid(steps);
  for (int i = 0; i < steps; ++i) grid[i] = lo + (hi - lo) * i / (steps - 1);
  grid.back() = hi;
  return grid;
}

}  // namespace mdsteer
