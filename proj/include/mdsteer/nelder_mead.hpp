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
#include <algorithm>
#include <numeric>
#include <vector>

namespace mdsteer {

template <class Scalar>
struct NelderMeadOptions {
  int max_iterations = 4000;
  /// Stop once the spread of simplex values falls below this.
  Scalar value_tolerance = Scalar(1e-10);
  Scalar initial_step = Scalar(0.3);
};

template <class Scalar, int N>
struct NelderMeadResult {
  Eigen::Matrix<Scalar, N, 1> argmin;
  Scalar value;
  int iterations = 0;
  bool converged = false;
};

/// Derivative-free simplex minimization (reflection 1, expansion 2,
/// contraction 1/2, shrink 1/2).
template <class Function, class Derived>
auto nelder_mead_minimize(Function&& f, const Eigen::MatrixBase<Derived>& start,
                          const NelderMeadOptions<typename Derived::Scalar>& options = {}) {
  using Scalar = typename Derived::Scalar;
  constexpr int kN = Derived::RowsAtCompileTime;
  using Point = Eigen::Matrix<Scalar, kN, 1>;

  const Eigen::Index n = start.size();
  std::vector<Point> simplex(n + 1, Point(start));
  std::vector<Scalar> values(n + 1);
  for (Eigen::Index i = 0; i < n; ++i) simplex[i + 1](i) += options.initial_step;
  for (Eigen::Index i = 0; i <= n; ++i) values[i] = f(simplex[i]);

  std::vector<Eigen::Index> order(n + 1);
  NelderMeadResult<Scalar, kN> result;
  int it = 0;
  for (; it < options.max_iterations; ++it) {
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](Eigen::Index a, Eigen::Index b) { return values[a] < values[b]; });
    const Eigen::Index best = order.front();
    const Eigen::Index worst = order.back();
    const Eigen::Index second_worst = order[n - 1];
    if (values[worst] - values[best] <= options.value_tolerance) {
      result.converged = true;
      break;
    }

    Point centroid = Point::Zero(n);
    for (Eigen::Index i = 0; i <= n; ++i) {
      if (i != worst) centroid += simplex[i];
    }
    centroid /= Scalar(n);

    const Point reflected = centroid + (centroid - simplex[worst]);
    const Scalar f_reflected = f(reflected);
    if (f_reflected < values[best]) {
      const Point expanded = centroid + Scalar(2) * (centroid - simplex[worst]);
      const Scalar f_expanded = f(expanded);
      if (f_expanded < f_reflected) {
        simplex[worst] = expanded;
        values[worst] = f_expanded;
      } else {
        simplex[worst] = reflected;
        values[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected < values[second_worst]) {
      simplex[worst] = reflected;
      values[worst] = f_reflected;
      continue;
    }
    const bool outside = f_reflected < values[worst];
    const Point contracted = outside ? Point(centroid + Scalar(0.5) * (reflected - centroid))
                                     : Point(centroid + Scalar(0.5) * (simplex[worst] - centroid));
    const Scalar f_contracted = f(contracted);
    if (f_contracted < (outside ? f_reflected : values[worst])) {
      simplex[worst] = contracted;
      values[worst] = f_contracted;
      continue;
    }
    for (Eigen::Index i = 0; i <= n; ++i) {
      if (i == best) continue;
      simplex[i] = simplex[best] + Scalar(0.5) * (simplex[i] - simplex[best]);
      values[i] = f(simplex[i]);
    }
  }

  const auto best_it = std::min_element(values.begin(), values.end());
  result.argmin = simplex[static_cast<std::size_t>(best_it - values.begin())];
  result.value = *best_it;
  result.iterations = it;
  return result;
}

}  // namespace mdsteer
