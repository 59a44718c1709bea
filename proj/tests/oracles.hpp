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

// Test-only reference computations. Deliberately written with plain arrays
// and closed forms so they share no code path with the library.

#include <array>
#include <cmath>
#include <complex>

namespace mdsteer::testing {

using cd = std::complex<double>;
using Qubit2 = std::array<std::array<cd, 2>, 2>;

inline Qubit2 bloch_operator(double nx, double ny, double nz) {
  return {{{cd(nz, 0), cd(nx, -ny)}, {cd(nx, ny), cd(-nz, 0)}}};
}

/// <psi| A (x) B |psi> for psi indexed psi[alice][bob].
inline double vector_expectation(const std::array<std::array<cd, 2>, 2>& psi, const Qubit2& a,
                                 const Qubit2& b) {
  cd sum = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) sum += std::conj(psi[i][j]) * a[i][k] * b[j][l] * psi[k][l];
  return sum.real();
}

/// cos(t)|00> + sign sin(t)|11>.
inline std::array<std::array<cd, 2>, 2> two_qubit_vector(double t, double sign) {
  return {{{cd(std::cos(t)), cd(0)}, {cd(0), cd(sign * std::sin(t))}}};
}

/// Eigenvalues of a 2x2 Hermitian matrix from trace and determinant.
inline std::array<double, 2> hermitian2_eigenvalues(const Qubit2& m) {
  const double half_trace = 0.5 * (m[0][0].real() + m[1][1].real());
  const double det = (m[0][0] * m[1][1] - m[0][1] * m[1][0]).real();
  const double disc = std::sqrt(std::max(0.0, half_trace * half_trace - det));
  return {half_trace - disc, half_trace + disc};
}

/// Correlation of a (x) b on cos(t)|00> - sin(t)|11> from its correlation
/// tensor diag(-sin 2t, sin 2t, 1).
inline double minus_family_correlation(double t, const std::array<double, 3>& a,
                                       const std::array<double, 3>& b) {
  const double s = std::sin(2 * t);
  return -s * a[0] * b[0] + s * a[1] * b[1] + a[2] * b[2];
}

inline double binary_entropy_reference(double q) {
  return -q * std::log(q) / std::log(2.0) - (1 - q) * std::log(1 - q) / std::log(2.0);
}

}  // namespace mdsteer::testing
