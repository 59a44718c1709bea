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

// Dense two-qubit algebra. Basis order is |00>, |01>, |10>, |11> with
// Alice's qubit first.

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "mdsteer/error.hpp"
#include "mdsteer/tolerance.hpp"

namespace mdsteer {

template <class Scalar, int Rows = Eigen::Dynamic, int Cols = Eigen::Dynamic>
using ComplexMatrix = Eigen::Matrix<std::complex<Scalar>, Rows, Cols>;

template <class Scalar>
using Matrix2c = ComplexMatrix<Scalar, 2, 2>;

template <class Scalar>
using Matrix4c = ComplexMatrix<Scalar, 4, 4>;

template <class Scalar>
Matrix2c<Scalar> pauli_x() {
  Matrix2c<Scalar> m;
  m << 0, 1, 1, 0;
  return m;
}

template <class Scalar>
Matrix2c<Scalar> pauli_y() {
  using C = std::complex<Scalar>;
  Matrix2c<Scalar> m;
  m << C(0), C(0, -1), C(0, 1), C(0);
  return m;
}

template <class Scalar>
Matrix2c<Scalar> pauli_z() {
  Matrix2c<Scalar> m;
  m << 1, 0, 0, -1;
  return m;
}

/// Unit vector on the Bloch sphere.
template <class Scalar>
class BasicDirection {
 public:
  using Vector = Eigen::Matrix<Scalar, 3, 1>;

  BasicDirection() : v_(0, 0, 1) {}

  /// Throws ValidationError unless |n| = 1 within `tol.equality`.
  static BasicDirection make(Scalar nx, Scalar ny, Scalar nz,
                             const Tolerances& tol = tolerances()) {
    Vector v(nx, ny, nz);
    const Scalar norm2 = v.squaredNorm();
    if (!std::isfinite(static_cast<double>(norm2)) ||
        std::abs(static_cast<double>(norm2) - 1.0) > tol.equality) {
      throw ValidationError("direction is not a unit vector (|n|^2 = " +
                            std::to_string(static_cast<double>(norm2)) + ")");
    }
    return BasicDirection(v);
  }

  /// cos(angle) z + sin(angle) x.
  static BasicDirection planar(Scalar angle) {
    return BasicDirection(Vector(std::sin(angle), Scalar(0), std::cos(angle)));
  }

  static BasicDirection spherical(Scalar polar, Scalar azimuth) {
    return BasicDirection(Vector(std::sin(polar) * std::cos(azimuth),
                                 std::sin(polar) * std::sin(azimuth), std::cos(polar)));
  }

  Scalar nx() const { return v_.x(); }
  Scalar ny() const { return v_.y(); }
  Scalar nz() const { return v_.z(); }
  const Vector& vector() const { return v_; }

  BasicDirection operator-() const { return BasicDirection(-v_); }

 private:
  explicit BasicDirection(const Vector& v) : v_(v) {}
  Vector v_;
};

using Direction = BasicDirection<double>;

/// n . sigma.
template <class Scalar>
Matrix2c<Scalar> pauli_observable(const BasicDirection<Scalar>& n) {
  return n.nx() * pauli_x<Scalar>() + n.ny() * pauli_y<Scalar>() +
         n.nz() * pauli_z<Scalar>();
}

/// (I + a n.sigma) / 2 for outcome a = +1 / -1.
template <class Scalar>
Matrix2c<Scalar> projector(const BasicDirection<Scalar>& n, int outcome) {
  return (Matrix2c<Scalar>::Identity() + Scalar(outcome) * pauli_observable(n)) /
         Scalar(2);
}

/// Kronecker product; fixed sizes multiply at compile time.
template <class A, class B>
auto tensor(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  static_assert(std::is_same_v<typename A::Scalar, typename B::Scalar>);
  constexpr auto product = [](int l, int r) {
    return (l == Eigen::Dynamic || r == Eigen::Dynamic) ? int(Eigen::Dynamic) : l * r;
  };
  constexpr int kRows = product(A::RowsAtCompileTime, B::RowsAtCompileTime);
  constexpr int kCols = product(A::ColsAtCompileTime, B::ColsAtCompileTime);
  Eigen::Matrix<typename A::Scalar, kRows, kCols> out(a.rows() * b.rows(),
                                                      a.cols() * b.cols());
  out = Eigen::kroneckerProduct(a.derived(), b.derived());
  return out;
}

template <class Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& m,
                  double tol = tolerances().equality) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

/// Smallest eigenvalue of a Hermitian matrix.
template <class Derived>
auto min_eigenvalue(const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  Eigen::SelfAdjointEigenSolver<Plain> solver(m.derived(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().minCoeff();
}

template <class Derived>
auto eigenvalues(const Eigen::MatrixBase<Derived>& m) {
  using Plain = typename Derived::PlainObject;
  Eigen::SelfAdjointEigenSolver<Plain> solver(m.derived(), Eigen::EigenvaluesOnly);
  return solver.eigenvalues().eval();
}

/// Hermitian with no eigenvalue below -slack.
template <class Derived>
bool is_psd(const Eigen::MatrixBase<Derived>& m, double slack = tolerances().psd,
            double hermitian_tol = tolerances().equality) {
  return is_hermitian(m, hermitian_tol) &&
         static_cast<double>(min_eigenvalue(m)) >= -slack;
}

/// Tr_A of a 4x4 operator on A (x) B.
template <class Scalar>
Matrix2c<Scalar> partial_trace_a(const Matrix4c<Scalar>& m) {
  Matrix2c<Scalar> out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out(i, j) = m(i, j) + m(2 + i, 2 + j);
  }
  return out;
}

/// Tr_B of a 4x4 operator on A (x) B.
template <class Scalar>
Matrix2c<Scalar> partial_trace_b(const Matrix4c<Scalar>& m) {
  Matrix2c<Scalar> out;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) out(i, j) = m(2 * i, 2 * j) + m(2 * i + 1, 2 * j + 1);
  }
  return out;
}

/// Relative phase of the |11> amplitude in cos(t)|00> +- sin(t)|11>.
enum class Branch { kMinus, kPlus };

/// Valid two-qubit density matrix.
template <class Scalar>
class BasicTwoQubitState {
 public:
  /// Throws ValidationError unless Hermitian, unit trace and PSD.
  static BasicTwoQubitState from_density(const Matrix4c<Scalar>& rho,
                                         const Tolerances& tol = tolerances()) {
    if (!rho.allFinite()) throw ValidationError("density matrix has non-finite entries");
    if (!is_hermitian(rho, tol.equality)) {
      throw ValidationError("density matrix is not Hermitian");
    }
    const double trace = static_cast<double>(std::real(rho.trace()));
    if (std::abs(trace - 1.0) > tol.equality) {
      throw ValidationError("density matrix trace is " + std::to_string(trace));
    }
    if (static_cast<double>(min_eigenvalue(rho)) < -tol.psd) {
      throw ValidationError("density matrix is not positive semidefinite");
    }
    return BasicTwoQubitState(rho);
  }

  static BasicTwoQubitState from_vector(const ComplexMatrix<Scalar, 4, 1>& psi) {
    const Scalar norm = psi.norm();
    if (!(norm > Scalar(0))) throw ValidationError("state vector is zero");
    const ComplexMatrix<Scalar, 4, 1> unit = psi / norm;
    return BasicTwoQubitState(unit * unit.adjoint());
  }

  const Matrix4c<Scalar>& density() const { return rho_; }
  Matrix2c<Scalar> reduced_a() const { return partial_trace_b(rho_); }
  Matrix2c<Scalar> reduced_b() const { return partial_trace_a(rho_); }
  Scalar purity() const { return std::real((rho_ * rho_).trace()); }

 private:
  explicit BasicTwoQubitState(const Matrix4c<Scalar>& rho) : rho_(rho) {}
  Matrix4c<Scalar> rho_;
};

using TwoQubitState = BasicTwoQubitState<double>;

/// cos(theta)|00> - sin(theta)|11> (or + with Branch::kPlus), theta in [0, pi/2].
template <class Scalar>
BasicTwoQubitState<Scalar> pure_state(Scalar theta, Branch branch = Branch::kMinus) {
  if (!(theta >= Scalar(0) && theta <= std::numbers::pi_v<Scalar> / 2)) {
    throw ValidationError("state angle must lie in [0, pi/2], got " +
                          std::to_string(static_cast<double>(theta)));
  }
  ComplexMatrix<Scalar, 4, 1> psi = ComplexMatrix<Scalar, 4, 1>::Zero();
  psi(0) = std::cos(theta);
  psi(3) = (branch == Branch::kMinus ? -1 : 1) * std::sin(theta);
  return BasicTwoQubitState<Scalar>::from_vector(psi);
}

/// (|00> + |11>) / sqrt(2).
template <class Scalar>
BasicTwoQubitState<Scalar> maximally_entangled_plus() {
  return pure_state<Scalar>(std::numbers::pi_v<Scalar> / 4, Branch::kPlus);
}

/// Tr[obs rho] for a Hermitian 4x4 observable.
template <class Scalar, class Derived>
Scalar expectation(const BasicTwoQubitState<Scalar>& state,
                   const Eigen::MatrixBase<Derived>& obs,
                   double hermitian_tol = tolerances().equality) {
  if (obs.rows() != 4 || obs.cols() != 4) {
    throw ValidationError("observable must be 4x4");
  }
  if (!is_hermitian(obs, hermitian_tol)) {
    throw ValidationError("observable is not Hermitian");
  }
  // Tr[O rho] = sum_ij O_ij rho_ji
  return std::real((obs.derived().cwiseProduct(state.density().transpose())).sum());
}

}  // namespace mdsteer
