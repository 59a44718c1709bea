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

#include <doctest.h>

#include <numbers>
#include <random>

#include "mdsteer/error.hpp"
#include "mdsteer/inequality.hpp"
#include "mdsteer/optimizer.hpp"

using namespace mdsteer;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

OptimizerConfig light_config() {
  OptimizerConfig c;
  c.grid_density = 7;
  c.restarts = 8;
  return c;
}

Direction random_direction(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  return Direction::spherical(std::acos(2 * u(rng) - 1), 2 * kPi * u(rng));
}

/// Some unit vector orthogonal to d.
Direction orthogonal_to(const Direction& d, double twist) {
  const Eigen::Vector3d n = d.vector();
  const Eigen::Vector3d helper = std::abs(n.z()) < 0.9 ? Eigen::Vector3d::UnitZ()
                                                       : Eigen::Vector3d::UnitX();
  const Eigen::Vector3d u = n.cross(helper).normalized();
  const Eigen::Vector3d v = n.cross(u);
  const Eigen::Vector3d m = std::cos(twist) * u + std::sin(twist) * v;
  return Direction::make(m.x(), m.y(), m.z());
}

QuantumAnsatz chsh_ansatz() {
  QuantumAnsatz a;
  a.theta = kPi / 4;
  a.directions = {Direction::planar(0), Direction::planar(kPi / 2), Direction::planar(-kPi / 4),
                  Direction::planar(kPi / 4)};
  return a;
}

}  // namespace

TEST_CASE("product states do not violate with orthogonal Bob directions") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(0, 2 * kPi);
  for (int i = 0; i < 100; ++i) {
    QuantumAnsatz a;
    a.theta = 0.0;
    a.directions[0] = random_direction(rng);
    a.directions[1] = random_direction(rng);
    a.directions[2] = random_direction(rng);
    a.directions[3] = orthogonal_to(a.directions[2], u(rng));
    CHECK(quantum_value(a, 0.5) <= 1.0 + 1e-12);
  }
}

TEST_CASE("product state with parallel Bob directions reaches sqrt 2") {
  QuantumAnsatz a;
  a.theta = 0.0;
  a.directions = {Direction::planar(0), Direction::planar(0), Direction::planar(0),
                  Direction::planar(0)};
  CHECK(quantum_value(a, 0.5) == Approx(std::sqrt(2.0)).epsilon(1e-14));
}

TEST_CASE("CHSH-optimal ansatz") {
  CHECK(quantum_value(chsh_ansatz(), 0.5) == Approx(std::sqrt(2.0)).epsilon(1e-12));
  // At p = 0 the local bound is zero, so any nonzero value is a violation.
  CHECK(quantum_value(chsh_ansatz(), 0.0) > local_bound(0.0));
}

TEST_CASE("ansatz decoding") {
  OptimizerConfig planar;
  CHECK(ansatz_dimension(planar) == 5);
  OptimizerConfig orth;
  orth.orthogonal_bob = true;
  CHECK(ansatz_dimension(orth) == 4);
  const auto a = decode_ansatz(Eigen::Vector4d(0.3, 0.1, 0.2, 0.7), orth);
  CHECK(std::abs(a.directions[2].vector().dot(a.directions[3].vector())) < 1e-15);

  OptimizerConfig sphere_orth;
  sphere_orth.full_sphere = true;
  sphere_orth.orthogonal_bob = true;
  CHECK(ansatz_dimension(sphere_orth) == 8);
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> u(-4, 4);
  for (int i = 0; i < 50; ++i) {
    Eigen::VectorXd x(8);
    for (int k = 0; k < 8; ++k) x(k) = u(rng);
    const auto b = decode_ansatz(x, sphere_orth);
    CHECK(std::abs(b.directions[2].vector().dot(b.directions[3].vector())) < 1e-12);
    CHECK(b.theta >= 0.0);
    CHECK(b.theta <= kPi / 2);
  }
  CHECK_THROWS_AS(decode_ansatz(Eigen::Vector3d(0, 0, 0), planar), ValidationError);
}

TEST_CASE("quantum maximum at full measurement independence") {
  const CurvePoint pt = quantum_max(0.5);
  CHECK(std::abs(pt.value - std::sqrt(2.0)) < 1e-3);
  CHECK(pt.value > local_bound(0.5) + 0.4);
  REQUIRE(pt.delta.has_value());
  CHECK(*pt.delta == Approx(pt.value - 1.0));
  REQUIRE(pt.argmax.has_value());
  CHECK(quantum_value(*pt.argmax, 0.5) == pt.value);
}

TEST_CASE("quantum maximum dominates every coarse grid point") {
  OptimizerConfig c;
  c.grid_density = 4;
  c.restarts = 6;
  const double p = 0.35;
  const double best = quantum_max(p, c).value;
  double grid_best = 0.0;
  for (int t = 0; t < 4; ++t)
    for (int a1 = 0; a1 < 4; ++a1)
      for (int a2 = 0; a2 < 4; ++a2)
        for (int b1 = 0; b1 < 4; ++b1)
          for (int b2 = 0; b2 < 4; ++b2) {
            QuantumAnsatz q;
            q.theta = 0.5 * kPi * t / 3;
            q.directions = {Direction::planar(kPi * a1 / 2), Direction::planar(kPi * a2 / 2),
                            Direction::planar(kPi * b1 / 2), Direction::planar(kPi * b2 / 2)};
            grid_best = std::max(grid_best, quantum_value(q, p));
          }
  CHECK(best >= grid_best - 1e-12);
}

TEST_CASE("quantum maximum is deterministic and worker independent") {
  OptimizerConfig c = light_config();
  c.seed = 5;
  c.workers = 1;
  const auto a = quantum_max(0.2, c);
  const auto b = quantum_max(0.2, c);
  c.workers = 5;
  const auto d = quantum_max(0.2, c);
  CHECK(a.value == b.value);
  CHECK(a.value == d.value);
}

TEST_CASE("quantum curve shape") {
  // The maximum over free Bob directions decreases with p; see README.
  const auto grid = linear_grid(0.0, 0.5, 26);
  CurveParams params;
  params.optimizer = light_config();
  const auto pts = curve(CurveKind::kQuantum, grid, params);
  REQUIRE(pts.size() == 26);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const double p = pts[i].p;
    CHECK(pts[i].value <= pr_closed_form(p) + 1e-6);
    CHECK(pts[i].value == Approx(2 * std::sqrt(2.0) * (1 - p)).epsilon(1e-4));
    if (i > 0) CHECK(pts[i].value <= pts[i - 1].value + 1e-6);
    for (int k = 1; k <= 5; ++k) {
      CHECK(pts[i].value >= tilted_closed_form(kPi / 6 * k / 5, p) - 1e-6);
    }
  }
}

TEST_CASE("orthogonal Bob directions") {
  OptimizerConfig c = light_config();
  c.orthogonal_bob = true;
  for (double p : {0.1, 0.3, 0.5}) {
    const auto pt = quantum_max(p, c);
    CHECK(pt.value == Approx(2 * std::sqrt(1 - 2 * p * (1 - p))).epsilon(1e-5));
  }
}

TEST_CASE("full-sphere search agrees with the planar search") {
  OptimizerConfig planar = light_config();
  OptimizerConfig sphere = planar;
  sphere.full_sphere = true;
  sphere.grid_density = 6;
  sphere.restarts = 12;
  const double p = 0.3;
  CHECK(quantum_max(p, sphere).value == Approx(quantum_max(p, planar).value).epsilon(1e-5));
}

TEST_CASE("closed-form curves") {
  const auto local = curve(CurveKind::kLocal, {0.0, 0.25, 0.5});
  CHECK(local[0].value == 0.0);
  CHECK(local[1].value == 0.75);
  CHECK(local[2].value == 1.0);
  CHECK_FALSE(local[0].delta.has_value());

  const auto pr = curve(CurveKind::kPrBox, {0.0, 0.5});
  CHECK(std::abs(pr[0].value - 2 * std::sqrt(2.0)) < 1e-15);
  CHECK(pr[1].value == Approx(2.0).epsilon(1e-15));

  const auto tilted = curve(CurveKind::kTilted, {0.5});
  CHECK(std::abs(*tilted[0].delta - 0.4012585384440735) < 1e-12);

  CurveParams params;
  params.gamma = kPi / 12;
  const auto rnd = curve(CurveKind::kRandomness, {0.5}, params);
  REQUIRE(rnd[0].rate.has_value());
  CHECK(std::abs(*rnd[0].rate - 1.6008760366928568) < 1e-12);

  CHECK_THROWS_AS(curve(CurveKind::kLocal, {0.7}), DomainError);
}

TEST_CASE("linear grid") {
  const auto g = linear_grid(0.0, 0.5, 3);
  REQUIRE(g.size() == 3);
  CHECK(g[1] == 0.25);
  CHECK(g[2] == 0.5);
  CHECK(linear_grid(0.2, 0.4, 1) == std::vector<double>{0.2});
  CHECK_THROWS_AS(linear_grid(0, 1, 0), ValidationError);
}

TEST_CASE("aligned product state reaches the free-direction maximum") {
  QuantumAnsatz a;
  a.theta = 0.0;
  a.directions.fill(Direction::planar(0));
  for (double p : {0.0, 0.2, 0.5}) {
    CHECK(quantum_value(a, p) == Approx(2 * std::sqrt(2.0) * (1 - p)).epsilon(1e-14));
  }
}

TEST_CASE("orthogonal optimum at p = 0.5 is maximally entangled") {
  OptimizerConfig c = light_config();
  c.orthogonal_bob = true;
  const auto pt = quantum_max(0.5, c);
  REQUIRE(pt.argmax.has_value());
  CHECK(pt.argmax->theta == Approx(kPi / 4).epsilon(1e-3));
}
