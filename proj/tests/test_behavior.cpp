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

#include "mdsteer/behavior.hpp"
#include "oracles.hpp"

using namespace mdsteer;
namespace ref = mdsteer::testing;
using doctest::Approx;

namespace {

constexpr double kPi = std::numbers::pi;

MeasurementSettings chsh_optimal() {
  // Correlation on the minus-branch Bell state is a_z b_z - a_x b_x.
  return {{Direction::planar(0), Direction::planar(kPi / 2)},
          {Direction::planar(-kPi / 4), Direction::planar(kPi / 4)}};
}

Direction random_direction(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0, 1);
  return Direction::spherical(std::acos(2 * u(rng) - 1), 2 * kPi * u(rng));
}

std::array<double, 3> components(const Direction& d) { return {d.nx(), d.ny(), d.nz()}; }

}  // namespace

TEST_CASE("Bell state measured along z is perfectly correlated") {
  const MeasurementSettings s{{Direction::planar(0), Direction::planar(1)},
                              {Direction::planar(0), Direction::planar(1)}};
  const Behavior b = behavior_from_quantum(pure_state(kPi / 4), s);
  CHECK(b(0, 0, 0, 0) == Approx(0.5).epsilon(1e-12));
  CHECK(b(0, 0, 1, 1) == Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(b(0, 0, 0, 1)) < 1e-12);
  CHECK(std::abs(b(0, 0, 1, 0)) < 1e-12);
}

TEST_CASE("product state factorizes") {
  std::mt19937_64 rng(5);
  const MeasurementSettings s{{random_direction(rng), random_direction(rng)},
                              {random_direction(rng), random_direction(rng)}};
  const Behavior b = behavior_from_quantum(pure_state(0.0), s);
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y)
      for (int a = 0; a < 2; ++a)
        for (int c = 0; c < 2; ++c) {
          CHECK(b(x, y, a, c) ==
                Approx(b.alice_marginal(x, y, a) * b.bob_marginal(x, y, c)).epsilon(1e-12));
        }
}

TEST_CASE("Tsirelson configuration reaches 2 sqrt 2") {
  const Behavior b = behavior_from_quantum(pure_state(kPi / 4), chsh_optimal());
  CHECK(std::abs(chsh_value(b) - 2 * std::sqrt(2.0)) < 1e-9);
}

TEST_CASE("correlators of reference behaviors") {
  CHECK(correlators(Behavior::uniform()).isZero(0.0));
  CHECK(correlators(pr_box()).isApprox(CorrelatorVector(1, 1, 1, -1)));

  Behavior perfect;
  for (int x = 0; x < 2; ++x)
    for (int y = 0; y < 2; ++y) {
      perfect(x, y, 0, 0) = 0.5;
      perfect(x, y, 1, 1) = 0.5;
    }
  CHECK(correlators(perfect)(kX1Y1) == 1.0);
}

TEST_CASE("PR box") {
  const Behavior b = pr_box();
  CHECK_NOTHROW(b.validate());
  CHECK(chsh_value(b) == 4.0);
  const auto ns = no_signalling_check(b);
  CHECK(ns.pass);
  CHECK(ns.max_deviation == 0.0);
}

TEST_CASE("tilted behavior") {
  const double d = kPi / 6;
  const Behavior b = tilted_behavior(d);
  CHECK_NOTHROW(b.validate());
  CHECK(no_signalling_check(b).pass);
  CHECK(chsh_value(b) == Approx(2.598076211353316).epsilon(1e-9));
  CHECK(std::abs(chsh_value(b) - 2 * std::cos(d) * (1 + std::sin(d))) < 1e-9);

  // Small tilt approaches the local CHSH value.
  CHECK(chsh_value(tilted_behavior(1e-7)) == Approx(2.0).epsilon(1e-6));

  CHECK_THROWS_AS(tilted_behavior(0.0), ValidationError);
  CHECK_THROWS_AS(tilted_behavior(kPi / 5), ValidationError);
}

TEST_CASE("tilted CHSH closed form on a 50-point grid") {
  for (int i = 1; i <= 50; ++i) {
    const double d = kPi / 6 * i / 50;
    CHECK(std::abs(chsh_value(tilted_behavior(d)) - 2 * std::cos(d) * (1 + std::sin(d))) < 1e-9);
  }
}

TEST_CASE("randomness behavior") {
  const Behavior b0 = randomness_behavior(0.0);
  CHECK_NOTHROW(b0.validate());
  for (int y = 0; y < 2; ++y) {
    CHECK(b0.alice_marginal(0, y, 0) == Approx(0.5).epsilon(1e-12));
  }
  const auto s = randomness_settings(kPi / 12);
  // y2 = cos(pi/4) z - sin(pi/4) x
  CHECK(s.bob[1].nz() == Approx(std::cos(kPi / 4)).epsilon(1e-15));
  CHECK(s.bob[1].nx() == Approx(-std::sin(kPi / 4)).epsilon(1e-15));
  CHECK_NOTHROW(randomness_behavior(kPi / 12).validate());
  CHECK_THROWS_AS(randomness_behavior(-0.01), ValidationError);
  CHECK_THROWS_AS(randomness_behavior(kPi / 6), ValidationError);
}

TEST_CASE("hand-built signalling behavior fails the check") {
  Behavior b;
  for (int y = 0; y < 2; ++y) {
    for (int x = 0; x < 2; ++x) {
      b(x, y, 0, 0) = 0.5;
      b(x, y, 1, 1) = 0.5;
    }
  }
  // p(+|x1, y1) = 1 and p(+|x1, y2) = 0
  b(0, 0, 0, 0) = 1.0;
  b(0, 0, 1, 1) = 0.0;
  b(0, 1, 0, 0) = 0.0;
  b(0, 1, 1, 1) = 1.0;
  CHECK_NOTHROW(b.validate());
  const auto ns = no_signalling_check(b);
  CHECK_FALSE(ns.pass);
  CHECK(ns.max_deviation == 1.0);
}

TEST_CASE("behavior validation names the failing entry") {
  Behavior::Table t;
  t.fill(0.25);
  t[Behavior::flat_index(1, 0, 1, 0)] = -0.1;
  try {
    Behavior::checked(t);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(std::string(e.what()).find("[1][0][1][0]") != std::string::npos);
  }
  t.fill(0.3);
  CHECK_THROWS_AS(Behavior::checked(t), ValidationError);
}

TEST_CASE("quantum behaviors are valid and match direct correlators") {
  std::mt19937_64 rng(2024);
  std::uniform_real_distribution<double> u(0, 1);
  for (int i = 0; i < 100; ++i) {
    const double theta = 0.5 * kPi * u(rng);
    const MeasurementSettings s{{random_direction(rng), random_direction(rng)},
                                {random_direction(rng), random_direction(rng)}};
    const auto state = pure_state(theta);
    const Behavior b = behavior_from_quantum(state, s);
    CHECK_NOTHROW(b.validate());
    CHECK(no_signalling_check(b).pass);
    const CorrelatorVector via_table = correlators(b);
    const CorrelatorVector direct = quantum_correlators(state, s);
    CHECK((via_table - direct).cwiseAbs().maxCoeff() <= 1e-10);
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        const double expected = ref::minus_family_correlation(theta, components(s.alice[x]),
                                                              components(s.bob[y]));
        CHECK(std::abs(direct(2 * x + y) - expected) <= 1e-10);
      }
    }
  }
}
