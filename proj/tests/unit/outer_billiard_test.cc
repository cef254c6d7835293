// Copyright 2026 The flatsight Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "flatsight/outer_billiard.h"

#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "flatsight/circle_billiard.h"
#include "flatsight/error.h"
#include "oracles.h"

namespace flatsight {
namespace {

// Corner of the support lines with normals phi and phi + shift, solved as a
// plain 2x2 system.
Point2 corner(const SupportShape& s, double phi, double shift) {
  const double psi = phi + shift;
  const auto v = oracle::solve2(std::cos(phi), std::sin(phi), std::cos(psi),
                                std::sin(psi), s.h(phi), s.h(psi));
  REQUIRE(v);
  return {v->x, v->y};
}

TEST_CASE("disk example") {
  const SupportShape disk = SupportShape::disk(1.0);
  const OuterState s0 = outer_start(disk, {std::sqrt(2.0), 0.0});
  CHECK(circular_distance(s0.tangent_normal, Angle(kPi / 4)) < 1e-14);
  const OuterState s1 = outer_step(disk, s0);
  CHECK(s1.point.x == doctest::Approx(0.0).scale(1.0).epsilon(1e-11));
  CHECK(s1.point.y == doctest::Approx(std::sqrt(2.0)).epsilon(1e-11));
  const auto period = detect_period(disk, s0, 20, 1e-8);
  REQUIRE(period);
  CHECK(*period == 4);
}

TEST_CASE("outer step on the disk is conjugate to the circle billiard") {
  const SupportShape disk = SupportShape::disk(1.0);
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const double d = 1.05 + 4.0 * u(rng);
    const double psi = kTwoPi * u(rng);
    const double alpha = 2.0 * std::asin(1.0 / d);
    const OuterState s0 = outer_start(disk, d * unit_vector(Angle(psi)));
    const BilliardState b = step({Angle(psi), alpha / 2}, alpha);
    const OuterState s1 = outer_step(disk, s0);
    CHECK((s1.point - b.position(d)).norm() < 1e-9 * d);
  }
}

TEST_CASE("next point is the corner of the shifted support lines") {
  const SupportShape ell = SupportShape::ellipse(1.5, 1.0);
  std::mt19937_64 rng(29);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 40; ++i) {
    const double t = kTwoPi * u(rng);
    const double d = 1.8 + 3.0 * u(rng);
    const Point2 p{d * std::cos(t), d * std::sin(t)};
    const double alpha = angle_of_sight(ell, p);
    for (Turn turn : {Turn::kCounterclockwise, Turn::kClockwise}) {
      const OuterState s0 = outer_start(ell, p, turn);
      const OuterState s1 = outer_step(ell, s0);
      const double sign = turn == Turn::kCounterclockwise ? 1.0 : -1.0;
      const Point2 ref = corner(ell, s0.tangent_normal.radians(),
                                sign * (kPi - alpha));
      CHECK((s1.point - ref).norm() < 1e-9);
      CHECK(circular_distance(s1.tangent_normal,
                              s0.tangent_normal + sign * (kPi - alpha)) < 1e-9);
      // The new ray heads toward its contact point.
      const Point2 contact = boundary_point(ell, s1.tangent_normal);
      CHECK((contact - s1.point).dot(unit_vector(s1.direction)) > 0.0);
    }
  }
}

TEST_CASE("orbits conserve the sight angle") {
  const SupportShape s = SupportShape::fourier(1.0, {{2, 0.06, 0.0}, {3, 0.0, 0.02}});
  const OuterState s0 = outer_start(s, {2.2, 0.7});
  const double alpha = angle_of_sight(s, s0.point);
  for (const OuterState& st : outer_orbit(s, s0, 50)) {
    CHECK(std::abs(angle_of_sight(s, st.point) - alpha) < 1e-9);
  }
}

TEST_CASE("orthoptic orbit of an ellipse closes after four steps") {
  const SupportShape ell = SupportShape::ellipse(1.5, 1.0);
  const OuterState s0 = outer_start(ell, {0.0, std::sqrt(1.5 * 1.5 + 1.0)});
  const auto period = detect_period(ell, s0, 8, 1e-8);
  REQUIRE(period);
  CHECK(*period == 4);
}

TEST_CASE("disk periods match closure counts") {
  const SupportShape disk = SupportShape::disk(1.0);
  for (int q = 2; q <= 9; ++q) {
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const double d = 1.0 / std::sin(p * kPi / (2 * q));
      const OuterState s0 = outer_start(disk, d * unit_vector(Angle(0.3)));
      const auto period = detect_period(disk, s0, 4 * q, 1e-8);
      REQUIRE(period);
      CHECK(static_cast<int>(*period) == closure_steps(p, q));
    }
  }
}

TEST_CASE("polygon outer step") {
  const SupportShape sq = SupportShape::polygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}});
  const OuterState s0 = outer_start(sq, {3.0, 0.0});
  const OuterState s1 = outer_step(sq, s0);
  CHECK(std::abs(angle_of_sight(sq, s1.point) - angle_of_sight(sq, s0.point)) <
        1e-9);
}

TEST_CASE("outer start rejects interior points") {
  CHECK_THROWS_AS(outer_start(SupportShape::disk(1.0), {0.2, 0.1}), Error);
}

}  // namespace
}  // namespace flatsight
