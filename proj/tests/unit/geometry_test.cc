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

#include "flatsight/geometry.h"

#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"
#include "flatsight/error.h"
#include "oracles.h"

namespace flatsight {
namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an exception");
  return ErrorKind::kParse;
}

TEST_CASE("normalize_angle reduces into [0, 2pi)") {
  CHECK(normalize_angle(kTwoPi).radians() == 0.0);
  CHECK(normalize_angle(-kPi / 2).radians() ==
        doctest::Approx(3 * kPi / 2).epsilon(1e-15));
  CHECK(normalize_angle(7 * kPi).radians() ==
        doctest::Approx(kPi).epsilon(1e-15));
  CHECK(normalize_angle(-1e-300).radians() < kTwoPi);
  CHECK(normalize_angle(-1e-17).radians() == 0.0);
}

TEST_CASE("normalize_angle rejects non-finite input") {
  CHECK(kind_of([] { normalize_angle(std::nan("")); }) ==
        ErrorKind::kNonFinite);
  CHECK(kind_of([] {
          normalize_angle(std::numeric_limits<double>::infinity());
        }) == ErrorKind::kNonFinite);
}

TEST_CASE("angle arithmetic properties") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-50.0, 50.0);
  for (int i = 0; i < 2000; ++i) {
    const double a = u(rng);
    const double b = u(rng);
    const Angle na = normalize_angle(a);
    CHECK(na.radians() >= 0.0);
    CHECK(na.radians() < kTwoPi);
    // Idempotent.
    CHECK(normalize_angle(na.radians()) == na);
    // Additive mod 2pi.
    const Angle lhs = normalize_angle(a + b);
    const Angle rhs =
        normalize_angle(normalize_angle(a).radians() + normalize_angle(b).radians());
    CHECK(circular_distance(lhs, rhs) < 1e-12);
    CHECK(circular_distance(na, normalize_angle(b)) <= kPi);
  }
}

TEST_CASE("intersect_lines on axis-aligned lines") {
  const Point2 p = intersect_lines({Angle(0.0), 1.0}, {Angle(kPi / 2), 1.0});
  CHECK(p.x == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(p.y == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("intersect_lines matches an independent 2x2 solve") {
  // x = 1 and cos(2pi/3) x + sin(2pi/3) y = 1 give (1, sqrt 3).
  const auto ref = oracle::solve2(1.0, 0.0, std::cos(2 * kPi / 3),
                                  std::sin(2 * kPi / 3), 1.0, 1.0);
  REQUIRE(ref);
  CHECK(ref->y == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  const Point2 p = intersect_lines({Angle(0.0), 1.0}, {Angle(2 * kPi / 3), 1.0});
  CHECK(p.x == doctest::Approx(ref->x).epsilon(1e-14));
  CHECK(p.y == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
}

TEST_CASE("intersect_lines rejects parallel lines") {
  CHECK(kind_of([] {
          intersect_lines({Angle(0.0), 1.0}, {Angle(kPi), -1.0});
        }) == ErrorKind::kParallelLines);
  CHECK(kind_of([] {
          intersect_lines({Angle(0.3), 1.0}, {Angle(0.3 + 1e-12), 2.0});
        }) == ErrorKind::kParallelLines);
}

TEST_CASE("intersect_lines is symmetric and lies on both lines") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ang(0.0, kTwoPi);
  std::uniform_real_distribution<double> off(-5.0, 5.0);
  int checked = 0;
  while (checked < 1000) {
    const OrientedLine l1{Angle(ang(rng)), off(rng)};
    const OrientedLine l2{Angle(ang(rng)), off(rng)};
    if (std::abs(std::sin(l2.normal.radians() - l1.normal.radians())) < 1e-3) {
      continue;
    }
    const Point2 a = intersect_lines(l1, l2);
    const Point2 b = intersect_lines(l2, l1);
    CHECK(a == b);
    const double scale = std::max({1.0, std::abs(l1.offset), std::abs(l2.offset)});
    // Conditioning: the residual scales with 1/|sin(dphi)|.
    CHECK(std::abs(l1.signed_distance(a)) < 1e-11 * scale);
    CHECK(std::abs(l2.signed_distance(a)) < 1e-11 * scale);
    ++checked;
  }
}

TEST_CASE("line_circle_intersections") {
  SUBCASE("diameter") {
    const auto pts = line_circle_intersections({Angle(0.0), 0.0}, 1.0);
    REQUIRE(pts.size() == 2);
    CHECK(pts[0].x == doctest::Approx(0.0));
    CHECK(pts[0].y == doctest::Approx(-1.0));
    CHECK(pts[1].y == doctest::Approx(1.0));
  }
  SUBCASE("tangent") {
    const auto pts = line_circle_intersections({Angle(0.0), 1.0}, 1.0);
    REQUIRE(pts.size() == 1);
    CHECK(pts[0].x == doctest::Approx(1.0));
    CHECK(pts[0].y == doctest::Approx(0.0));
  }
  SUBCASE("miss") {
    CHECK(line_circle_intersections({Angle(0.0), 2.0}, 1.0).empty());
  }
  SUBCASE("random chords land on the circle and the line") {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> ang(0.0, kTwoPi);
    std::uniform_real_distribution<double> frac(-0.999, 0.999);
    for (int i = 0; i < 500; ++i) {
      const double r = 0.1 + 10.0 * std::abs(frac(rng));
      const OrientedLine l{Angle(ang(rng)), r * frac(rng)};
      const auto pts = line_circle_intersections(l, r);
      REQUIRE(pts.size() == 2);
      for (const Point2& p : pts) {
        CHECK(std::abs(p.norm() - r) <= 1e-12 * r);
        CHECK(std::abs(l.signed_distance(p)) <= 1e-12 * r);
      }
      // Counterclockwise order: the first point sits at phi - acos(p/r).
      const Angle expected = l.normal - std::acos(l.offset / r);
      CHECK(circular_distance(pts[0].polar_angle(), expected) < 1e-9);
    }
  }
}

TEST_CASE("oriented line equality covers the flipped representation") {
  const OrientedLine a{Angle(0.25), 1.5};
  const OrientedLine b{Angle(0.25 + kPi), -1.5};
  CHECK(a == OrientedLine{Angle(0.25), 1.5});
  CHECK(a == b);
  CHECK_FALSE(a == OrientedLine{Angle(0.25), -1.5});
  CHECK(same_line(a, {Angle(0.25 + 1e-13), 1.5 + 1e-13}, 1e-12, 1e-12));
}

}  // namespace
}  // namespace flatsight
