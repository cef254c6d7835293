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

#include "flatsight/convex_shape.h"

#include <cmath>
#include <random>
#include <vector>

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

TEST_CASE("support values of analytic shapes") {
  const SupportShape disk = SupportShape::disk(1.5);
  CHECK(disk.h(0.7) == 1.5);
  CHECK(*disk.eval(0.7).d2h == 0.0);

  const SupportShape ell = SupportShape::ellipse(2.0, 1.0);
  CHECK(ell.h(0.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(ell.h(kPi / 2) == doctest::Approx(1.0).epsilon(1e-15));
  // h'' at 0 is (b^2 - a^2)/a = -1.5.
  const SupportValues v0 = ell.eval(0.0);
  CHECK(*v0.d2h == doctest::Approx(-1.5).epsilon(1e-14));
  const auto h = [&](double t) { return ell.h(t); };
  for (double phi : {0.0, 0.3, 1.1, 2.5, 4.0, 5.9}) {
    const SupportValues v = ell.eval(phi);
    CHECK(*v.dh == doctest::Approx(oracle::central_first(h, phi, 1e-5))
                       .epsilon(1e-8));
    CHECK(*v.d2h == doctest::Approx(oracle::central_second(h, phi, 1e-4))
                        .epsilon(1e-5));
  }

  const SupportShape four =
      SupportShape::fourier(1.0, {{3, 0.05, 0.02}, {2, -0.01, 0.03}});
  const auto hf = [&](double t) { return four.h(t); };
  for (double phi : {0.1, 1.7, 3.3}) {
    CHECK(*four.eval(phi).d2h ==
          doctest::Approx(oracle::central_second(hf, phi, 1e-4)).epsilon(1e-5));
  }
}

TEST_CASE("boundary points lie on their support lines") {
  const SupportShape ell = SupportShape::ellipse(2.0, 1.0);
  for (int i = 0; i < 64; ++i) {
    const Angle phi(kTwoPi * i / 64);
    const Point2 x = boundary_point(ell, phi);
    CHECK(std::abs(x.dot(unit_vector(phi)) - ell.h(phi.radians())) < 1e-14);
    // And on the ellipse itself.
    CHECK(x.x * x.x / 4.0 + x.y * x.y == doctest::Approx(1.0).epsilon(1e-14));
  }
  const SupportShape sq = SupportShape::polygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}});
  CHECK(kind_of([&] { boundary_point(sq, Angle(0.3)); }) ==
        ErrorKind::kUnsupportedForPolygon);
}

TEST_CASE("tangents from an exterior point") {
  const SupportShape disk = SupportShape::disk(1.0);
  const TangentPair t = tangents_from(disk, {2.0, 0.0});
  CHECK(wrap_signed(t.first.radians()) == doctest::Approx(-kPi / 3).epsilon(1e-14));
  CHECK(wrap_signed(t.second.radians()) == doctest::Approx(kPi / 3).epsilon(1e-14));
  CHECK(kind_of([&] { tangents_from(disk, {0.5, 0.0}); }) ==
        ErrorKind::kPointInsideShape);

  // (0, sqrt 5) lies on the orthoptic circle of the 2x1 ellipse.
  const SupportShape ell = SupportShape::ellipse(2.0, 1.0);
  const TangentPair te = tangents_from(ell, {0.0, std::sqrt(5.0)});
  CHECK(circular_distance(te.first, te.second) ==
        doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(angle_of_sight(ell, {0.0, std::sqrt(5.0)}) ==
        doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(kind_of([&] { tangents_from(ell, {1.0, 0.0}); }) ==
        ErrorKind::kPointInsideShape);
}

TEST_CASE("angle of sight agrees with ray casting") {
  const SupportShape ell = SupportShape::ellipse(2.0, 1.0);
  const int rays = 1000000;
  for (const oracle::Vec p : {oracle::Vec{3.0, 0.5}, oracle::Vec{-1.0, 2.0},
                              oracle::Vec{0.2, -4.0}}) {
    const double ref = oracle::ray_cast_aperture(p, 2.0, 1.0, rays);
    CHECK(std::abs(angle_of_sight(ell, {p.x, p.y}) - ref) <
          4.0 * kTwoPi / rays);
  }
}

TEST_CASE("disk sight formula and monotonicity in distance") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const double rho = 0.1 + 3.0 * u(rng);
    const double d1 = rho * (1.0 + 0.01 + 5.0 * u(rng));
    const double d2 = d1 * (1.0 + u(rng));
    const SupportShape disk = SupportShape::disk(rho);
    const double t = kTwoPi * u(rng);
    const double a1 = angle_of_sight(disk, d1 * Point2{std::cos(t), std::sin(t)});
    const double a2 = angle_of_sight(disk, d2 * Point2{std::cos(t), std::sin(t)});
    CHECK(std::abs(a1 - 2.0 * std::asin(rho / d1)) < 1e-10);
    CHECK(a2 < a1);
  }
}

TEST_CASE("tangent lines pass through the point") {
  const SupportShape shape =
      SupportShape::fourier(1.0, {{3, 0.04, 0.0}, {2, 0.0, 0.05}});
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double t = kTwoPi * u(rng);
    const double d = 1.3 + 4.0 * u(rng);
    const Point2 p{d * std::cos(t), d * std::sin(t)};
    const TangentPair tp = tangents_from(shape, p);
    CHECK(std::abs(support_line(shape, tp.first).signed_distance(p)) < 1e-12 * d);
    CHECK(std::abs(support_line(shape, tp.second).signed_distance(p)) < 1e-12 * d);
    const double sight = angle_of_sight(shape, p);
    CHECK(sight > 0.0);
    CHECK(sight < kPi);
  }
}

TEST_CASE("polygon support and tangents") {
  const SupportShape sq = SupportShape::polygon({{1, -1}, {1, 1}, {-1, 1}, {-1, -1}});
  CHECK(sq.h(0.0) == doctest::Approx(1.0));
  CHECK(sq.h(kPi / 4) == doctest::Approx(std::sqrt(2.0)));
  CHECK_FALSE(sq.eval(0.2).dh.has_value());
  // Ties go to the counterclockwise side of the normal.
  const Point2 v = support_point(sq, Angle(0.0));
  CHECK(v.x == 1.0);
  CHECK(v.y == 1.0);
  // From (3, 0) the square spans vertices (1, -1) and (1, 1).
  CHECK(angle_of_sight(sq, {3.0, 0.0}) ==
        doctest::Approx(2.0 * std::atan(0.5)).epsilon(1e-14));
  CHECK(shape_diameter(sq) == doctest::Approx(2.0 * std::sqrt(2.0)));
}

TEST_CASE("shape validation") {
  CHECK(kind_of([] { SupportShape::disk(-1.0); }) == ErrorKind::kInvalidShape);
  CHECK(kind_of([] { SupportShape::ellipse(1.0, 0.0); }) ==
        ErrorKind::kInvalidShape);
  // Clockwise order.
  CHECK(kind_of([] {
          SupportShape::polygon({{1, 1}, {1, -1}, {-1, -1}, {-1, 1}});
        }) == ErrorKind::kInvalidShape);
  // Origin outside.
  CHECK(kind_of([] {
          SupportShape::polygon({{1, 1}, {2, 1}, {2, 2}, {1, 2}});
        }) == ErrorKind::kInvalidShape);
  // A strong third harmonic makes h + h'' negative.
  bool threw = false;
  try {
    SupportShape::fourier(1.0, {{3, 0.2, 0.0}});
  } catch (const ConvexityError& e) {
    threw = true;
    CHECK(e.min_value() == doctest::Approx(1.0 - 8.0 * 0.2).epsilon(1e-6));
  }
  CHECK(threw);
}

TEST_CASE("convexity report of an ellipse") {
  // min of h + h'' is the minimal curvature radius b^2 / a.
  const ConvexityReport r = convexity_report(SupportShape::ellipse(2.0, 1.0));
  CHECK(r.min_curvature_radius == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.min_h == doctest::Approx(1.0).epsilon(1e-12));
}

}  // namespace
}  // namespace flatsight
