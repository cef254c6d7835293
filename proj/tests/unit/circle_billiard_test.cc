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

#include "flatsight/circle_billiard.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include "doctest.h"
#include "flatsight/error.h"

namespace flatsight {
namespace {

// Angle at b between the segments to a and c.
double vertex_angle(Point2 a, Point2 b, Point2 c) {
  const Point2 u = a - b;
  const Point2 v = c - b;
  return std::atan2(std::abs(u.cross(v)), u.dot(v));
}

TEST_CASE("step examples") {
  const double alpha = 2.0 * kPi / 3.0;
  const BilliardState s{Angle(0.0), alpha / 2.0};
  const BilliardState t = step(s, alpha);
  CHECK(t.psi.radians() == doctest::Approx(kPi / 3.0).epsilon(1e-15));
  CHECK(t.beta == doctest::Approx(alpha / 2.0).epsilon(1e-15));
  const OrientedLine c = chord(s, 2.0);
  CHECK(c.offset == doctest::Approx(2.0 * std::sin(alpha / 2.0)));
  CHECK(c.normal.radians() == doctest::Approx(kPi / 2.0 - alpha / 2.0));
}

TEST_CASE("step rejects beta outside (0, alpha)") {
  const auto kind = [](double beta, double alpha) {
    try {
      step({Angle(0.0), beta}, alpha);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::kParse;
  };
  CHECK(kind(0.0, 1.0) == ErrorKind::kBetaOutOfRange);
  CHECK(kind(1.0, 1.0) == ErrorKind::kBetaOutOfRange);
  CHECK(kind(0.5, kPi) == ErrorKind::kBetaOutOfRange);
}

TEST_CASE("each bounce point sees its two chords under alpha") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double alpha = 0.05 + (kPi - 0.1) * u(rng);
    // Both beta and alpha - beta below pi/2, so the center lies inside the
    // wedge at each bounce point.
    const double lo = std::max(0.0, alpha - kPi / 2);
    const double hi = std::min(alpha, kPi / 2);
    const double beta = lo + (hi - lo) * (0.02 + 0.96 * u(rng));
    const double r = 0.5 + 2.0 * u(rng);
    const OrbitRecord rec = orbit({Angle(kTwoPi * u(rng)), beta}, alpha, r, 4);
    for (int k = 1; k < 4; ++k) {
      const double seen = vertex_angle(rec.states[k - 1].position(r),
                                       rec.states[k].position(r),
                                       rec.states[k + 1].position(r));
      CHECK(std::abs(seen - alpha) < 1e-9);
    }
    // Chord k passes through both of its end points.
    for (int k = 0; k < 4; ++k) {
      const OrientedLine& l = rec.chords[k];
      CHECK(std::abs(l.signed_distance(rec.states[k].position(r))) < 1e-12 * r);
      CHECK(std::abs(l.signed_distance(rec.states[k + 1].position(r))) < 1e-12 * r);
    }
  }
}

TEST_CASE("step properties") {
  std::mt19937_64 rng(19);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    const double alpha = 0.05 + (kPi - 0.1) * u(rng);
    const BilliardState s{Angle(kTwoPi * u(rng)), alpha * (0.01 + 0.98 * u(rng))};
    const BilliardState t = step(step(s, alpha), alpha);
    const BilliardState d = step_double(s, alpha);
    CHECK(circular_distance(t.psi, d.psi) < 1e-13);
    CHECK(std::abs(t.beta - s.beta) < 1e-15);
    const BilliardState back = step_inverse(step(s, alpha), alpha);
    CHECK(circular_distance(back.psi, s.psi) < 1e-13);
    CHECK(std::abs(back.beta - s.beta) < 1e-15);
    // Chord normals advance by pi - alpha.
    const OrientedLine c0 = chord(s, 1.0);
    const OrientedLine c1 = chord(step(s, alpha), 1.0);
    CHECK(circular_distance(c1.normal, c0.normal + (kPi - alpha)) < 1e-13);
  }
}

TEST_CASE("orbit stores the exact beta alternation") {
  const OrbitRecord rec = orbit({Angle(0.4), 0.3}, 1.0, 1.0, 9);
  REQUIRE(rec.states.size() == 10);
  REQUIRE(rec.chords.size() == 9);
  for (std::size_t k = 0; k + 1 < rec.states.size(); ++k) {
    CHECK(rec.states[k].beta + rec.states[k + 1].beta == 1.0);
    if (k + 2 < rec.states.size()) {
      CHECK(rec.states[k + 2].beta == rec.states[k].beta);
    }
  }
}

TEST_CASE("orbit betas sum to alpha bitwise for random inputs") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 2000; ++i) {
    const double alpha = 0.01 + (kPi - 0.02) * u(rng);
    const double beta0 = alpha * (0.001 + 0.998 * u(rng));
    const OrbitRecord rec = orbit({Angle(0.0), beta0}, alpha, 1.0, 3);
    CHECK(std::abs(rec.states[0].beta - beta0) <=
          std::nextafter(alpha, 4.0) - alpha);
    for (std::size_t k = 0; k + 1 < rec.states.size(); ++k) {
      CHECK(rec.states[k].beta + rec.states[k + 1].beta == alpha);
    }
  }
}

TEST_CASE("closure steps") {
  CHECK(closure_steps(2, 3) == 6);
  CHECK(closure_steps(1, 3) == 3);
  CHECK(closure_steps(1, 6) == 12);
  CHECK(closure_steps(3, 8) == 16);
  CHECK(closure_steps(1, 5) == 5);
  // Against direct iteration of the regular orbit.
  for (int q = 2; q <= 12; ++q) {
    for (int p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const double alpha = p * kPi / q;
      const OrbitRecord rec =
          orbit({Angle(0.0), alpha / 2.0}, alpha, 1.0, 2 * q);
      int first = 0;
      for (int k = 1; k <= 2 * q; ++k) {
        if (circular_distance(rec.states[k].psi, Angle(0.0)) < 1e-9) {
          first = k;
          break;
        }
      }
      CHECK(first == closure_steps(p, q));
    }
  }
}

TEST_CASE("slope gap") {
  std::vector<OrientedLine> lines;
  for (int i = 0; i < 4; ++i) lines.push_back({Angle(i * kPi / 4.0), 1.0});
  CHECK(slope_gap(lines) == doctest::Approx(kPi / 4.0));
  // Opposite normals give the same slope.
  lines.push_back({Angle(kPi + 0.1), 1.0});
  CHECK(slope_gap(lines) == doctest::Approx(kPi / 4.0));
  const std::vector<OrientedLine> one{{Angle(0.0), 1.0}};
  CHECK_THROWS_AS(slope_gap(one), Error);
}

TEST_CASE("find_regular_start") {
  const double alpha = 1.2;
  const BetaFunction b([&](double psi) { return alpha / 2 + 0.1 * std::sin(psi - 1.0); });
  const Angle s = find_regular_start(b, alpha);
  CHECK(std::abs(b(s.radians()) - alpha / 2) < 1e-13);
  const BetaFunction flat([&](double) { return alpha / 2; });
  CHECK(find_regular_start(flat, alpha).radians() == 0.0);
  const BetaFunction high([&](double psi) { return alpha / 2 + 0.2 + 0.1 * std::sin(psi); });
  CHECK_THROWS_AS(find_regular_start(high, alpha), Error);
}

}  // namespace
}  // namespace flatsight
