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
#include <string>

#include "flatsight/classify.h"
#include "flatsight/error.h"

namespace flatsight {
namespace {

void check_state(const BilliardState& s, double alpha) {
  if (!(alpha > 0.0 && alpha < kPi)) {
    throw Error(ErrorKind::kBetaOutOfRange,
                "alpha " + std::to_string(alpha) + " outside (0, pi)");
  }
  if (!(s.beta > 0.0 && s.beta < alpha)) {
    throw Error(ErrorKind::kBetaOutOfRange,
                "beta " + std::to_string(s.beta) + " outside (0, alpha)");
  }
}

}  // namespace

BilliardState step(const BilliardState& s, double alpha) {
  check_state(s, alpha);
  return {s.psi + (kPi - 2.0 * s.beta), alpha - s.beta};
}

BilliardState step_inverse(const BilliardState& s, double alpha) {
  check_state(s, alpha);
  return {s.psi - (kPi - 2.0 * (alpha - s.beta)), alpha - s.beta};
}

BilliardState step_double(const BilliardState& s, double alpha) {
  check_state(s, alpha);
  return {s.psi - 2.0 * alpha, s.beta};
}

OrientedLine chord(const BilliardState& s, double radius) {
  return {s.psi + (kPi / 2.0 - s.beta), radius * std::sin(s.beta)};
}

OrbitRecord orbit(const BilliardState& s0, double alpha, double radius,
                  std::size_t n) {
  if (!(radius > 0.0)) {
    throw Error(ErrorKind::kOutOfRange, "radius must be positive");
  }
  check_state(s0, alpha);
  // alpha - beta_odd is exact (Sterbenz), so beta_even + beta_odd == alpha
  // holds in floating point. beta_even differs from s0.beta by at most one
  // rounding of alpha - s0.beta.
  const double beta_odd = alpha - s0.beta;
  const double beta_even = alpha - beta_odd;
  OrbitRecord rec;
  rec.alpha = alpha;
  rec.radius = radius;
  rec.states.reserve(n + 1);
  rec.chords.reserve(n);
  rec.states.push_back({s0.psi, beta_even});
  check_state(rec.states.front(), alpha);
  for (std::size_t k = 0; k < n; ++k) {
    const BilliardState& cur = rec.states.back();
    rec.chords.push_back(chord(cur, radius));
    BilliardState next = step(cur, alpha);
    next.beta = (k % 2 == 0) ? beta_odd : beta_even;
    rec.states.push_back(next);
  }
  return rec;
}

int closure_steps(int p, int q) {
  const RationalAngle angle(p, q);
  // Each step advances the position by (q - p) pi / q.
  const int period = 2 * angle.q();
  return period / std::gcd(angle.q() - angle.p(), period);
}

double slope_gap(std::span<const OrientedLine> chords) {
  if (chords.size() < 2) {
    throw Error(ErrorKind::kOutOfRange, "slope_gap needs at least two chords");
  }
  std::vector<double> slopes;
  slopes.reserve(chords.size());
  for (const OrientedLine& l : chords) {
    double s = std::fmod(l.normal.radians(), kPi);
    if (s >= kPi) s = 0.0;
    slopes.push_back(s);
  }
  std::sort(slopes.begin(), slopes.end());
  double gap = slopes.front() + kPi - slopes.back();
  for (std::size_t i = 1; i < slopes.size(); ++i) {
    gap = std::max(gap, slopes[i] - slopes[i - 1]);
  }
  return gap;
}

double slope_gap(const OrbitRecord& orbit) { return slope_gap(orbit.chords); }

Angle find_regular_start(const BetaFunction& beta, double alpha, int grid) {
  const double target = alpha / 2.0;
  auto g = [&](double psi) { return beta(psi) - target; };
  const double step_size = kTwoPi / grid;
  double prev = g(0.0);
  if (prev == 0.0) return Angle(0.0);
  double max_dev = std::abs(prev);
  for (int i = 1; i <= grid; ++i) {
    const double psi = i * step_size;
    const double cur = g(psi);
    max_dev = std::max(max_dev, std::abs(cur));
    if (cur == 0.0) return Angle(psi);
    if ((prev < 0.0) != (cur < 0.0)) {
      double lo = psi - step_size;
      double hi = psi;
      const bool rising = prev < 0.0;
      for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double v = g(mid);
        if (std::abs(v) < 1e-14) return Angle(mid);
        if ((v > 0.0) == rising) {
          hi = mid;
        } else {
          lo = mid;
        }
      }
      return Angle(0.5 * (lo + hi));
    }
    prev = cur;
  }
  if (max_dev < 1e-10) return Angle(0.0);
  throw Error(ErrorKind::kNoSignChange,
              "beta - alpha/2 keeps one sign (max deviation " +
                  std::to_string(max_dev) + ")");
}

}  // namespace flatsight
