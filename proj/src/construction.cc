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

#include "flatsight/construction.h"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "flatsight/classify.h"
#include "flatsight/error.h"

namespace flatsight {

SupportShape build_shape(int p, int q, double r, const AntiPeriodicProfile& w) {
  const RationalAngle angle(p, q);
  if (!(r > 0.0) || !std::isfinite(r)) {
    throw Error(ErrorKind::kOutOfRange, "circle radius must be positive");
  }
  const double alpha = angle.radians();
  if (w.is_zero()) return SupportShape::disk(r * std::sin(alpha / 2.0));

  if (!angle.odd_difference()) {
    throw Error(ErrorKind::kParityObstruction,
                "q-p=" + std::to_string(q - p) +
                    " is even; only the disk has constant angle " +
                    std::to_string(p) + "/" + std::to_string(q) + " pi");
  }
  if (w.q_base() != angle.q()) {
    throw Error(ErrorKind::kOutOfRange,
                "profile base " + std::to_string(w.q_base()) +
                    " does not match q=" + std::to_string(q));
  }

  const double gamma = angle.normal_advance();
  const double tol = 1e-12 * std::max(1.0, w.sup_bound());
  for (int i = 0; i < kConvexityGrid; ++i) {
    const double phi = kTwoPi * i / kConvexityGrid;
    const double wv = w.value(phi);
    if (std::abs(w.value(phi + gamma) + wv) > tol) {
      throw Error(ErrorKind::kParityObstruction,
                  "profile is not anti-periodic at phi=" + std::to_string(phi));
    }
    const double beta = alpha / 2.0 + wv;
    if (!(beta > 0.0 && beta < kPi / 2.0)) {
      throw Error(ErrorKind::kBetaOutOfRange,
                  "alpha/2 + w = " + std::to_string(beta) +
                      " leaves (0, pi/2) at phi=" + std::to_string(phi));
    }
  }
  return SupportShape::sin_beta(r, angle.p(), angle.q(), w);
}

BetaFunction beta_of_shape(const SupportShape& shape, double r) {
  return BetaFunction([shape, r](double psi) {
    const Point2 pos = point_on_circle(r, Angle(psi));
    const TangentPair t = tangents_from(shape, pos);
    // P is the clockwise endpoint of the outgoing chord:
    // psi = normal - (pi/2 - beta).
    return wrap_signed(psi + kPi / 2.0 - t.second.radians());
  });
}

double beta_residual(const BetaFunction& beta, double alpha, int n) {
  if (n < 1) throw Error(ErrorKind::kOutOfRange, "grid must be positive");
  double worst = 0.0;
  for (int i = 0; i < n; ++i) {
    const double psi = kTwoPi * i / n;
    const double b = beta(psi);
    const double next = psi + kPi - 2.0 * b;
    worst = std::max(worst, std::abs(beta(next) - (alpha - b)));
  }
  return worst;
}

double beta_residual(const SupportShape& shape, double alpha, double r,
                     int n) {
  for (int i = 0; i < kConvexityGrid; ++i) {
    const double phi = kTwoPi * i / kConvexityGrid;
    if (!(shape.h(phi) < r)) {
      throw Error(ErrorKind::kPointInsideShape,
                  "shape is not strictly inside the circle of radius " +
                      std::to_string(r));
    }
  }
  return beta_residual(beta_of_shape(shape, r), alpha, n);
}

BetaFunction rigid_extend_theta(const ThetaArcProfile& theta, int p, int q) {
  const RationalAngle angle(p, q);
  const double arc = kPi / angle.q();
  if (std::abs(theta.arc_length() - arc) > 1e-12) {
    throw Error(ErrorKind::kOutOfRange,
                "theta arc length must be pi/q = " + std::to_string(arc));
  }
  const double alpha = angle.radians();
  if (!angle.odd_difference() && !theta.is_zero()) {
    throw Error(ErrorKind::kParityObstruction,
                "q-p even: the rotated extension cannot be consistent with "
                "nonzero theta");
  }
  double sup = 0.0;
  for (double c : theta.sine_coeffs()) sup += std::abs(c);
  if (!(sup < alpha / 2.0)) {
    throw Error(ErrorKind::kBetaOutOfRange,
                "sup|theta| may reach alpha/2 = " + std::to_string(alpha / 2));
  }
  const int arcs = 2 * angle.q();
  return BetaFunction([theta, alpha, arc, arcs](double psi) {
    const double u = Angle(psi).radians();
    const int j = std::min(static_cast<int>(u / arc), arcs - 1);
    const double local = u - j * arc;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    return alpha / 2.0 + sign * theta.value(local);
  });
}

Envelope envelope_from_lines(std::span<const OrientedLine> lines) {
  if (lines.size() < 3) {
    throw Error(ErrorKind::kOutOfRange, "envelope needs at least 3 lines");
  }
  std::vector<OrientedLine> sorted(lines.begin(), lines.end());
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const OrientedLine& a, const OrientedLine& b) {
                     return a.normal.radians() < b.normal.radians();
                   });
  Envelope env;
  env.polyline.reserve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const OrientedLine& a = sorted[i];
    const OrientedLine& b = sorted[(i + 1) % sorted.size()];
    try {
      env.polyline.push_back(intersect_lines(a, b));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::kParallelLines) throw;
      ++env.skipped_parallel;
    }
  }
  return env;
}

}  // namespace flatsight
