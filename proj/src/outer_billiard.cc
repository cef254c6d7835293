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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <variant>

#include "flatsight/error.h"

namespace flatsight {
namespace {

constexpr int kScanPoints = 64;

// Where the ray leaves the body: the contact point farthest along the
// direction of travel.
Point2 ray_origin(const SupportShape& shape, const OuterState& s) {
  const auto* poly = std::get_if<Polygon>(&shape.variant());
  if (poly == nullptr) return boundary_point(shape, s.tangent_normal);
  const Point2 n = unit_vector(s.tangent_normal);
  const Point2 d = unit_vector(s.direction);
  const double h = shape.h(s.tangent_normal.radians());
  const double tol = 1e-12 * std::max(1.0, std::abs(h));
  Point2 best;
  double best_t = -std::numeric_limits<double>::infinity();
  for (const Point2& v : poly->vertices) {
    if (v.dot(n) < h - tol) continue;
    if (v.dot(d) > best_t) {
      best_t = v.dot(d);
      best = v;
    }
  }
  return best;
}

// Sight angle at points of the tangent ray. Points closer to the contact
// than the tangent solver can resolve see the body under an angle of pi.
double sight_on_ray(const SupportShape& shape, Point2 x) {
  try {
    return angle_of_sight(shape, x);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kPointInsideShape ||
        e.kind() == ErrorKind::kBracketingFailed) {
      return kPi;
    }
    throw;
  }
}

OuterState step_impl(const SupportShape& shape, const OuterState& s,
                     double alpha, double diameter, OuterStepStats* stats) {
  if (!(alpha > 0.0 && alpha < kPi)) {
    throw Error(ErrorKind::kOutOfRange, "sight angle must lie in (0, pi)");
  }
  const Point2 origin = ray_origin(shape, s);
  const Point2 d = unit_vector(s.direction);
  auto g = [&](double t) { return sight_on_ray(shape, origin + d * t) - alpha; };

  double lo = 1e-9 * diameter;
  double hi = 64.0 * diameter;
  if (!(g(lo) > 0.0)) {
    throw Error(ErrorKind::kBracketingFailed,
                "sight angle next to the contact point is already below alpha");
  }
  while (g(hi) > 0.0) {
    hi *= 2.0;
    if (hi > 1e6 * diameter) {
      throw Error(ErrorKind::kBracketingFailed,
                  "no point on the tangent ray sees alpha within 1e6 diameters");
    }
  }

  // The sight angle should fall monotonically along the ray; scan on a
  // geometric grid and keep the first sign change.
  const double ratio = std::pow(hi / lo, 1.0 / (kScanPoints - 1));
  double prev_t = lo;
  double prev_g = g(lo);
  int violations = 0;
  bool bracketed = false;
  for (int i = 1; i < kScanPoints; ++i) {
    const double t = (i == kScanPoints - 1) ? hi : lo * std::pow(ratio, i);
    const double cur = g(t);
    if (cur > prev_g) ++violations;
    if (!bracketed && prev_g > 0.0 && cur <= 0.0) {
      lo = prev_t;
      hi = t;
      bracketed = true;
    }
    prev_t = t;
    prev_g = cur;
  }

  int iterations = 0;
  const double tol = 1e-12 * diameter;
  while (hi - lo > tol && iterations < 200) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
    ++iterations;
  }
  if (stats != nullptr) {
    stats->bisection_iterations = iterations;
    stats->monotonicity_violations = violations;
  }

  OuterState next;
  next.point = origin + d * (0.5 * (lo + hi));
  const TangentPair t = tangents_from(shape, next.point);
  next.tangent_normal =
      circular_distance(t.first, s.tangent_normal) >
              circular_distance(t.second, s.tangent_normal)
          ? t.first
          : t.second;
  const Point2 contact = support_point(shape, next.tangent_normal);
  const Angle forward = next.tangent_normal + kPi / 2.0;
  next.direction = (contact - next.point).dot(unit_vector(forward)) > 0.0
                       ? forward
                       : next.tangent_normal - kPi / 2.0;
  return next;
}

}  // namespace

OuterState outer_start(const SupportShape& shape, Point2 p, Turn turn) {
  const TangentPair t = tangents_from(shape, p);
  if (turn == Turn::kCounterclockwise) {
    return {p, t.second, t.second + kPi / 2.0};
  }
  return {p, t.first, t.first - kPi / 2.0};
}

OuterState outer_step(const SupportShape& shape, const OuterState& s) {
  return outer_step(shape, s, angle_of_sight(shape, s.point));
}

OuterState outer_step(const SupportShape& shape, const OuterState& s,
                      double alpha, OuterStepStats* stats) {
  return step_impl(shape, s, alpha, shape_diameter(shape), stats);
}

std::vector<OuterState> outer_orbit(const SupportShape& shape,
                                    const OuterState& s0, std::size_t n) {
  const double alpha = angle_of_sight(shape, s0.point);
  const double diameter = shape_diameter(shape);
  std::vector<OuterState> states;
  states.reserve(n + 1);
  states.push_back(s0);
  for (std::size_t k = 0; k < n; ++k) {
    states.push_back(step_impl(shape, states.back(), alpha, diameter, nullptr));
  }
  return states;
}

std::optional<std::size_t> detect_period(const SupportShape& shape,
                                         const OuterState& s0,
                                         std::size_t max_steps, double tol) {
  const double alpha = angle_of_sight(shape, s0.point);
  const double diameter = shape_diameter(shape);
  OuterState cur = s0;
  for (std::size_t m = 1; m <= max_steps; ++m) {
    cur = step_impl(shape, cur, alpha, diameter, nullptr);
    if ((cur.point - s0.point).norm() <= tol &&
        circular_distance(cur.tangent_normal, s0.tangent_normal) <=
            tol / diameter) {
      return m;
    }
  }
  return std::nullopt;
}

}  // namespace flatsight
