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

#include <algorithm>
#include <cmath>
#include <string>

#include "flatsight/error.h"

namespace flatsight {

Angle::Angle(double radians) {
  if (!std::isfinite(radians)) {
    throw Error(ErrorKind::kNonFinite, "angle is not finite");
  }
  double r = std::fmod(radians, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  // A tiny negative input rounds up to exactly 2*pi.
  if (r >= kTwoPi) r = 0.0;
  value_ = r;
}

Angle normalize_angle(double x) { return Angle(x); }

double wrap_signed(double x) {
  double r = Angle(x).radians();
  return r > kPi ? r - kTwoPi : r;
}

double circular_distance(Angle a, Angle b) {
  return std::abs(wrap_signed(a.radians() - b.radians()));
}

bool operator==(const OrientedLine& a, const OrientedLine& b) {
  if (a.normal == b.normal && a.offset == b.offset) return true;
  return (a.normal + kPi) == b.normal && -a.offset == b.offset;
}

bool same_line(const OrientedLine& a, const OrientedLine& b, double angle_tol,
               double offset_tol) {
  if (circular_distance(a.normal, b.normal) <= angle_tol &&
      std::abs(a.offset - b.offset) <= offset_tol) {
    return true;
  }
  return circular_distance(a.normal + kPi, b.normal) <= angle_tol &&
         std::abs(a.offset + b.offset) <= offset_tol;
}

Point2 intersect_lines(const OrientedLine& l1, const OrientedLine& l2) {
  const double phi1 = l1.normal.radians();
  const double phi2 = l2.normal.radians();
  // Written so that swapping the arguments negates numerators and the
  // determinant exactly; the result is bitwise symmetric.
  const double det = std::sin(phi2 - phi1);
  if (std::abs(det) < kParallelTolerance) {
    throw Error(ErrorKind::kParallelLines,
                "normals " + std::to_string(phi1) + " and " +
                    std::to_string(phi2) + " are parallel");
  }
  const double x =
      (l1.offset * std::sin(phi2) - l2.offset * std::sin(phi1)) / det;
  const double y =
      (l2.offset * std::cos(phi1) - l1.offset * std::cos(phi2)) / det;
  return {x, y};
}

std::vector<Point2> line_circle_intersections(const OrientedLine& line,
                                              double radius) {
  if (!(radius > 0.0)) {
    throw Error(ErrorKind::kOutOfRange, "circle radius must be positive");
  }
  const double p = line.offset;
  const Point2 n = unit_vector(line.normal);
  const Point2 along = line.direction();
  const Point2 foot = n * p;
  const double slack = std::abs(p) - radius;
  if (slack > 1e-12 * radius) return {};
  if (slack >= -1e-12 * radius) return {foot * (radius / std::abs(p))};
  const double half = std::sqrt((radius - p) * (radius + p));
  return {foot - along * half, foot + along * half};
}

}  // namespace flatsight
