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

#ifndef FLATSIGHT_GEOMETRY_H_
#define FLATSIGHT_GEOMETRY_H_

#include <cmath>
#include <numbers>
#include <vector>

namespace flatsight {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// |sin(dphi)| below which two lines are treated as parallel.
inline constexpr double kParallelTolerance = 1e-10;

// An angle in radians, always stored in [0, 2*pi).
//
// Angles are measured counterclockwise from the positive x axis.
class Angle {
 public:
  constexpr Angle() = default;
  // Normalizes; throws Error(kNonFinite) for NaN or infinite input.
  explicit Angle(double radians);

  double radians() const noexcept { return value_; }

  Angle operator+(double delta) const { return Angle(value_ + delta); }
  Angle operator-(double delta) const { return Angle(value_ - delta); }
  Angle operator+(Angle other) const { return Angle(value_ + other.value_); }
  Angle operator-(Angle other) const { return Angle(value_ - other.value_); }

  friend bool operator==(Angle a, Angle b) = default;

 private:
  double value_ = 0.0;
};

// Reduces x modulo 2*pi into [0, 2*pi).
Angle normalize_angle(double x);

// Representative of x modulo 2*pi in (-pi, pi].
double wrap_signed(double x);

// Shortest arc between two angles, in [0, pi].
double circular_distance(Angle a, Angle b);

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  Point2 operator+(Point2 o) const { return {x + o.x, y + o.y}; }
  Point2 operator-(Point2 o) const { return {x - o.x, y - o.y}; }
  Point2 operator*(double s) const { return {x * s, y * s}; }
  friend Point2 operator*(double s, Point2 p) { return p * s; }

  double dot(Point2 o) const { return x * o.x + y * o.y; }
  double cross(Point2 o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  // Polar angle of the vector from the origin.
  Angle polar_angle() const { return Angle(std::atan2(y, x)); }

  friend bool operator==(Point2 a, Point2 b) = default;
};

inline Point2 unit_vector(Angle a) {
  return {std::cos(a.radians()), std::sin(a.radians())};
}

inline Point2 point_on_circle(double radius, Angle position) {
  return unit_vector(position) * radius;
}

// The line {x : x . n(normal) = offset}; the associated half-plane is
// x . n <= offset, so for a support line the body lies on that side.
struct OrientedLine {
  Angle normal;
  double offset = 0.0;

  // Signed distance of p from the line; positive on the outer side.
  double signed_distance(Point2 p) const {
    return p.dot(unit_vector(normal)) - offset;
  }

  // Unit vector along the line, pointing counterclockwise from the normal.
  Point2 direction() const { return unit_vector(normal + kPi / 2.0); }

  // Equal as oriented lines, or as unoriented lines via (normal + pi, -p).
  friend bool operator==(const OrientedLine& a, const OrientedLine& b);
};

// Same unoriented line up to the given angular and offset tolerances.
bool same_line(const OrientedLine& a, const OrientedLine& b, double angle_tol,
               double offset_tol);

// Throws Error(kParallelLines) when |sin(phi2 - phi1)| < kParallelTolerance.
Point2 intersect_lines(const OrientedLine& l1, const OrientedLine& l2);

// Zero, one (tangency) or two points of the line on the circle of the given
// radius centered at the origin. Two points are ordered counterclockwise
// starting from the clockwise side of the normal direction.
std::vector<Point2> line_circle_intersections(const OrientedLine& line,
                                              double radius);

}  // namespace flatsight

#endif  // FLATSIGHT_GEOMETRY_H_
