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

#ifndef FLATSIGHT_ISOPTIC_H_
#define FLATSIGHT_ISOPTIC_H_

#include <span>
#include <vector>

#include "flatsight/convex_shape.h"

namespace flatsight {

struct IsopticSample {
  Angle phi;  // normal of the first support line
  Point2 point;
};

// Locus of points seeing the shape under a fixed angle. Sample i is the
// intersection of the support lines with normals phi_i and phi_i + pi -
// alpha, for phi_i = 2 pi i / N.
struct IsopticCurve {
  std::vector<IsopticSample> samples;
  double alpha = 0.0;

  std::vector<Point2> points() const;
};

// Error(kOutOfRange) unless 0 < alpha < pi and n >= 3.
IsopticCurve isoptic_curve(const SupportShape& shape, double alpha, int n);

struct CircleFit {
  Point2 center;
  double radius = 0.0;
  double max_deviation = 0.0;  // max | |P - center| - radius |
};

// Algebraic least squares followed by one Gauss-Newton step on the
// geometric residual. Error(kOutOfRange) for fewer than 8 points,
// Error(kDegenerateFit) for (nearly) collinear input.
CircleFit circle_fit(std::span<const Point2> points);
CircleFit circle_fit(const IsopticCurve& curve);

// Distances from `origin` along `direction` at which the ray crosses the
// closed polyline, ascending. A star-shaped curve yields exactly one.
std::vector<double> ray_crossings(std::span<const Point2> closed_polyline,
                                  Point2 origin, Angle direction);

}  // namespace flatsight

#endif  // FLATSIGHT_ISOPTIC_H_
