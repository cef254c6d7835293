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

#include "flatsight/isoptic.h"

#include <algorithm>
#include <cmath>
#include <string>

#include <Eigen/Dense>

#include "flatsight/error.h"

namespace flatsight {

std::vector<Point2> IsopticCurve::points() const {
  std::vector<Point2> out;
  out.reserve(samples.size());
  for (const IsopticSample& s : samples) out.push_back(s.point);
  return out;
}

IsopticCurve isoptic_curve(const SupportShape& shape, double alpha, int n) {
  if (!(alpha > 0.0 && alpha < kPi)) {
    throw Error(ErrorKind::kOutOfRange, "alpha must lie in (0, pi)");
  }
  if (n < 3) throw Error(ErrorKind::kOutOfRange, "need at least 3 samples");
  const double gap = kPi - alpha;
  IsopticCurve curve;
  curve.alpha = alpha;
  curve.samples.reserve(n);
  for (int i = 0; i < n; ++i) {
    const Angle phi(kTwoPi * i / n);
    const Point2 x =
        intersect_lines(support_line(shape, phi), support_line(shape, phi + gap));
    curve.samples.push_back({phi, x});
  }
  return curve;
}

CircleFit circle_fit(std::span<const Point2> points) {
  const auto n = static_cast<Eigen::Index>(points.size());
  if (n < 8) {
    throw Error(ErrorKind::kOutOfRange, "circle fit needs at least 8 points");
  }
  // Center and scale the data so the algebraic system is well conditioned.
  Point2 mean;
  for (const Point2& p : points) mean = mean + p;
  mean = mean * (1.0 / double(n));
  double scale = 0.0;
  for (const Point2& p : points) scale += (p - mean).dot(p - mean);
  scale = std::sqrt(scale / double(n));
  if (!(scale > 0.0)) {
    throw Error(ErrorKind::kDegenerateFit, "all points coincide");
  }

  // x^2 + y^2 + D x + E y + F = 0 in normalized coordinates.
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point2 u = (points[i] - mean) * (1.0 / scale);
    a(i, 0) = u.x;
    a(i, 1) = u.y;
    a(i, 2) = 1.0;
    rhs(i) = -(u.x * u.x + u.y * u.y);
  }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(a, Eigen::ComputeThinU |
                                               Eigen::ComputeThinV);
  const auto& sv = svd.singularValues();
  if (sv(2) < 1e-10 * sv(0)) {
    throw Error(ErrorKind::kDegenerateFit, "points are nearly collinear");
  }
  const Eigen::Vector3d coef = svd.solve(rhs);
  double cx = -coef(0) / 2.0;
  double cy = -coef(1) / 2.0;
  const double r2 = cx * cx + cy * cy - coef(2);
  if (!(r2 > 0.0) || r2 > 1e16) {
    throw Error(ErrorKind::kDegenerateFit, "no finite circle fits the points");
  }
  double radius = std::sqrt(r2);

  // One Gauss-Newton step on the geometric distances.
  Eigen::MatrixXd jac(n, 3);
  Eigen::VectorXd res(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Point2 u = (points[i] - mean) * (1.0 / scale);
    const double dx = u.x - cx;
    const double dy = u.y - cy;
    const double d = std::hypot(dx, dy);
    res(i) = d - radius;
    jac(i, 0) = d > 0.0 ? -dx / d : 0.0;
    jac(i, 1) = d > 0.0 ? -dy / d : 0.0;
    jac(i, 2) = -1.0;
  }
  const Eigen::Vector3d delta = jac.colPivHouseholderQr().solve(-res);
  if (delta.allFinite()) {
    cx += delta(0);
    cy += delta(1);
    radius += delta(2);
  }

  CircleFit fit;
  fit.center = mean + Point2{cx, cy} * scale;
  fit.radius = radius * scale;
  for (const Point2& p : points) {
    fit.max_deviation = std::max(
        fit.max_deviation, std::abs((p - fit.center).norm() - fit.radius));
  }
  return fit;
}

CircleFit circle_fit(const IsopticCurve& curve) {
  const std::vector<Point2> pts = curve.points();
  return circle_fit(pts);
}

std::vector<double> ray_crossings(std::span<const Point2> closed_polyline,
                                  Point2 origin, Angle direction) {
  const Point2 d = unit_vector(direction);
  std::vector<double> hits;
  const std::size_t n = closed_polyline.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = closed_polyline[i] - origin;
    const Point2 b = closed_polyline[(i + 1) % n] - origin;
    const Point2 e = b - a;
    const double denom = d.cross(e);
    if (denom == 0.0) continue;
    // origin + t d = a + s e.
    const double t = a.cross(e) / denom;
    const double s = a.cross(d) / denom;
    // Half-open in s so a ray through a vertex counts once.
    if (t > 0.0 && s >= 0.0 && s < 1.0) hits.push_back(t);
  }
  std::sort(hits.begin(), hits.end());
  return hits;
}

}  // namespace flatsight
