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

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <utility>

#include "flatsight/error.h"

namespace flatsight {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) {
    throw Error(ErrorKind::kInvalidShape, std::string(what) + " is not finite");
  }
}

SupportValues eval_disk(const Disk& d, double) { return {d.radius, 0.0, 0.0}; }

SupportValues eval_ellipse(const Ellipse& e, double phi) {
  const double a2 = e.a * e.a;
  const double b2 = e.b * e.b;
  const double c = std::cos(phi);
  const double s = std::sin(phi);
  // g = h^2 = a^2 c^2 + b^2 s^2.
  const double g = a2 * c * c + b2 * s * s;
  const double dg = (b2 - a2) * std::sin(2.0 * phi);
  const double d2g = 2.0 * (b2 - a2) * std::cos(2.0 * phi);
  const double h = std::sqrt(g);
  const double dh = dg / (2.0 * h);
  const double d2h = d2g / (2.0 * h) - dg * dg / (4.0 * h * g);
  return {h, dh, d2h};
}

SupportValues eval_fourier(const FourierSupport& f, double phi) {
  double h = f.a0;
  double dh = 0.0;
  double d2h = 0.0;
  for (const auto& hm : f.harmonics) {
    const double m = hm.m;
    const double c = std::cos(m * phi);
    const double s = std::sin(m * phi);
    h += hm.a * c + hm.b * s;
    dh += m * (-hm.a * s + hm.b * c);
    d2h -= m * m * (hm.a * c + hm.b * s);
  }
  return {h, dh, d2h};
}

SupportValues eval_sin_beta(const SinBeta& s, double phi) {
  const double beta = s.alpha() / 2.0 + s.profile.value(phi);
  const double w1 = s.profile.first_derivative(phi);
  const double w2 = s.profile.second_derivative(phi);
  const double sb = std::sin(beta);
  const double cb = std::cos(beta);
  return {s.r * sb, s.r * cb * w1, s.r * (cb * w2 - sb * w1 * w1)};
}

double polygon_h(const Polygon& poly, double phi) {
  const Point2 n{std::cos(phi), std::sin(phi)};
  double best = -std::numeric_limits<double>::infinity();
  for (const Point2& v : poly.vertices) best = std::max(best, v.dot(n));
  return best;
}

void validate_smooth(const SupportShape& shape) {
  const ConvexityReport report = convexity_report(shape);
  if (!(report.min_h > 0.0)) {
    throw Error(ErrorKind::kInvalidShape,
                "origin is not interior (min h = " +
                    std::to_string(report.min_h) + ")");
  }
  if (!(report.min_curvature_radius > 1e-9 * report.mean_h)) {
    throw ConvexityError(report.min_curvature_radius, report.at_phi);
  }
}

// f(phi) = P . n(phi) - h(phi); positive exactly on the arc of normals whose
// support lines separate P from the body.
struct Bracket {
  double lo;
  double hi;
};

struct ScanResult {
  double max_f = -std::numeric_limits<double>::infinity();
  std::vector<Bracket> rising;
  std::vector<Bracket> falling;
};

template <class F>
ScanResult scan_sign_changes(const F& f, int n) {
  ScanResult out;
  const double step = kTwoPi / n;
  const double f0 = f(0.0);
  double prev = f0;
  out.max_f = f0;
  for (int i = 1; i <= n; ++i) {
    const double phi = i * step;
    const double cur = (i == n) ? f0 : f(phi);
    out.max_f = std::max(out.max_f, cur);
    if (prev <= 0.0 && cur > 0.0) out.rising.push_back({phi - step, phi});
    if (prev > 0.0 && cur <= 0.0) out.falling.push_back({phi - step, phi});
    prev = cur;
  }
  return out;
}

template <class F>
double bisect(const F& f, Bracket b, bool rising, double tol) {
  double lo = b.lo;
  double hi = b.hi;
  for (int it = 0; it < 200 && hi - lo > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const bool positive = f(mid) > 0.0;
    if (positive == rising) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return 0.5 * (lo + hi);
}

TangentPair disk_tangents(const Disk& d, Point2 p, double outside_tol) {
  const double dist = p.norm();
  if (!(dist - d.radius > outside_tol)) {
    throw Error(ErrorKind::kPointInsideShape, "point is not outside the disk");
  }
  const double psi = std::atan2(p.y, p.x);
  const double delta = std::acos(d.radius / dist);
  return {Angle(psi - delta), Angle(psi + delta)};
}

TangentPair polygon_tangents(const Polygon& poly, Point2 p,
                             double outside_tol) {
  const auto& v = poly.vertices;
  double max_outside = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < v.size(); ++i) {
    const Point2 e = v[(i + 1) % v.size()] - v[i];
    max_outside = std::max(max_outside, -e.cross(p - v[i]) / e.norm());
  }
  if (!(max_outside > outside_tol)) {
    throw Error(ErrorKind::kPointInsideShape,
                "point is not outside the polygon");
  }
  // The origin is interior, so every vertex is seen within (-pi, pi) of the
  // direction from P toward the origin.
  const double toward_origin = std::atan2(-p.y, -p.x);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  double dir_lo = 0.0;
  double dir_hi = 0.0;
  for (const Point2& q : v) {
    const double dir = std::atan2(q.y - p.y, q.x - p.x);
    const double rel = wrap_signed(dir - toward_origin);
    if (rel < lo) {
      lo = rel;
      dir_lo = dir;
    }
    if (rel > hi) {
      hi = rel;
      dir_hi = dir;
    }
  }
  // The body lies to the right of the extreme counterclockwise ray and to
  // the left of the extreme clockwise one.
  return {Angle(dir_hi + kPi / 2.0), Angle(dir_lo - kPi / 2.0)};
}

TangentPair smooth_tangents(const SupportShape& shape, Point2 p,
                            const TangentOptions& opt) {
  auto f = [&](double phi) {
    return p.x * std::cos(phi) + p.y * std::sin(phi) - shape.h(phi);
  };
  ScanResult scan = scan_sign_changes(f, opt.grid);
  if (scan.rising.size() != 1 || scan.falling.size() != 1 ||
      !(scan.max_f > opt.outside_tol)) {
    scan = scan_sign_changes(f, opt.refined_grid);
  }
  if (!(scan.max_f > opt.outside_tol)) {
    throw Error(ErrorKind::kPointInsideShape, "point is not outside the shape");
  }
  if (scan.rising.size() != 1 || scan.falling.size() != 1) {
    throw Error(ErrorKind::kBracketingFailed,
                "found " + std::to_string(scan.rising.size()) + "/" +
                    std::to_string(scan.falling.size()) +
                    " tangent brackets on a grid of " +
                    std::to_string(opt.refined_grid));
  }
  const double first = bisect(f, scan.rising.front(), true, opt.bisection_tol);
  const double second =
      bisect(f, scan.falling.front(), false, opt.bisection_tol);
  return {Angle(first), Angle(second)};
}

}  // namespace

SupportShape SupportShape::disk(double radius) {
  require_finite(radius, "disk radius");
  if (!(radius > 0.0)) {
    throw Error(ErrorKind::kInvalidShape, "disk radius must be positive");
  }
  return SupportShape(Disk{radius});
}

SupportShape SupportShape::ellipse(double a, double b) {
  require_finite(a, "ellipse a");
  require_finite(b, "ellipse b");
  if (!(b > 0.0) || !(a >= b)) {
    throw Error(ErrorKind::kInvalidShape, "ellipse needs a >= b > 0");
  }
  return SupportShape(Ellipse{a, b});
}

SupportShape SupportShape::fourier(
    double a0, std::vector<FourierSupport::Harmonic> harmonics) {
  require_finite(a0, "a0");
  for (const auto& hm : harmonics) {
    if (hm.m < 1) {
      throw Error(ErrorKind::kInvalidShape, "harmonic order must be >= 1");
    }
    require_finite(hm.a, "harmonic a");
    require_finite(hm.b, "harmonic b");
  }
  SupportShape shape(FourierSupport{a0, std::move(harmonics)});
  validate_smooth(shape);
  return shape;
}

SupportShape SupportShape::sin_beta(double r, int p, int q,
                                    AntiPeriodicProfile profile) {
  require_finite(r, "r");
  if (!(r > 0.0) || p < 1 || q <= p) {
    throw Error(ErrorKind::kInvalidShape, "sinbeta needs r > 0, 0 < p < q");
  }
  SupportShape shape(SinBeta{r, p, q, std::move(profile)});
  validate_smooth(shape);
  return shape;
}

SupportShape SupportShape::polygon(std::vector<Point2> vertices) {
  const std::size_t n = vertices.size();
  if (n < 3) {
    throw Error(ErrorKind::kInvalidShape, "polygon needs at least 3 vertices");
  }
  for (const Point2& v : vertices) {
    require_finite(v.x, "vertex x");
    require_finite(v.y, "vertex y");
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 a = vertices[i];
    const Point2 b = vertices[(i + 1) % n];
    const Point2 c = vertices[(i + 2) % n];
    if (!((b - a).cross(c - b) > 0.0)) {
      throw Error(ErrorKind::kInvalidShape,
                  "polygon is not strictly convex and counterclockwise at "
                  "vertex " + std::to_string((i + 1) % n));
    }
    if (!((b - a).cross(Point2{} - a) > 0.0)) {
      throw Error(ErrorKind::kInvalidShape,
                  "origin is not strictly inside the polygon");
    }
  }
  return SupportShape(Polygon{std::move(vertices)});
}

ShapeKind SupportShape::kind() const {
  return std::visit(Overloaded{
                        [](const Disk&) { return ShapeKind::kDisk; },
                        [](const Ellipse&) { return ShapeKind::kEllipse; },
                        [](const FourierSupport&) { return ShapeKind::kFourier; },
                        [](const SinBeta&) { return ShapeKind::kSinBeta; },
                        [](const Polygon&) { return ShapeKind::kPolygon; },
                    },
                    shape_);
}

double SupportShape::h(double phi) const {
  if (const auto* poly = std::get_if<Polygon>(&shape_)) {
    return polygon_h(*poly, phi);
  }
  return eval(phi).h;
}

SupportValues SupportShape::eval(double phi) const {
  return std::visit(
      Overloaded{
          [&](const Disk& d) { return eval_disk(d, phi); },
          [&](const Ellipse& e) { return eval_ellipse(e, phi); },
          [&](const FourierSupport& f) { return eval_fourier(f, phi); },
          [&](const SinBeta& s) { return eval_sin_beta(s, phi); },
          [&](const Polygon& p) { return SupportValues{polygon_h(p, phi), std::nullopt, std::nullopt}; },
      },
      shape_);
}

ConvexityReport convexity_report(const SupportShape& shape, int grid) {
  if (!shape.is_smooth()) {
    throw Error(ErrorKind::kUnsupportedForPolygon,
                "convexity report needs a smooth shape");
  }
  ConvexityReport report;
  report.min_h = std::numeric_limits<double>::infinity();
  report.min_curvature_radius = std::numeric_limits<double>::infinity();
  double sum = 0.0;
  for (int i = 0; i < grid; ++i) {
    const double phi = kTwoPi * i / grid;
    const SupportValues v = shape.eval(phi);
    sum += v.h;
    report.min_h = std::min(report.min_h, v.h);
    const double rc = v.h + *v.d2h;
    if (rc < report.min_curvature_radius) {
      report.min_curvature_radius = rc;
      report.at_phi = phi;
    }
  }
  report.mean_h = sum / grid;
  return report;
}

SupportValues support_eval(const SupportShape& shape, Angle phi) {
  return shape.eval(phi.radians());
}

OrientedLine support_line(const SupportShape& shape, Angle phi) {
  return {phi, shape.h(phi.radians())};
}

Point2 boundary_point(const SupportShape& shape, Angle phi) {
  if (!shape.is_smooth()) {
    throw Error(ErrorKind::kUnsupportedForPolygon,
                "boundary_point needs a smooth shape");
  }
  const SupportValues v = shape.eval(phi.radians());
  const double c = std::cos(phi.radians());
  const double s = std::sin(phi.radians());
  return {v.h * c - *v.dh * s, v.h * s + *v.dh * c};
}

std::size_t polygon_support_vertex(const Polygon& polygon, Angle phi) {
  const Point2 n = unit_vector(phi);
  const Point2 along = unit_vector(phi + kPi / 2.0);
  double max_h = -std::numeric_limits<double>::infinity();
  for (const Point2& v : polygon.vertices) max_h = std::max(max_h, v.dot(n));
  const double tol = 1e-12 * std::max(1.0, std::abs(max_h));
  std::size_t best = polygon.vertices.size();
  for (std::size_t i = 0; i < polygon.vertices.size(); ++i) {
    const Point2 v = polygon.vertices[i];
    if (v.dot(n) < max_h - tol) continue;
    if (best == polygon.vertices.size() ||
        v.dot(along) > polygon.vertices[best].dot(along)) {
      best = i;
    }
  }
  return best;
}

Point2 support_point(const SupportShape& shape, Angle phi) {
  if (const auto* poly = std::get_if<Polygon>(&shape.variant())) {
    return poly->vertices[polygon_support_vertex(*poly, phi)];
  }
  return boundary_point(shape, phi);
}

double shape_diameter(const SupportShape& shape) {
  if (const auto* poly = std::get_if<Polygon>(&shape.variant())) {
    double d = 0.0;
    for (const Point2& a : poly->vertices) {
      for (const Point2& b : poly->vertices) d = std::max(d, (a - b).norm());
    }
    return d;
  }
  // For a convex body the diameter equals the maximal width.
  double d = 0.0;
  for (int i = 0; i < kConvexityGrid / 2; ++i) {
    const double phi = kTwoPi * i / kConvexityGrid;
    d = std::max(d, shape.h(phi) + shape.h(phi + kPi));
  }
  return d;
}

TangentPair tangents_from(const SupportShape& shape, Point2 p,
                          const TangentOptions& options) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
    throw Error(ErrorKind::kNonFinite, "point is not finite");
  }
  if (const auto* d = std::get_if<Disk>(&shape.variant())) {
    return disk_tangents(*d, p, options.outside_tol);
  }
  if (const auto* poly = std::get_if<Polygon>(&shape.variant())) {
    return polygon_tangents(*poly, p, options.outside_tol);
  }
  return smooth_tangents(shape, p, options);
}

double angle_of_sight(const SupportShape& shape, Point2 p,
                      const TangentOptions& options) {
  const TangentPair t = tangents_from(shape, p, options);
  return kPi - (t.second - t.first).radians();
}

}  // namespace flatsight
