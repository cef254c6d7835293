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

// Convex bodies described by their support function h(phi), the signed
// distance from the origin to the support line with outward normal phi.
// The origin is required to lie strictly inside every shape.

#ifndef FLATSIGHT_CONVEX_SHAPE_H_
#define FLATSIGHT_CONVEX_SHAPE_H_

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "flatsight/geometry.h"
#include "flatsight/profile.h"

namespace flatsight {

inline constexpr int kConvexityGrid = 4096;

struct Disk {
  double radius = 1.0;
};

// Axis-aligned, centered at the origin, a >= b > 0.
struct Ellipse {
  double a = 1.0;
  double b = 1.0;
};

struct FourierSupport {
  struct Harmonic {
    int m = 1;
    double a = 0.0;  // cos coefficient
    double b = 0.0;  // sin coefficient
  };
  double a0 = 1.0;
  std::vector<Harmonic> harmonics;
};

// h(phi) = r * sin(p*pi/(2q) + w(phi)).
struct SinBeta {
  double r = 1.0;
  int p = 1;
  int q = 2;
  AntiPeriodicProfile profile;

  double alpha() const { return p * kPi / q; }
};

// Counterclockwise, strictly convex, origin strictly inside.
struct Polygon {
  std::vector<Point2> vertices;
};

enum class ShapeKind { kDisk, kEllipse, kFourier, kSinBeta, kPolygon };

struct SupportValues {
  double h = 0.0;
  std::optional<double> dh;   // absent for polygons
  std::optional<double> d2h;  // absent for polygons
};

class SupportShape {
 public:
  using Variant = std::variant<Disk, Ellipse, FourierSupport, SinBeta, Polygon>;

  // Each factory validates its input: Error(kInvalidShape) for malformed
  // parameters or an exterior origin, ConvexityError when h + h'' is not
  // strictly positive on the validation grid.
  static SupportShape disk(double radius);
  static SupportShape ellipse(double a, double b);
  static SupportShape fourier(double a0,
                              std::vector<FourierSupport::Harmonic> harmonics);
  static SupportShape sin_beta(double r, int p, int q,
                               AntiPeriodicProfile profile);
  static SupportShape polygon(std::vector<Point2> vertices);

  const Variant& variant() const { return shape_; }
  ShapeKind kind() const;
  bool is_smooth() const { return kind() != ShapeKind::kPolygon; }

  double h(double phi) const;
  SupportValues eval(double phi) const;

 private:
  explicit SupportShape(Variant v) : shape_(std::move(v)) {}

  Variant shape_;
};

struct ConvexityReport {
  double min_h = 0.0;
  double min_curvature_radius = 0.0;  // min of h + h''
  double at_phi = 0.0;                // where min_curvature_radius occurs
  double mean_h = 0.0;
};

// Samples h and h + h'' on a uniform grid. Smooth shapes only.
ConvexityReport convexity_report(const SupportShape& shape,
                                 int grid = kConvexityGrid);

SupportValues support_eval(const SupportShape& shape, Angle phi);

OrientedLine support_line(const SupportShape& shape, Angle phi);

// (h cos - h' sin, h sin + h' cos). Error(kUnsupportedForPolygon).
Point2 boundary_point(const SupportShape& shape, Angle phi);

// Boundary point for smooth shapes; for polygons the vertex attaining the
// support value (ties broken toward the counterclockwise side of phi).
Point2 support_point(const SupportShape& shape, Angle phi);

// Index of the polygon vertex maximizing v . n(phi).
std::size_t polygon_support_vertex(const Polygon& polygon, Angle phi);

double shape_diameter(const SupportShape& shape);

struct TangentOptions {
  int grid = 1024;
  int refined_grid = 8192;
  double bisection_tol = 1e-13;
  double outside_tol = 1e-9;
};

// Outward normals of the two support lines through an exterior point.
// `first` is where P . n(phi) - h(phi) turns positive going
// counterclockwise, so normalize(second - first) lies in (0, pi).
struct TangentPair {
  Angle first;
  Angle second;
};

// Errors: kPointInsideShape, kBracketingFailed.
TangentPair tangents_from(const SupportShape& shape, Point2 p,
                          const TangentOptions& options = {});

// Aperture of the cone of rays from p that meet the shape, in (0, pi).
double angle_of_sight(const SupportShape& shape, Point2 p,
                      const TangentOptions& options = {});

}  // namespace flatsight

#endif  // FLATSIGHT_CONVEX_SHAPE_H_
