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

// Shape files (JSON), CSV tables and SVG drawings. All writers are
// deterministic: the same input always produces the same bytes.

#ifndef FLATSIGHT_IO_H_
#define FLATSIGHT_IO_H_

#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flatsight/circle_billiard.h"
#include "flatsight/convex_shape.h"
#include "flatsight/isoptic.h"
#include "flatsight/outer_billiard.h"

namespace flatsight {

// Shape file schema:
//   {"type": "disk",    "rho": 1.0}
//   {"type": "ellipse", "a": 2.0, "b": 1.0}
//   {"type": "fourier", "a0": 1.0, "harmonics": [[m, a_m, b_m], ...]}
//   {"type": "sinbeta", "r": 1.0, "p": 2, "q": 3,
//                       "terms": [[l, k_l, delta_l], ...]}
//   {"type": "polygon", "vertices": [[x, y], ...]}
// Errors: kParse with line/field diagnostics, or the shape's own
// validation errors.
SupportShape parse_shape_json(std::string_view text);
SupportShape load_shape_file(const std::filesystem::path& path);
std::string shape_to_json(const SupportShape& shape);

// Significant digits used in CSV output: 17 unless FLATSIGHT_CSV_DIGITS
// holds an integer in [1, 17].
int csv_digits();
std::string format_number(double v, int digits);

// Columns: step, psi, beta, chord_normal, chord_offset.
void write_orbit_csv(std::ostream& out, const OrbitRecord& orbit);
// Same columns for an outer-billiard orbit: psi is the polar angle of the
// point, beta = psi + pi/2 - tangent_normal, and the chord is the support
// line carrying the outgoing ray.
void write_outer_orbit_csv(std::ostream& out, const SupportShape& shape,
                           std::span<const OuterState> states);
// Columns: phi, x, y.
void write_curve_csv(std::ostream& out, const IsopticCurve& curve);

// Minimal SVG 1.1 document with a square viewBox centered on the origin.
// Coordinates are given in the mathematical frame (y up).
class SvgDocument {
 public:
  // `extent` is the half-width of the drawing before the 5% margin.
  explicit SvgDocument(double extent);

  void polyline(std::span<const Point2> pts, bool closed,
                std::string_view stroke, std::string_view fill = "none",
                double width_fraction = 0.004, bool dashed = false);
  void segment(Point2 a, Point2 b, std::string_view stroke,
               double width_fraction = 0.003);
  void dot(Point2 p, std::string_view fill, double radius_fraction = 0.008);

  std::string str() const;

 private:
  double extent_;
  std::vector<std::string> elements_;
};

// 720-point samples of the circle of radius r and of a shape's boundary.
std::vector<Point2> circle_polyline(double radius, int n = 720);
std::vector<Point2> shape_polyline(const SupportShape& shape, int n = 720);

void write_text_file(const std::filesystem::path& path, std::string_view text);

}  // namespace flatsight

#endif  // FLATSIGHT_IO_H_
