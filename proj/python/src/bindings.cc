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

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "flatsight/circle_billiard.h"
#include "flatsight/classify.h"
#include "flatsight/construction.h"
#include "flatsight/convex_shape.h"
#include "flatsight/error.h"
#include "flatsight/io.h"
#include "flatsight/isoptic.h"
#include "flatsight/outer_billiard.h"

namespace py = pybind11;
using namespace flatsight;

namespace {

using XY = std::pair<double, double>;

Point2 to_point(XY p) { return {p.first, p.second}; }
XY to_xy(Point2 p) { return {p.x, p.y}; }

std::vector<XY> to_xy(const std::vector<Point2>& pts) {
  std::vector<XY> out;
  out.reserve(pts.size());
  for (const Point2& p : pts) out.push_back(to_xy(p));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Constant-angle billiards and isoptics of convex bodies.";

  py::register_exception<Error>(m, "FlatsightError", PyExc_ValueError);

  py::class_<SupportShape>(m, "Shape")
      .def_static("disk", &SupportShape::disk, py::arg("radius"))
      .def_static("ellipse", &SupportShape::ellipse, py::arg("a"), py::arg("b"))
      .def_static(
          "polygon",
          [](const std::vector<XY>& vertices) {
            std::vector<Point2> v;
            for (const XY& p : vertices) v.push_back(to_point(p));
            return SupportShape::polygon(std::move(v));
          },
          py::arg("vertices"))
      .def_static("from_json", &parse_shape_json, py::arg("text"))
      .def("to_json", &shape_to_json)
      .def("h", &SupportShape::h, py::arg("phi"))
      .def_property_readonly("is_smooth", &SupportShape::is_smooth)
      .def("min_curvature_radius", [](const SupportShape& s) {
        return convexity_report(s).min_curvature_radius;
      });

  m.def(
      "build_shape",
      [](int p, int q, double r, double k, double delta) {
        return build_shape(p, q, r, AntiPeriodicProfile::single_mode(q, k, delta));
      },
      py::arg("p"), py::arg("q"), py::arg("r"), py::arg("k"),
      py::arg("delta") = 0.0,
      "Shape with h = r sin(p pi/(2q) + k sin(q phi + delta)).");

  m.def(
      "angle_of_sight",
      [](const SupportShape& s, XY p) { return angle_of_sight(s, to_point(p)); },
      py::arg("shape"), py::arg("point"));

  m.def(
      "tangents",
      [](const SupportShape& s, XY p) {
        const TangentPair t = tangents_from(s, to_point(p));
        return std::make_pair(t.first.radians(), t.second.radians());
      },
      py::arg("shape"), py::arg("point"));

  m.def(
      "isoptic",
      [](const SupportShape& s, double alpha, int n) {
        return to_xy(isoptic_curve(s, alpha, n).points());
      },
      py::arg("shape"), py::arg("alpha"), py::arg("n") = 720);

  m.def(
      "circle_fit",
      [](const std::vector<XY>& pts) {
        std::vector<Point2> v;
        for (const XY& p : pts) v.push_back(to_point(p));
        const CircleFit f = circle_fit(v);
        return py::make_tuple(to_xy(f.center), f.radius, f.max_deviation);
      },
      py::arg("points"), "Returns ((cx, cy), radius, max_deviation).");

  m.def("classify", [](int p, int q) { return std::string(to_string(classify(p, q))); },
        py::arg("p"), py::arg("q"));
  m.def("antiperiodic_modes", &antiperiodic_modes, py::arg("p"), py::arg("q"),
        py::arg("m_max"));
  m.def("closure_steps", &closure_steps, py::arg("p"), py::arg("q"));

  m.def(
      "circle_orbit",
      [](double alpha, double beta0, std::size_t steps, double psi0, double radius) {
        const OrbitRecord rec = orbit({Angle(psi0), beta0}, alpha, radius, steps);
        std::vector<XY> out;
        for (const BilliardState& s : rec.states) {
          out.emplace_back(s.psi.radians(), s.beta);
        }
        return out;
      },
      py::arg("alpha"), py::arg("beta0"), py::arg("steps"), py::arg("psi0") = 0.0,
      py::arg("radius") = 1.0, "List of (psi, beta) states.");

  m.def(
      "outer_orbit",
      [](const SupportShape& s, XY start, std::size_t steps, bool clockwise) {
        const OuterState s0 = outer_start(
            s, to_point(start), clockwise ? Turn::kClockwise : Turn::kCounterclockwise);
        std::vector<XY> out;
        for (const OuterState& st : outer_orbit(s, s0, steps)) {
          out.push_back(to_xy(st.point));
        }
        return out;
      },
      py::arg("shape"), py::arg("start"), py::arg("steps"),
      py::arg("clockwise") = false);

  m.def(
      "outer_period",
      [](const SupportShape& s, XY start, std::size_t max_steps, double tol)
          -> std::optional<std::size_t> {
        return detect_period(s, outer_start(s, to_point(start)), max_steps, tol);
      },
      py::arg("shape"), py::arg("start"), py::arg("max_steps") = 10000,
      py::arg("tol") = 1e-8);

  m.def(
      "beta_residual",
      [](const SupportShape& s, double alpha, double r, int n) {
        return beta_residual(s, alpha, r, n);
      },
      py::arg("shape"), py::arg("alpha"), py::arg("r"), py::arg("n") = kResidualGrid);

  m.def(
      "rigid_residual",
      [](int p, int q, double k, int n) {
        const BetaFunction b = rigid_extend_theta(ThetaArcProfile(kPi / q, {k}), p, q);
        return beta_residual(b, p * kPi / q, n);
      },
      py::arg("p"), py::arg("q"), py::arg("k"), py::arg("n") = kResidualGrid);
}
