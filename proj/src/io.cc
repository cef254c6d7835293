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

#include "flatsight/io.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>
#include <variant>

#include "flatsight/construction.h"
#include "flatsight/error.h"
#include "json.hpp"

namespace flatsight {
namespace {

using nlohmann::json;

[[noreturn]] void field_error(const std::string& field,
                              const std::string& what) {
  throw Error(ErrorKind::kParse, "field '" + field + "': " + what);
}

const json& require(const json& doc, const std::string& field) {
  auto it = doc.find(field);
  if (it == doc.end()) field_error(field, "missing");
  return *it;
}

double number_at(const json& v, const std::string& field) {
  if (!v.is_number()) field_error(field, "expected a number");
  return v.get<double>();
}

int integer_at(const json& v, const std::string& field) {
  if (!v.is_number_integer()) field_error(field, "expected an integer");
  return v.get<int>();
}

// Rows of a fixed arity, e.g. [[m, a, b], ...].
const json& rows_at(const json& doc, const std::string& field,
                    std::size_t arity) {
  const json& rows = require(doc, field);
  if (!rows.is_array()) field_error(field, "expected an array");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != arity) {
      field_error(field + "[" + std::to_string(i) + "]",
                  "expected an array of " + std::to_string(arity) +
                      " numbers");
    }
  }
  return rows;
}

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  // Avoid "-0.000000" so output does not depend on the sign of zero.
  if (std::string(buf) == "-0.000000") return "0.000000";
  return buf;
}

}  // namespace

SupportShape parse_shape_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
  if (!doc.is_object()) {
    throw Error(ErrorKind::kParse, "shape file must hold a JSON object");
  }
  const json& type_field = require(doc, "type");
  if (!type_field.is_string()) field_error("type", "expected a string");
  const std::string type = type_field.get<std::string>();

  if (type == "disk") {
    return SupportShape::disk(number_at(require(doc, "rho"), "rho"));
  }
  if (type == "ellipse") {
    return SupportShape::ellipse(number_at(require(doc, "a"), "a"),
                                 number_at(require(doc, "b"), "b"));
  }
  if (type == "fourier") {
    std::vector<FourierSupport::Harmonic> harmonics;
    const json& rows = rows_at(doc, "harmonics", 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string f = "harmonics[" + std::to_string(i) + "]";
      harmonics.push_back({integer_at(rows[i][0], f + "[0]"),
                           number_at(rows[i][1], f + "[1]"),
                           number_at(rows[i][2], f + "[2]")});
    }
    return SupportShape::fourier(number_at(require(doc, "a0"), "a0"),
                                 std::move(harmonics));
  }
  if (type == "sinbeta") {
    const int p = integer_at(require(doc, "p"), "p");
    const int q = integer_at(require(doc, "q"), "q");
    std::vector<AntiPeriodicProfile::Term> terms;
    const json& rows = rows_at(doc, "terms", 3);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string f = "terms[" + std::to_string(i) + "]";
      terms.push_back({integer_at(rows[i][0], f + "[0]"),
                       number_at(rows[i][1], f + "[1]"),
                       number_at(rows[i][2], f + "[2]")});
    }
    return build_shape(p, q, number_at(require(doc, "r"), "r"),
                       AntiPeriodicProfile(q, std::move(terms)));
  }
  if (type == "polygon") {
    std::vector<Point2> vertices;
    const json& rows = rows_at(doc, "vertices", 2);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::string f = "vertices[" + std::to_string(i) + "]";
      vertices.push_back(
          {number_at(rows[i][0], f + "[0]"), number_at(rows[i][1], f + "[1]")});
    }
    return SupportShape::polygon(std::move(vertices));
  }
  field_error("type", "unknown shape type \"" + type + "\"");
}

SupportShape load_shape_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kParse, "cannot open " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_shape_json(buf.str());
}

std::string shape_to_json(const SupportShape& shape) {
  json doc;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, Disk>) {
          doc = {{"type", "disk"}, {"rho", s.radius}};
        } else if constexpr (std::is_same_v<T, Ellipse>) {
          doc = {{"type", "ellipse"}, {"a", s.a}, {"b", s.b}};
        } else if constexpr (std::is_same_v<T, FourierSupport>) {
          json rows = json::array();
          for (const auto& hm : s.harmonics) rows.push_back({hm.m, hm.a, hm.b});
          doc = {{"type", "fourier"}, {"a0", s.a0}, {"harmonics", rows}};
        } else if constexpr (std::is_same_v<T, SinBeta>) {
          json rows = json::array();
          for (const auto& t : s.profile.terms()) {
            rows.push_back({t.multiplier, t.amplitude, t.phase});
          }
          doc = {{"type", "sinbeta"}, {"r", s.r},   {"p", s.p},
                 {"q", s.q},          {"terms", rows}};
        } else {
          json rows = json::array();
          for (const Point2& v : s.vertices) rows.push_back({v.x, v.y});
          doc = {{"type", "polygon"}, {"vertices", rows}};
        }
      },
      shape.variant());
  return doc.dump(2) + "\n";
}

int csv_digits() {
  if (const char* env = std::getenv("FLATSIGHT_CSV_DIGITS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 17) {
      return static_cast<int>(v);
    }
  }
  return 17;
}

std::string format_number(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, v);
  return buf;
}

void write_orbit_csv(std::ostream& out, const OrbitRecord& orbit) {
  const int d = csv_digits();
  out << "step,psi,beta,chord_normal,chord_offset\n";
  for (std::size_t k = 0; k < orbit.states.size(); ++k) {
    const BilliardState& s = orbit.states[k];
    // The final state has no outgoing chord in the record; report the one
    // it would emit.
    const OrientedLine c =
        k < orbit.chords.size() ? orbit.chords[k] : chord(s, orbit.radius);
    out << k << ',' << format_number(s.psi.radians(), d) << ','
        << format_number(s.beta, d) << ','
        << format_number(c.normal.radians(), d) << ','
        << format_number(c.offset, d) << '\n';
  }
}

void write_outer_orbit_csv(std::ostream& out, const SupportShape& shape,
                           std::span<const OuterState> states) {
  const int d = csv_digits();
  out << "step,psi,beta,chord_normal,chord_offset\n";
  for (std::size_t k = 0; k < states.size(); ++k) {
    const OuterState& s = states[k];
    const double psi = s.point.polar_angle().radians();
    const double beta = wrap_signed(psi + kPi / 2.0 - s.tangent_normal.radians());
    out << k << ',' << format_number(psi, d) << ',' << format_number(beta, d)
        << ',' << format_number(s.tangent_normal.radians(), d) << ','
        << format_number(shape.h(s.tangent_normal.radians()), d) << '\n';
  }
}

void write_curve_csv(std::ostream& out, const IsopticCurve& curve) {
  const int d = csv_digits();
  out << "phi,x,y\n";
  for (const IsopticSample& s : curve.samples) {
    out << format_number(s.phi.radians(), d) << ','
        << format_number(s.point.x, d) << ',' << format_number(s.point.y, d)
        << '\n';
  }
}

SvgDocument::SvgDocument(double extent) : extent_(1.05 * extent) {
  if (!(extent > 0.0) || !std::isfinite(extent)) {
    throw Error(ErrorKind::kOutOfRange, "SVG extent must be positive");
  }
}

void SvgDocument::polyline(std::span<const Point2> pts, bool closed,
                           std::string_view stroke, std::string_view fill,
                           double width_fraction, bool dashed) {
  std::string e = closed ? "<polygon points=\"" : "<polyline points=\"";
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i > 0) e += ' ';
    e += fixed(pts[i].x) + ',' + fixed(-pts[i].y);
  }
  e += "\" fill=\"" + std::string(fill) + "\" stroke=\"" +
       std::string(stroke) + "\" stroke-width=\"" +
       fixed(width_fraction * 2.0 * extent_) + "\"";
  if (dashed) {
    e += " stroke-dasharray=\"" + fixed(0.02 * extent_) + "," +
         fixed(0.015 * extent_) + "\"";
  }
  e += "/>";
  elements_.push_back(std::move(e));
}

void SvgDocument::segment(Point2 a, Point2 b, std::string_view stroke,
                          double width_fraction) {
  elements_.push_back("<line x1=\"" + fixed(a.x) + "\" y1=\"" + fixed(-a.y) +
                      "\" x2=\"" + fixed(b.x) + "\" y2=\"" + fixed(-b.y) +
                      "\" stroke=\"" + std::string(stroke) +
                      "\" stroke-width=\"" +
                      fixed(width_fraction * 2.0 * extent_) + "\"/>");
}

void SvgDocument::dot(Point2 p, std::string_view fill,
                      double radius_fraction) {
  elements_.push_back("<circle cx=\"" + fixed(p.x) + "\" cy=\"" +
                      fixed(-p.y) + "\" r=\"" +
                      fixed(radius_fraction * 2.0 * extent_) + "\" fill=\"" +
                      std::string(fill) + "\"/>");
}

std::string SvgDocument::str() const {
  const std::string lo = fixed(-extent_);
  const std::string size = fixed(2.0 * extent_);
  std::string out =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      "width=\"600\" height=\"600\" viewBox=\"" +
      lo + " " + lo + " " + size + " " + size + "\">\n";
  out += "<rect x=\"" + lo + "\" y=\"" + lo + "\" width=\"" + size +
         "\" height=\"" + size + "\" fill=\"white\"/>\n";
  for (const std::string& e : elements_) out += e + "\n";
  out += "</svg>\n";
  return out;
}

std::vector<Point2> circle_polyline(double radius, int n) {
  std::vector<Point2> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    pts.push_back(point_on_circle(radius, Angle(kTwoPi * i / n)));
  }
  return pts;
}

std::vector<Point2> shape_polyline(const SupportShape& shape, int n) {
  if (const auto* poly = std::get_if<Polygon>(&shape.variant())) {
    return poly->vertices;
  }
  std::vector<Point2> pts;
  pts.reserve(n);
  for (int i = 0; i < n; ++i) {
    pts.push_back(boundary_point(shape, Angle(kTwoPi * i / n)));
  }
  return pts;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::kParse, "cannot write " + path.string());
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorKind::kParse, "failed writing " + path.string());
}

}  // namespace flatsight
