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

#include "flatsight/cli.h"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "flatsight/circle_billiard.h"
#include "flatsight/classify.h"
#include "flatsight/construction.h"
#include "flatsight/io.h"
#include "flatsight/isoptic.h"
#include "flatsight/outer_billiard.h"

namespace flatsight {
namespace {

namespace fs = std::filesystem;

double parse_real(const std::string& s) {
  if (s.empty()) throw Error(ErrorKind::kParse, "empty number");
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw Error(ErrorKind::kParse, "not a number: \"" + s + "\"");
  }
  return v;
}

std::string num(double v) { return format_number(v, 17); }

// CLI arguments are kept as strings and converted here so that angle
// syntax errors surface as flatsight errors with the usual exit code.
struct ConstructArgs {
  int p = 0, q = 0;
  std::string r, k, delta, out;
};

struct IsopticArgs {
  std::string shape, alpha, out;
  int n = 720;
};

struct CircleOrbitArgs {
  std::string alpha, beta0, psi0 = "0", radius = "1", out;
  int steps = 0;
};

struct OuterOrbitArgs {
  std::string shape, x, y, out;
  int steps = 0;
  bool clockwise = false;
  int max_period = 10000;
  double tol = 1e-8;
};

struct ResidualShapeArgs {
  std::string shape, alpha, r;
  int n = kResidualGrid;
};

struct ResidualRigidArgs {
  int p = 0, q = 0;
  std::string k;
  int n = kResidualGrid;
};

int cmd_classify(int p, int q, std::ostream& out) {
  const Verdict v = classify(p, q);
  const int d = q - p;
  out << to_string(v) << " (q−p=" << d << (d % 2 ? " odd" : " even")
      << ")\n";
  return kExitOk;
}

int cmd_modes(int p, int q, int m_max, std::ostream& out) {
  const std::vector<int> modes = antiperiodic_modes(p, q, m_max);
  out << '[';
  for (std::size_t i = 0; i < modes.size(); ++i) {
    out << (i ? ", " : "") << modes[i];
  }
  out << "]\n";
  return kExitOk;
}

int cmd_construct(const ConstructArgs& a, std::ostream& out) {
  const double r = parse_real(a.r);
  const double k = parse_real(a.k);
  const double delta = parse_angle(a.delta);
  const SupportShape shape =
      build_shape(a.p, a.q, r, AntiPeriodicProfile::single_mode(a.q, k, delta));

  const fs::path svg_path(a.out);
  fs::path json_path = svg_path;
  json_path.replace_extension(".json");
  write_text_file(json_path, shape_to_json(shape));

  SvgDocument svg(r);
  const std::vector<Point2> circle = circle_polyline(r);
  const std::vector<Point2> body = shape_polyline(shape);
  svg.polyline(body, true, "#1f4e79", "#cfe2f3");
  svg.polyline(circle, true, "#555555", "none", 0.003, true);
  svg.dot({0.0, 0.0}, "#000000");
  write_text_file(svg_path, svg.str());

  out << "shape: " << json_path.string() << "\n";
  out << "svg: " << svg_path.string() << "\n";
  if (shape.is_smooth()) {
    out << "min(h+h''): " << num(convexity_report(shape).min_curvature_radius)
        << "\n";
  }
  return kExitOk;
}

int cmd_isoptic(const IsopticArgs& a, std::ostream& out) {
  const SupportShape shape = load_shape_file(a.shape);
  const double alpha = parse_angle(a.alpha);
  const IsopticCurve curve = isoptic_curve(shape, alpha, a.n);

  const fs::path csv_path(a.out);
  fs::path svg_path = csv_path;
  svg_path.replace_extension(".svg");
  std::ostringstream csv;
  write_curve_csv(csv, curve);
  write_text_file(csv_path, csv.str());

  const std::vector<Point2> pts = curve.points();
  double extent = 0.0;
  for (const Point2& p : pts) extent = std::max(extent, p.norm());
  SvgDocument svg(extent);
  svg.polyline(shape_polyline(shape), true, "#1f4e79", "#cfe2f3");
  svg.polyline(pts, true, "#b22222");
  svg.dot({0.0, 0.0}, "#000000");
  write_text_file(svg_path, svg.str());

  out << "csv: " << csv_path.string() << "\n";
  out << "svg: " << svg_path.string() << "\n";
  try {
    const CircleFit fit = circle_fit(curve);
    out << "center: " << num(fit.center.x) << " " << num(fit.center.y) << "\n";
    out << "radius: " << num(fit.radius) << "\n";
    out << "max_deviation: " << num(fit.max_deviation) << "\n";
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kDegenerateFit) throw;
    out << "circle fit: degenerate\n";
  }
  return kExitOk;
}

int cmd_orbit_circle(const CircleOrbitArgs& a, std::ostream& out) {
  if (a.steps < 1) throw Error(ErrorKind::kOutOfRange, "steps must be >= 1");
  const double alpha = parse_angle(a.alpha);
  const double radius = parse_real(a.radius);
  const BilliardState s0{Angle(parse_angle(a.psi0)), parse_angle(a.beta0)};
  const OrbitRecord rec = orbit(s0, alpha, radius, std::size_t(a.steps));

  const fs::path csv_path(a.out);
  fs::path svg_path = csv_path;
  svg_path.replace_extension(".svg");
  std::ostringstream csv;
  write_orbit_csv(csv, rec);
  write_text_file(csv_path, csv.str());

  SvgDocument svg(radius);
  svg.polyline(circle_polyline(radius), true, "#555555");
  std::vector<Point2> path;
  for (const BilliardState& s : rec.states) path.push_back(s.position(radius));
  svg.polyline(path, false, "#b22222");
  svg.dot(path.front(), "#1f4e79");
  write_text_file(svg_path, svg.str());

  out << "csv: " << csv_path.string() << "\n";
  out << "svg: " << svg_path.string() << "\n";
  out << "slope_gap: " << num(rec.chords.size() >= 2 ? slope_gap(rec) : kPi)
      << "\n";
  return kExitOk;
}

int cmd_orbit_outer(const OuterOrbitArgs& a, std::ostream& out) {
  if (a.steps < 1) throw Error(ErrorKind::kOutOfRange, "steps must be >= 1");
  const SupportShape shape = load_shape_file(a.shape);
  const Point2 p{parse_real(a.x), parse_real(a.y)};
  const OuterState s0 = outer_start(
      shape, p, a.clockwise ? Turn::kClockwise : Turn::kCounterclockwise);
  const std::vector<OuterState> states =
      outer_orbit(shape, s0, std::size_t(a.steps));

  const fs::path csv_path(a.out);
  fs::path svg_path = csv_path;
  svg_path.replace_extension(".svg");
  std::ostringstream csv;
  write_outer_orbit_csv(csv, shape, states);
  write_text_file(csv_path, csv.str());

  double extent = 0.0;
  std::vector<Point2> path;
  for (const OuterState& s : states) {
    path.push_back(s.point);
    extent = std::max(extent, s.point.norm());
  }
  SvgDocument svg(extent);
  svg.polyline(shape_polyline(shape), true, "#1f4e79", "#cfe2f3");
  svg.polyline(path, false, "#b22222");
  svg.dot(path.front(), "#1f4e79");
  write_text_file(svg_path, svg.str());

  out << "csv: " << csv_path.string() << "\n";
  out << "svg: " << svg_path.string() << "\n";
  out << "alpha: " << num(angle_of_sight(shape, p)) << "\n";
  const auto period =
      detect_period(shape, s0, std::size_t(a.max_period), a.tol);
  if (period) {
    out << "period: " << *period << "\n";
  } else {
    out << "period: none\n";
  }
  return kExitOk;
}

int cmd_residual_shape(const ResidualShapeArgs& a, std::ostream& out) {
  const SupportShape shape = load_shape_file(a.shape);
  out << "residual: "
      << num(beta_residual(shape, parse_angle(a.alpha), parse_real(a.r), a.n))
      << "\n";
  return kExitOk;
}

int cmd_residual_rigid(const ResidualRigidArgs& a, std::ostream& out) {
  const RationalAngle angle(a.p, a.q);
  const ThetaArcProfile theta(kPi / angle.q(), {parse_real(a.k)});
  const BetaFunction beta = rigid_extend_theta(theta, a.p, a.q);
  out << "residual: " << num(beta_residual(beta, angle.radians(), a.n))
      << "\n";
  return kExitOk;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotCoprime:
    case ErrorKind::kOutOfRange:
    case ErrorKind::kParse:
    case ErrorKind::kInvalidShape:
      return kExitArgument;
    case ErrorKind::kConvexityViolated:
      return kExitConvexity;
    case ErrorKind::kParityObstruction:
      return kExitParity;
    default:
      return kExitNumeric;
  }
}

double parse_angle(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '*') {
      s += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
  }
  const auto pi_at = s.find("pi");
  if (pi_at == std::string::npos) return parse_real(s);

  // Forms: [num][/den]pi, [num]pi[/den].
  std::string rest = s.substr(0, pi_at) + s.substr(pi_at + 2);
  if (rest.find("pi") != std::string::npos) {
    throw Error(ErrorKind::kParse, "bad angle \"" + std::string(text) + "\"");
  }
  double num_part = 1.0;
  double den_part = 1.0;
  const auto slash = rest.find('/');
  const std::string top = rest.substr(0, slash);
  if (!top.empty() && top != "+") num_part = top == "-" ? -1.0 : parse_real(top);
  if (slash != std::string::npos) {
    den_part = parse_real(rest.substr(slash + 1));
    if (den_part == 0.0) {
      throw Error(ErrorKind::kParse, "zero denominator in angle");
    }
  }
  return num_part / den_part * kPi;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Constant angle-of-sight geometry: isoptics, billiards and "
               "constant-angle shapes"};
  app.name(args.empty() ? "flatsight" : args[0]);
  app.require_subcommand(1);

  int cls_p = 0, cls_q = 0;
  auto* classify_cmd = app.add_subcommand(
      "classify", "Decide whether non-disk shapes of angle p/q pi exist");
  classify_cmd->add_option("p", cls_p)->required();
  classify_cmd->add_option("q", cls_q)->required();

  int modes_p = 0, modes_q = 0, modes_max = 0;
  auto* modes_cmd = app.add_subcommand(
      "modes", "List Fourier modes usable for angle p/q pi up to m_max");
  modes_cmd->add_option("p", modes_p)->required();
  modes_cmd->add_option("q", modes_q)->required();
  modes_cmd->add_option("m_max", modes_max)->required();

  ConstructArgs con;
  auto* construct_cmd = app.add_subcommand(
      "construct",
      "Build h = r sin(p pi/(2q) + k sin(q phi + delta)); write JSON + SVG");
  construct_cmd->add_option("p", con.p)->required();
  construct_cmd->add_option("q", con.q)->required();
  construct_cmd->add_option("r", con.r)->required();
  construct_cmd->add_option("k", con.k)->required();
  construct_cmd->add_option("delta", con.delta)->required();
  construct_cmd->add_option("out", con.out, "SVG path; JSON goes next to it")
      ->required();

  IsopticArgs iso;
  auto* isoptic_cmd = app.add_subcommand(
      "isoptic", "Sample the isoptic of a shape file; write CSV + SVG");
  isoptic_cmd->add_option("shape", iso.shape)->required();
  isoptic_cmd->add_option("alpha", iso.alpha)->required();
  isoptic_cmd->add_option("n", iso.n)->required();
  isoptic_cmd->add_option("out", iso.out, "CSV path; SVG goes next to it")
      ->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "Simulate a billiard orbit");
  orbit_cmd->require_subcommand(1);
  CircleOrbitArgs co;
  auto* orbit_circle = orbit_cmd->add_subcommand(
      "circle", "Constant-angle billiard inside a circle");
  orbit_circle->add_option("alpha", co.alpha)->required();
  orbit_circle->add_option("beta0", co.beta0)->required();
  orbit_circle->add_option("steps", co.steps)->required();
  orbit_circle->add_option("out", co.out)->required();
  orbit_circle->add_option("--psi0", co.psi0, "Initial position angle");
  orbit_circle->add_option("--radius", co.radius, "Circle radius");
  OuterOrbitArgs oo;
  auto* orbit_outer = orbit_cmd->add_subcommand(
      "outer", "Outer constant-angle billiard around a shape file");
  orbit_outer->add_option("shape", oo.shape)->required();
  orbit_outer->add_option("x", oo.x)->required();
  orbit_outer->add_option("y", oo.y)->required();
  orbit_outer->add_option("steps", oo.steps)->required();
  orbit_outer->add_option("out", oo.out)->required();
  orbit_outer->add_flag("--clockwise", oo.clockwise);
  orbit_outer->add_option("--max-period", oo.max_period,
                          "Steps searched for a recurrence");
  orbit_outer->add_option("--tol", oo.tol, "Recurrence tolerance");

  auto* residual_cmd = app.add_subcommand(
      "residual", "Dynamical consistency defect of a beta function");
  residual_cmd->require_subcommand(1);
  ResidualShapeArgs rs;
  auto* residual_shape =
      residual_cmd->add_subcommand("shape", "beta read off a shape file");
  residual_shape->add_option("shape", rs.shape)->required();
  residual_shape->add_option("alpha", rs.alpha)->required();
  residual_shape->add_option("r", rs.r)->required();
  residual_shape->add_option("--grid", rs.n);
  ResidualRigidArgs rr;
  auto* residual_rigid = residual_cmd->add_subcommand(
      "rigid", "rotated extension of theta(t) = k sin(q t)");
  residual_rigid->add_option("p", rr.p)->required();
  residual_rigid->add_option("q", rr.q)->required();
  residual_rigid->add_option("k", rr.k)->required();
  residual_rigid->add_option("--grid", rr.n);

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  if (args.empty()) argv.push_back("flatsight");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitArgument;
  }

  try {
    if (*classify_cmd) return cmd_classify(cls_p, cls_q, out);
    if (*modes_cmd) return cmd_modes(modes_p, modes_q, modes_max, out);
    if (*construct_cmd) return cmd_construct(con, out);
    if (*isoptic_cmd) return cmd_isoptic(iso, out);
    if (*orbit_circle) return cmd_orbit_circle(co, out);
    if (*orbit_outer) return cmd_orbit_outer(oo, out);
    if (*residual_shape) return cmd_residual_shape(rs, out);
    if (*residual_rigid) return cmd_residual_rigid(rr, out);
  } catch (const ConvexityError& e) {
    err << "error: " << e.what() << "\n";
    err << "min(h+h''): " << num(e.min_value()) << "\n";
    return kExitConvexity;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitArgument;
  }
  return kExitArgument;
}

}  // namespace flatsight
