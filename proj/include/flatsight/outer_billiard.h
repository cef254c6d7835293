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

// Outer constant-angle billiard around a convex body. From an exterior
// point P, follow one tangent ray past the body to the unique point P'
// that sees the body under the same angle as P, then continue along the
// other tangent from P'. Orbits stay on one isoptic of the body.

#ifndef FLATSIGHT_OUTER_BILLIARD_H_
#define FLATSIGHT_OUTER_BILLIARD_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "flatsight/convex_shape.h"

namespace flatsight {

struct OuterState {
  Point2 point;
  Angle tangent_normal;  // normal of the support line carrying the ray
  Angle direction;       // direction of travel along that line
};

enum class Turn { kCounterclockwise, kClockwise };

// Starts at p on the tangent that goes around the body in the given sense.
OuterState outer_start(const SupportShape& shape, Point2 p,
                       Turn turn = Turn::kCounterclockwise);

struct OuterStepStats {
  int bisection_iterations = 0;
  int monotonicity_violations = 0;  // non-monotone samples in the scan
};

// Uses the sight angle measured at s.point.
OuterState outer_step(const SupportShape& shape, const OuterState& s);
// Uses the given sight angle; orbits pass the initial one to avoid drift.
OuterState outer_step(const SupportShape& shape, const OuterState& s,
                      double alpha, OuterStepStats* stats = nullptr);

// n steps; returns n + 1 states starting with s0.
std::vector<OuterState> outer_orbit(const SupportShape& shape,
                                    const OuterState& s0, std::size_t n);

// Smallest m <= max_steps with |P_m - P_0| <= tol and the tangent normals
// within tol / diameter, if any.
std::optional<std::size_t> detect_period(const SupportShape& shape,
                                         const OuterState& s0,
                                         std::size_t max_steps, double tol);

}  // namespace flatsight

#endif  // FLATSIGHT_OUTER_BILLIARD_H_
