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

// Construction of convex bodies whose alpha-isoptic is a prescribed circle.
//
// Exact family. A support line with normal phi and offset r sin(beta) cuts
// the circle of radius r at psi = phi +- (pi/2 - beta). Two support lines
// through the same circle point see an angle alpha exactly when their
// normals differ by gamma = pi - alpha and beta(phi) + beta(phi + gamma) =
// alpha. Writing beta = alpha/2 + w(phi), the condition is the linear
// relation w(phi + gamma) = -w(phi), so
//
//   h(phi) = r sin(alpha/2 + w(phi)),   w anti-periodic with shift gamma,
//
// is a constant-angle shape whenever it is convex. For alpha = p pi/q the
// admissible modes sin(m phi) are the odd multiples of q, and only when
// q - p is odd.
//
// Rigid extension. The position-parameterized construction extends a
// profile theta on one arc of length pi/q by alternating rotations. It is
// consistent with the billiard dynamics only up to second order in theta;
// beta_residual measures that defect.

#ifndef FLATSIGHT_CONSTRUCTION_H_
#define FLATSIGHT_CONSTRUCTION_H_

#include <cstddef>
#include <span>
#include <vector>

#include "flatsight/convex_shape.h"
#include "flatsight/profile.h"

namespace flatsight {

inline constexpr int kResidualGrid = 720;

// Errors: kNotCoprime/kOutOfRange for (p, q); kParityObstruction when
// q - p is even and w is nonzero; kBetaOutOfRange when alpha/2 + w leaves
// (0, pi/2); ConvexityError when h + h'' is not positive on the grid.
SupportShape build_shape(int p, int q, double r, const AntiPeriodicProfile& w);

// Outgoing chord angle at P(psi) on the circle of radius r, read off the
// counterclockwise tangent from P to the shape.
BetaFunction beta_of_shape(const SupportShape& shape, double r);

// max over an n-point grid of |beta(psi + pi - 2 beta(psi)) - (alpha -
// beta(psi))|, zero for an exact constant-angle configuration.
double beta_residual(const BetaFunction& beta, double alpha,
                     int n = kResidualGrid);
// Error(kPointInsideShape) if the shape reaches the circle.
double beta_residual(const SupportShape& shape, double alpha, double r,
                     int n = kResidualGrid);

// On arc j = floor(psi / (pi/q)) returns alpha/2 + (-1)^j theta(psi - j pi/q).
// Errors: kParityObstruction when q - p is even and theta is nonzero (the
// dynamics moves arc j onto arc j + q - p with the same sign pattern, which
// contradicts beta' = alpha - beta); kOutOfRange when the arc length is not
// pi/q; kBetaOutOfRange when sup|theta| may reach alpha/2.
BetaFunction rigid_extend_theta(const ThetaArcProfile& theta, int p, int q);

struct Envelope {
  std::vector<Point2> polyline;
  std::size_t skipped_parallel = 0;
};

// Intersections of consecutive lines (cyclically) after sorting by normal.
// Consecutive parallel duplicates are skipped and counted.
Envelope envelope_from_lines(std::span<const OrientedLine> lines);

}  // namespace flatsight

#endif  // FLATSIGHT_CONSTRUCTION_H_
