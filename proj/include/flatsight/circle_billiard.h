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

// The constant-angle billiard inside a circle of radius r centered at the
// origin. A state is a point on the circle plus the angle beta between the
// outgoing chord and the radius at that point. Every rebound turns the chord
// so that incoming and outgoing angles add up to the sight angle alpha:
//
//   psi' = psi + pi - 2 beta,   beta' = alpha - beta.
//
// Trajectories advance counterclockwise.

#ifndef FLATSIGHT_CIRCLE_BILLIARD_H_
#define FLATSIGHT_CIRCLE_BILLIARD_H_

#include <cstddef>
#include <span>
#include <vector>

#include "flatsight/geometry.h"
#include "flatsight/profile.h"

namespace flatsight {

struct BilliardState {
  Angle psi;
  double beta = 0.0;

  Point2 position(double radius) const {
    return point_on_circle(radius, psi);
  }
};

struct OrbitRecord {
  std::vector<BilliardState> states;  // n + 1 states
  std::vector<OrientedLine> chords;   // chords[k] joins states k and k+1
  double alpha = 0.0;
  double radius = 1.0;
};

// Error(kBetaOutOfRange) unless 0 < beta < alpha < pi.
BilliardState step(const BilliardState& s, double alpha);
BilliardState step_inverse(const BilliardState& s, double alpha);

// Two steps at once: rotation of the position by -2 alpha, beta unchanged.
BilliardState step_double(const BilliardState& s, double alpha);

// normal = psi + pi/2 - beta, offset = r sin(beta).
OrientedLine chord(const BilliardState& s, double radius);

// Iterates `step` n times. The beta sequence is written as the exact
// alternation b, alpha - b, b, ... where b = alpha - (alpha - beta0) is
// beta0 rounded so that consecutive betas sum to alpha bitwise.
OrbitRecord orbit(const BilliardState& s0, double alpha, double radius,
                  std::size_t n);

// Number of steps after which the beta = alpha/2 orbit for alpha = p pi/q
// closes: 2q when q - p is odd, q when it is even.
int closure_steps(int p, int q);

// Largest gap between consecutive chord slopes (normals taken mod pi).
double slope_gap(std::span<const OrientedLine> chords);
double slope_gap(const OrbitRecord& orbit);

// A position psi with beta(psi) = alpha/2, found by a sign-change scan of
// beta - alpha/2 followed by bisection. Returns 0 when beta is constant
// alpha/2 to within 1e-10; throws Error(kNoSignChange) otherwise.
Angle find_regular_start(const BetaFunction& beta, double alpha,
                         int grid = 1024);

}  // namespace flatsight

#endif  // FLATSIGHT_CIRCLE_BILLIARD_H_
