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

// Scalar profiles that parameterize constant-angle shapes.

#ifndef FLATSIGHT_PROFILE_H_
#define FLATSIGHT_PROFILE_H_

#include <functional>
#include <vector>

#include "flatsight/geometry.h"

namespace flatsight {

// w(phi) = sum_l k_l * sin(l * q * phi + delta_l) with odd multipliers l.
//
// For alpha = p*pi/q with q - p odd, every term flips sign under
// phi -> phi + (q - p)*pi/q, so w is anti-periodic with that shift.
class AntiPeriodicProfile {
 public:
  struct Term {
    int multiplier = 1;  // odd, >= 1
    double amplitude = 0.0;
    double phase = 0.0;
  };

  AntiPeriodicProfile() = default;
  // Throws Error(kOutOfRange) for q < 1 or an even/non-positive multiplier.
  AntiPeriodicProfile(int q_base, std::vector<Term> terms);

  // k * sin(q * phi + delta).
  static AntiPeriodicProfile single_mode(int q, double amplitude,
                                         double phase = 0.0);

  int q_base() const { return q_base_; }
  const std::vector<Term>& terms() const { return terms_; }

  double value(double phi) const;
  double first_derivative(double phi) const;
  double second_derivative(double phi) const;

  // Upper bounds on sup|w| and sup|w''| from the coefficients.
  double sup_bound() const;
  double second_derivative_bound() const;

  bool is_zero() const;

 private:
  int q_base_ = 1;
  std::vector<Term> terms_;
};

// theta(t) = sum_j c_j sin(j * pi * t / arc_length) on [0, arc_length].
// Pure sine series vanish together with their second derivative at both
// ends of the arc.
class ThetaArcProfile {
 public:
  ThetaArcProfile(double arc_length, std::vector<double> sine_coeffs);

  double arc_length() const { return arc_length_; }
  const std::vector<double>& sine_coeffs() const { return coeffs_; }

  double value(double t) const;
  double second_derivative(double t) const;

  // sum_j |c_j| (1 + (j pi / arc_length)^2), a bound on the C^2 size.
  double c2_norm() const;
  bool is_zero() const;

 private:
  double arc_length_;
  std::vector<double> coeffs_;
};

// A map from circle position psi to the outgoing chord angle beta.
class BetaFunction {
 public:
  explicit BetaFunction(std::function<double(double)> fn)
      : fn_(std::move(fn)) {}

  // Periodic linear interpolation of samples taken at 2*pi*i/n.
  static BetaFunction from_samples(std::vector<double> samples);

  double operator()(double psi) const { return fn_(psi); }

 private:
  std::function<double(double)> fn_;
};

}  // namespace flatsight

#endif  // FLATSIGHT_PROFILE_H_
