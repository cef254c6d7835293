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

#include "flatsight/profile.h"

#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "flatsight/error.h"

namespace flatsight {

AntiPeriodicProfile::AntiPeriodicProfile(int q_base, std::vector<Term> terms)
    : q_base_(q_base), terms_(std::move(terms)) {
  if (q_base_ < 1) {
    throw Error(ErrorKind::kOutOfRange, "profile base q must be >= 1");
  }
  for (const Term& t : terms_) {
    if (t.multiplier < 1 || t.multiplier % 2 == 0) {
      throw Error(ErrorKind::kOutOfRange,
                  "profile multiplier " + std::to_string(t.multiplier) +
                      " is not a positive odd integer");
    }
    if (!std::isfinite(t.amplitude) || !std::isfinite(t.phase)) {
      throw Error(ErrorKind::kNonFinite, "profile term is not finite");
    }
  }
}

AntiPeriodicProfile AntiPeriodicProfile::single_mode(int q, double amplitude,
                                                     double phase) {
  return AntiPeriodicProfile(q, {{1, amplitude, phase}});
}

double AntiPeriodicProfile::value(double phi) const {
  double w = 0.0;
  for (const Term& t : terms_) {
    w += t.amplitude * std::sin(t.multiplier * q_base_ * phi + t.phase);
  }
  return w;
}

double AntiPeriodicProfile::first_derivative(double phi) const {
  double w = 0.0;
  for (const Term& t : terms_) {
    const double freq = double(t.multiplier) * q_base_;
    w += t.amplitude * freq * std::cos(freq * phi + t.phase);
  }
  return w;
}

double AntiPeriodicProfile::second_derivative(double phi) const {
  double w = 0.0;
  for (const Term& t : terms_) {
    const double freq = double(t.multiplier) * q_base_;
    w -= t.amplitude * freq * freq * std::sin(freq * phi + t.phase);
  }
  return w;
}

double AntiPeriodicProfile::sup_bound() const {
  double s = 0.0;
  for (const Term& t : terms_) s += std::abs(t.amplitude);
  return s;
}

double AntiPeriodicProfile::second_derivative_bound() const {
  double s = 0.0;
  for (const Term& t : terms_) {
    const double freq = double(t.multiplier) * q_base_;
    s += std::abs(t.amplitude) * freq * freq;
  }
  return s;
}

bool AntiPeriodicProfile::is_zero() const {
  for (const Term& t : terms_) {
    if (t.amplitude != 0.0) return false;
  }
  return true;
}

ThetaArcProfile::ThetaArcProfile(double arc_length,
                                 std::vector<double> sine_coeffs)
    : arc_length_(arc_length), coeffs_(std::move(sine_coeffs)) {
  if (!(arc_length_ > 0.0) || !std::isfinite(arc_length_)) {
    throw Error(ErrorKind::kOutOfRange, "arc length must be positive");
  }
  for (double c : coeffs_) {
    if (!std::isfinite(c)) {
      throw Error(ErrorKind::kNonFinite, "theta coefficient is not finite");
    }
  }
}

double ThetaArcProfile::value(double t) const {
  double v = 0.0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    v += coeffs_[j] * std::sin(double(j + 1) * kPi * t / arc_length_);
  }
  return v;
}

double ThetaArcProfile::second_derivative(double t) const {
  double v = 0.0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const double freq = double(j + 1) * kPi / arc_length_;
    v -= coeffs_[j] * freq * freq * std::sin(freq * t);
  }
  return v;
}

double ThetaArcProfile::c2_norm() const {
  double s = 0.0;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const double freq = double(j + 1) * kPi / arc_length_;
    s += std::abs(coeffs_[j]) * (1.0 + freq * freq);
  }
  return s;
}

bool ThetaArcProfile::is_zero() const {
  for (double c : coeffs_) {
    if (c != 0.0) return false;
  }
  return true;
}

BetaFunction BetaFunction::from_samples(std::vector<double> samples) {
  if (samples.size() < 2) {
    throw Error(ErrorKind::kOutOfRange, "need at least two beta samples");
  }
  auto data = std::make_shared<const std::vector<double>>(std::move(samples));
  return BetaFunction([data](double psi) {
    const auto& s = *data;
    const double n = static_cast<double>(s.size());
    const double u = Angle(psi).radians() / kTwoPi * n;
    const auto i = static_cast<std::size_t>(u) % s.size();
    const double frac = u - std::floor(u);
    return s[i] + frac * (s[(i + 1) % s.size()] - s[i]);
  });
}

}  // namespace flatsight
