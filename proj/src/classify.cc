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

#include "flatsight/classify.h"

#include <numeric>
#include <string>

#include "flatsight/error.h"
#include "flatsight/geometry.h"

namespace flatsight {

RationalAngle::RationalAngle(int p, int q) : p_(p), q_(q) {
  if (p <= 0 || q <= p) {
    throw Error(ErrorKind::kOutOfRange,
                "need 0 < p < q, got p=" + std::to_string(p) +
                    " q=" + std::to_string(q));
  }
  if (std::gcd(p, q) != 1) {
    throw Error(ErrorKind::kNotCoprime, "p,q not coprime");
  }
}

double RationalAngle::radians() const { return p_ * kPi / q_; }

double RationalAngle::normal_advance() const { return (q_ - p_) * kPi / q_; }

std::string_view to_string(Verdict v) {
  return v == Verdict::kDiskOnly ? "DiskOnly" : "NonDiskExists";
}

Verdict classify(int p, int q) {
  return RationalAngle(p, q).odd_difference() ? Verdict::kNonDiskExists
                                              : Verdict::kDiskOnly;
}

std::vector<int> antiperiodic_modes(int p, int q, int m_max) {
  const RationalAngle angle(p, q);
  std::vector<int> modes;
  const long long d = angle.q() - angle.p();
  const long long period = 2LL * angle.q();
  for (int m = 1; m <= m_max; ++m) {
    if ((m * d) % period == angle.q()) modes.push_back(m);
  }
  return modes;
}

}  // namespace flatsight
