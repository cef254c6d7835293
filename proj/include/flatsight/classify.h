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

#ifndef FLATSIGHT_CLASSIFY_H_
#define FLATSIGHT_CLASSIFY_H_

#include <string_view>
#include <vector>

namespace flatsight {

// alpha = p*pi/q with gcd(p, q) = 1 and 0 < p < q.
class RationalAngle {
 public:
  // Error(kOutOfRange) unless 0 < p < q; Error(kNotCoprime) if gcd > 1.
  RationalAngle(int p, int q);

  int p() const { return p_; }
  int q() const { return q_; }
  double radians() const;
  // (q - p)*pi/q, the turn of the tangent normal per bounce.
  double normal_advance() const;
  bool odd_difference() const { return (q_ - p_) % 2 != 0; }

 private:
  int p_;
  int q_;
};

enum class Verdict { kDiskOnly, kNonDiskExists };

std::string_view to_string(Verdict v);

Verdict classify(int p, int q);

// All m <= m_max such that sin(m phi) changes sign under a shift of the
// normal by (q - p)*pi/q, i.e. m (q - p) = q (mod 2q).
std::vector<int> antiperiodic_modes(int p, int q, int m_max);

}  // namespace flatsight

#endif  // FLATSIGHT_CLASSIFY_H_
