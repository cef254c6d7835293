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

#ifndef FLATSIGHT_ERROR_H_
#define FLATSIGHT_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace flatsight {

// Every failure raised by the library carries one of these kinds so that
// callers (the CLI in particular) can dispatch without parsing messages.
enum class ErrorKind {
  kNonFinite,
  kParallelLines,
  kPointInsideShape,
  kBracketingFailed,
  kUnsupportedForPolygon,
  kBetaOutOfRange,
  kNotCoprime,
  kOutOfRange,
  kParityObstruction,
  kConvexityViolated,
  kNoSignChange,
  kDegenerateFit,
  kInvalidShape,
  kParse,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Raised by shape validation; keeps the worst sample for diagnostics.
class ConvexityError : public Error {
 public:
  ConvexityError(double min_radius_of_curvature, double at_phi);

  // min over the validation grid of h + h''.
  double min_value() const noexcept { return min_value_; }
  double at_phi() const noexcept { return at_phi_; }

 private:
  double min_value_;
  double at_phi_;
};

}  // namespace flatsight

#endif  // FLATSIGHT_ERROR_H_
