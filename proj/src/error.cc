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

#include "flatsight/error.h"

#include <string>

namespace flatsight {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNonFinite: return "NonFinite";
    case ErrorKind::kParallelLines: return "ParallelLines";
    case ErrorKind::kPointInsideShape: return "PointInsideShape";
    case ErrorKind::kBracketingFailed: return "BracketingFailed";
    case ErrorKind::kUnsupportedForPolygon: return "UnsupportedForPolygon";
    case ErrorKind::kBetaOutOfRange: return "BetaOutOfRange";
    case ErrorKind::kNotCoprime: return "NotCoprime";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kParityObstruction: return "ParityObstruction";
    case ErrorKind::kConvexityViolated: return "ConvexityViolated";
    case ErrorKind::kNoSignChange: return "NoSignChange";
    case ErrorKind::kDegenerateFit: return "DegenerateFit";
    case ErrorKind::kInvalidShape: return "InvalidShape";
    case ErrorKind::kParse: return "Parse";
  }
  return "Unknown";
}

ConvexityError::ConvexityError(double min_value, double at_phi)
    : Error(ErrorKind::kConvexityViolated,
            "min(h + h'') = " + std::to_string(min_value) + " at phi = " +
                std::to_string(at_phi)),
      min_value_(min_value),
      at_phi_(at_phi) {}

}  // namespace flatsight
