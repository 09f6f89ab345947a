// Copyright 2026 The coeval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coeval/error.hpp"

namespace coeval
{

std::string_view to_string(ErrorKind kind)
{
  switch (kind) {
    case ErrorKind::kInvalidInput:
      return "invalid input";
    case ErrorKind::kInvalidPose:
      return "invalid pose";
    case ErrorKind::kInvalidParameter:
      return "invalid parameter";
    case ErrorKind::kShapeMismatch:
      return "shape mismatch";
    case ErrorKind::kEmptySet:
      return "empty set";
    case ErrorKind::kEmptyHorizon:
      return "empty horizon";
    case ErrorKind::kHorizonTooLong:
      return "horizon too long";
    case ErrorKind::kInsufficientData:
      return "insufficient data";
    case ErrorKind::kMissingData:
      return "missing data";
    case ErrorKind::kNumericalFailure:
      return "numerical failure";
    case ErrorKind::kRange:
      return "out of range";
    case ErrorKind::kParse:
      return "parse error";
    case ErrorKind::kReferentialIntegrity:
      return "referential integrity";
    case ErrorKind::kPairing:
      return "pairing error";
  }
  return "error";
}

}  // namespace coeval
