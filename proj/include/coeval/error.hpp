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

#ifndef COEVAL__ERROR_HPP_
#define COEVAL__ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace coeval
{

enum class ErrorKind {
  kInvalidInput,
  kInvalidPose,
  kInvalidParameter,
  kShapeMismatch,
  kEmptySet,
  kEmptyHorizon,
  kHorizonTooLong,
  kInsufficientData,
  kMissingData,
  kNumericalFailure,
  kRange,
  kParse,
  kReferentialIntegrity,
  kPairing,
};

std::string_view to_string(ErrorKind kind);

/// Single exception type for the library; the kind decides how callers react
/// (the CLI maps it onto an exit code).
class Error : public std::runtime_error
{
public:
  Error(ErrorKind kind, const std::string & message)
  : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind)
  {
  }

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace coeval

#endif  // COEVAL__ERROR_HPP_
