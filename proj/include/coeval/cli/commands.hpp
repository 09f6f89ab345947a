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

#ifndef COEVAL__CLI__COMMANDS_HPP_
#define COEVAL__CLI__COMMANDS_HPP_

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace coeval::cli
{

inline constexpr std::string_view kToolVersion = "0.1.0";

enum ExitCode : int {
  kExitSuccess = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitNumerical = 3,
};

/// Entry point of the `coeval` tool. `args` excludes the program name.
/// Subcommands: validate, ade, bpt, frechet, sunpos, featurize, simulate, report.
int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err);

}  // namespace coeval::cli

#endif  // COEVAL__CLI__COMMANDS_HPP_
