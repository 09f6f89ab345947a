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

#ifndef COEVAL__CLI__IO_HPP_
#define COEVAL__CLI__IO_HPP_

#include "coeval/bpt.hpp"
#include "coeval/conditions.hpp"
#include "coeval/core_model.hpp"
#include "coeval/error.hpp"
#include "coeval/frechet.hpp"

#include <Eigen/Core>
#include <nlohmann/json.hpp>

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace coeval::cli
{

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

/// One rejected record: where it is and everything wrong with it.
struct Diagnostic
{
  std::string file;
  std::size_t line = 0;
  std::string record_id;
  std::string message;
};

std::string format(const Diagnostic & diagnostic);

/// Raised after a whole input has been checked; carries every offender.
class ValidationError : public Error
{
public:
  ValidationError(ErrorKind kind, std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic> & diagnostics() const { return diagnostics_; }

private:
  std::vector<Diagnostic> diagnostics_;
};

struct SetRecord
{
  std::string scene_id;
  TrajectorySet set;
};

/// Planner output to score against a scene's ground truth, tagged with the
/// input variant it came from (e.g. "real", "gen", "gen_no_boxes").
struct PredictionRecord
{
  std::string scene_id;
  std::string variant;
  std::vector<Trajectory> trajectories;
};

// JSON mapping -----------------------------------------------------------------

json to_json(const Trajectory & trajectory);
json to_json(const Scene & scene);
json to_json(const SetRecord & record);
json to_json(const PredictionRecord & record);
json to_json(const PermutationTestResult & result, bool keep_statistics);
json to_json(const BptSummary & summary);
json to_json(const GaussianSummary & summary);
json to_json(const SunAngles & angles);
json to_json(const ConditionFeatureBundle & bundle);

/// Parses one scene record; on failure returns nullopt and appends one issue
/// per problem found.
std::optional<Scene> scene_from_json(const json & record, std::vector<std::string> & issues);

// Files ------------------------------------------------------------------------

/// Records that parsed cleanly, their source lines, and one diagnostic per
/// rejected record.
template <typename T>
struct ScanResult
{
  std::vector<T> records;
  std::vector<std::size_t> lines;
  std::vector<Diagnostic> diagnostics;
};

ScanResult<Scene> scan_scenes(const std::filesystem::path & path);
ScanResult<SetRecord> scan_trajectory_sets(const std::filesystem::path & path);
ScanResult<PredictionRecord> scan_predictions(const std::filesystem::path & path);

/// Reads a line-delimited scene file. Every record is checked before anything
/// is returned; any problem raises ValidationError listing all offenders.
std::vector<Scene> read_scenes(const std::filesystem::path & path);
std::vector<SetRecord> read_trajectory_sets(const std::filesystem::path & path);
std::vector<PredictionRecord> read_predictions(const std::filesystem::path & path);

/// Feature matrix from CSV (one row per sample, optional header) or from
/// line-delimited {"id": ..., "features": [...]} records.
Eigen::MatrixXd read_features(const std::filesystem::path & path);

void write_jsonl(std::ostream & os, const json & record);
void write_text_file(const std::filesystem::path & path, const std::string & contents);

/// Lowercase hex SHA-256 of the file contents.
std::string sha256_file(const std::filesystem::path & path);

}  // namespace coeval::cli

#endif  // COEVAL__CLI__IO_HPP_
