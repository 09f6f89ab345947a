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

#ifndef COEVAL__CLI__PIPELINE_HPP_
#define COEVAL__CLI__PIPELINE_HPP_

#include "coeval/bpt.hpp"
#include "coeval/cli/io.hpp"
#include "coeval/frechet.hpp"
#include "coeval/metrics.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace coeval::cli
{

inline const std::vector<double> kDefaultHorizons = {1.0, 3.0, 5.0};

struct AdeRow
{
  std::string scene_id;
  std::string variant;
  std::vector<double> values;  // one per horizon
};

/// Mean ADE per variant and horizon across prediction records.
struct AdeTable
{
  std::vector<double> horizons;
  AdeMode mode = AdeMode::kPrefixMean;
  std::map<std::string, std::vector<double>> means;
  std::map<std::string, std::size_t> counts;
  std::vector<AdeRow> rows;  // sorted by (scene id, variant)
};

/// Scores every prediction against its scene's ground truth. Unknown scene
/// ids raise ValidationError(kReferentialIntegrity) naming each offender.
AdeTable evaluate_ade(std::span<const Scene> scenes, std::span<const PredictionRecord> predictions,
                      std::span<const double> horizons, AdeMode mode = AdeMode::kPrefixMean);

json to_json(const AdeTable & table, bool per_scene);

/// Horizon label used as JSON key, e.g. "1", "2.5".
std::string horizon_key(double horizon);

struct BptRunOptions
{
  std::size_t permutations = kDefaultPermutations;
  double alpha = kDefaultAlpha;
  std::uint64_t seed = 0;
  PValueRule rule = PValueRule::kStrict;
  bool keep_statistics = false;
  std::size_t jobs = 1;
};

/// Per-scene permutation tests over sets paired by scene id, ordered by scene
/// id. Each scene draws from its own stream derived from the master seed, so
/// the output does not depend on `jobs`.
std::vector<PermutationTestResult> evaluate_bpt(std::span<const SetRecord> real,
                                                std::span<const SetRecord> gen,
                                                const BptRunOptions & options);

struct FrechetOutcome
{
  double distance = 0.0;
  GaussianSummary real;
  GaussianSummary gen;
};

/// Fits both feature sets (each subsampled to at most `max_samples` rows with
/// a seeded draw) and returns the Frechet distance.
FrechetOutcome evaluate_frechet(const Eigen::MatrixXd & real, const Eigen::MatrixXd & gen,
                                CovarianceEstimator estimator, std::size_t max_samples,
                                std::uint64_t seed);

/// Checks that every set/prediction references a known scene. `lines`, when
/// given, holds the source line of each id.
std::vector<Diagnostic> check_references(std::span<const std::string> known_ids,
                                         const std::string & file,
                                         std::span<const std::string> scene_ids,
                                         std::span<const std::size_t> lines = {});

}  // namespace coeval::cli

#endif  // COEVAL__CLI__PIPELINE_HPP_
