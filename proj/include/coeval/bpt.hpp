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

#ifndef COEVAL__BPT_HPP_
#define COEVAL__BPT_HPP_

#include "coeval/core_model.hpp"
#include "coeval/metrics.hpp"

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coeval
{

inline constexpr std::size_t kDefaultSetSize = 10;        // M = N
inline constexpr std::size_t kDefaultPermutations = 1000;  // n
inline constexpr double kDefaultAlpha = 0.05;

enum class PValueRule {
  kStrict,    ///< #{T' > t0} / n
  kSmoothed,  ///< (1 + #{T' >= t0}) / (n + 1)
};

struct PermutationTestOptions
{
  std::size_t permutations = kDefaultPermutations;
  double alpha = kDefaultAlpha;
  std::uint64_t seed = 0;
  PValueRule rule = PValueRule::kStrict;
  bool keep_statistics = false;
};

struct PermutationTestResult
{
  std::string scene_id;
  double t0 = 0.0;
  std::size_t n_permutations = 0;
  double p_value = 1.0;
  bool reject = false;
  double alpha = kDefaultAlpha;
  /// Every pooled trajectory identical; reported with p = 1.
  bool degenerate = false;
  std::optional<std::vector<double>> permuted_statistics;
};

struct ScenePValue
{
  std::string scene_id;
  double p_value = 1.0;
};

struct BptSummary
{
  std::size_t scene_count = 0;
  double fail_to_reject_rate = 0.0;
  double alpha = kDefaultAlpha;
  std::size_t degenerate_count = 0;
  std::vector<ScenePValue> per_scene;
};

/**
 * Behavior permutation test between planner outputs on real and generated
 * inputs for one scene.
 *
 * t0 is the set distance of the original split. Each of the n rounds shuffles
 * the pooled M + N trajectories uniformly into sets of sizes M and N and
 * recomputes the statistic from a distance matrix built once up front. The
 * result depends only on the inputs and options.seed.
 */
PermutationTestResult permutation_test(const TrajectorySet & real, const TrajectorySet & gen,
                                       const PermutationTestOptions & options = {});

/// Stream seed for one scene given the master seed.
std::uint64_t scene_stream_seed(std::uint64_t master_seed, std::string_view scene_id);

/// Fraction of scenes with p >= alpha.
BptSummary bpt_rate(std::span<const PermutationTestResult> results, double alpha = kDefaultAlpha);

struct Histogram
{
  std::vector<double> edges;  // bins + 1 entries
  std::vector<std::size_t> counts;
  double t0 = 0.0;
};

/// Bins the retained permuted statistics over [min(T' u {t0}), max(T' u {t0})].
Histogram export_histogram(const PermutationTestResult & result, std::size_t bins);

/// CSV with header `bin_lo,bin_hi,count`.
void write_histogram_csv(std::ostream & os, const Histogram & histogram);

}  // namespace coeval

#endif  // COEVAL__BPT_HPP_
