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

#include "coeval/bpt.hpp"

#include "coeval/error.hpp"
#include "coeval/streams.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>

namespace coeval
{

PermutationTestResult permutation_test(
  const TrajectorySet & real, const TrajectorySet & gen, const PermutationTestOptions & options)
{
  if (options.permutations == 0) {
    throw Error(ErrorKind::kInvalidParameter, "permutation count must be at least 1");
  }
  if (!(options.alpha >= 0.0 && options.alpha <= 1.0)) {
    throw Error(ErrorKind::kInvalidParameter, "alpha must lie in [0, 1]");
  }
  const std::size_t m = real.size();
  const std::size_t n = gen.size();

  std::vector<Trajectory> pool;
  pool.reserve(m + n);
  pool.insert(pool.end(), real.members().begin(), real.members().end());
  pool.insert(pool.end(), gen.members().begin(), gen.members().end());
  const auto matrix = build_distance_matrix(pool);

  std::vector<std::uint8_t> in_real(m + n, 0);
  std::fill_n(in_real.begin(), m, 1);

  PermutationTestResult result;
  result.alpha = options.alpha;
  result.n_permutations = options.permutations;
  result.t0 = matrix.split_distance(in_real);

  std::vector<double> stats;
  if (options.keep_statistics) {
    stats.reserve(options.permutations);
  }
  std::vector<std::size_t> order(m + n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(options.seed);
  std::size_t greater = 0;
  std::size_t greater_or_equal = 0;
  for (std::size_t round = 0; round < options.permutations; ++round) {
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t k = 0; k < order.size(); ++k) {
      in_real[order[k]] = k < m ? 1 : 0;
    }
    const double t = matrix.split_distance(in_real);
    greater += t > result.t0 ? 1 : 0;
    greater_or_equal += t >= result.t0 ? 1 : 0;
    if (options.keep_statistics) {
      stats.push_back(t);
    }
  }

  const double count = static_cast<double>(options.permutations);
  if (matrix.all_zero()) {
    result.degenerate = true;
    result.p_value = 1.0;
  } else if (options.rule == PValueRule::kSmoothed) {
    result.p_value = (1.0 + static_cast<double>(greater_or_equal)) / (count + 1.0);
  } else {
    result.p_value = static_cast<double>(greater) / count;
  }
  result.reject = result.p_value < options.alpha;
  if (options.keep_statistics) {
    result.permuted_statistics = std::move(stats);
  }
  return result;
}

std::uint64_t scene_stream_seed(std::uint64_t master_seed, std::string_view scene_id)
{
  return derive_seed(master_seed, scene_id);
}

BptSummary bpt_rate(std::span<const PermutationTestResult> results, double alpha)
{
  if (results.empty()) {
    throw Error(ErrorKind::kEmptySet, "no permutation test results to aggregate");
  }
  BptSummary summary;
  summary.scene_count = results.size();
  summary.alpha = alpha;
  std::size_t kept = 0;
  for (const auto & r : results) {
    kept += r.p_value >= alpha ? 1 : 0;
    summary.degenerate_count += r.degenerate ? 1 : 0;
    summary.per_scene.push_back({r.scene_id, r.p_value});
  }
  summary.fail_to_reject_rate = static_cast<double>(kept) / static_cast<double>(results.size());
  return summary;
}

Histogram export_histogram(const PermutationTestResult & result, std::size_t bins)
{
  if (!result.permuted_statistics) {
    throw Error(ErrorKind::kMissingData, "permuted statistics were not retained");
  }
  if (bins == 0) {
    throw Error(ErrorKind::kInvalidParameter, "histogram needs at least one bin");
  }
  const auto & stats = *result.permuted_statistics;
  double lo = result.t0;
  double hi = result.t0;
  for (const double v : stats) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  Histogram h;
  h.t0 = result.t0;
  h.counts.assign(bins, 0);
  h.edges.resize(bins + 1);
  const double width = (hi - lo) / static_cast<double>(bins);
  for (std::size_t b = 0; b <= bins; ++b) {
    h.edges[b] = lo + width * static_cast<double>(b);
  }
  h.edges[bins] = hi;
  for (const double v : stats) {
    std::size_t b = 0;
    if (width > 0.0) {
      b = static_cast<std::size_t>(std::floor((v - lo) / width));
      b = std::min(b, bins - 1);
    }
    ++h.counts[b];
  }
  return h;
}

void write_histogram_csv(std::ostream & os, const Histogram & histogram)
{
  const auto flags = os.flags();
  const auto precision = os.precision();
  os << "bin_lo,bin_hi,count\n" << std::setprecision(17);
  for (std::size_t b = 0; b < histogram.counts.size(); ++b) {
    os << histogram.edges[b] << ',' << histogram.edges[b + 1] << ',' << histogram.counts[b] << '\n';
  }
  os.flags(flags);
  os.precision(precision);
}

}  // namespace coeval
