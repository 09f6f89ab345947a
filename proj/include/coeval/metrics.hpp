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

#ifndef COEVAL__METRICS_HPP_
#define COEVAL__METRICS_HPP_

#include "coeval/core_model.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace coeval
{

enum class AdeMode {
  kPrefixMean,  ///< mean displacement over every waypoint in (0, horizon]
  kFinal,       ///< displacement at the last waypoint inside the horizon (FDE)
};

/// Frobenius norm of the q x 2 waypoint difference. Throws kShapeMismatch when
/// q or dt differ.
double trajectory_distance(const Trajectory & a, const Trajectory & b);

/// Average displacement error over the horizon prefix.
double ade(const Trajectory & pred, const Trajectory & gt, double horizon,
           AdeMode mode = AdeMode::kPrefixMean);

/// Generalized Chamfer distance between two trajectory sets:
///   1/(2M) sum_i min_j d(a_i, b_j) + 1/(2N) sum_j min_i d(a_i, b_j).
double set_distance(const TrajectorySet & a, const TrajectorySet & b);
double set_distance(std::span<const Trajectory> a, std::span<const Trajectory> b);

/// Final combination step of the set distance, shared by the direct and the
/// matrix-indexed paths so both produce identical bits.
inline double combine_chamfer_terms(double sum_a, std::size_t m, double sum_b, std::size_t n)
{
  return 0.5 * (sum_a / static_cast<double>(m)) + 0.5 * (sum_b / static_cast<double>(n));
}

/// Dense symmetric distance matrix over a trajectory pool.
class PairwiseDistanceMatrix
{
public:
  PairwiseDistanceMatrix(std::size_t size, std::vector<double> entries,
                         std::vector<std::size_t> pool_order);

  std::size_t size() const { return size_; }
  double operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }
  std::span<const double> row(std::size_t i) const
  {
    return std::span<const double>(entries_).subspan(i * size_, size_);
  }
  /// Source index of each pool position.
  std::span<const std::size_t> pool_order() const { return pool_order_; }
  /// True when every entry is zero, i.e. all pooled trajectories coincide.
  bool all_zero() const;

  /// Set distance between the pool positions flagged nonzero in `in_a` and the rest,
  /// summed in ascending pool index.
  double split_distance(std::span<const std::uint8_t> in_a) const;
  /// Set distance between two explicit index lists, summed in list order.
  double split_distance(std::span<const std::size_t> a, std::span<const std::size_t> b) const;

private:
  std::size_t size_;
  std::vector<double> entries_;
  std::vector<std::size_t> pool_order_;
};

PairwiseDistanceMatrix build_distance_matrix(std::span<const Trajectory> pool);

}  // namespace coeval

#endif  // COEVAL__METRICS_HPP_
