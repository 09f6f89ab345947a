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

#include "coeval/metrics.hpp"

#include "coeval/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace coeval
{
namespace
{

void require_same_shape(const Trajectory & a, const Trajectory & b)
{
  if (a.size() != b.size() || a.dt() != b.dt()) {
    throw Error(ErrorKind::kShapeMismatch,
                "trajectories differ in shape (q=" + std::to_string(a.size()) + " vs " +
                  std::to_string(b.size()) + ")");
  }
}

}  // namespace

double trajectory_distance(const Trajectory & a, const Trajectory & b)
{
  require_same_shape(a, b);
  double sum = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double dx = a[k].x - b[k].x;
    const double dy = a[k].y - b[k].y;
    sum += dx * dx + dy * dy;
  }
  return std::sqrt(sum);
}

double ade(const Trajectory & pred, const Trajectory & gt, double horizon, AdeMode mode)
{
  require_same_shape(pred, gt);
  const auto count = waypoints_within(horizon, pred.dt());
  if (count == 0) {
    throw Error(ErrorKind::kEmptyHorizon, "horizon shorter than one waypoint interval");
  }
  if (count > pred.size()) {
    throw Error(ErrorKind::kHorizonTooLong,
                "horizon " + std::to_string(horizon) + " s exceeds trajectory length " +
                  std::to_string(pred.duration()) + " s");
  }
  if (mode == AdeMode::kFinal) {
    return std::hypot(pred[count - 1].x - gt[count - 1].x, pred[count - 1].y - gt[count - 1].y);
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < count; ++k) {
    sum += std::hypot(pred[k].x - gt[k].x, pred[k].y - gt[k].y);
  }
  return sum / static_cast<double>(count);
}

double set_distance(std::span<const Trajectory> a, std::span<const Trajectory> b)
{
  if (a.empty() || b.empty()) {
    throw Error(ErrorKind::kEmptySet, "set distance needs two nonempty sets");
  }
  // d(a_i, b_j) evaluated once per pair; trajectory_distance is bitwise
  // symmetric so both directions read the same values.
  std::vector<double> d(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      d[i * b.size() + j] = trajectory_distance(a[i], b[j]);
    }
  }
  double sum_a = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < b.size(); ++j) {
      best = std::min(best, d[i * b.size() + j]);
    }
    sum_a += best;
  }
  double sum_b = 0.0;
  for (std::size_t j = 0; j < b.size(); ++j) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < a.size(); ++i) {
      best = std::min(best, d[i * b.size() + j]);
    }
    sum_b += best;
  }
  return combine_chamfer_terms(sum_a, a.size(), sum_b, b.size());
}

double set_distance(const TrajectorySet & a, const TrajectorySet & b)
{
  return set_distance(a.members(), b.members());
}

PairwiseDistanceMatrix::PairwiseDistanceMatrix(
  std::size_t size, std::vector<double> entries, std::vector<std::size_t> pool_order)
: size_(size), entries_(std::move(entries)), pool_order_(std::move(pool_order))
{
  if (entries_.size() != size_ * size_ || pool_order_.size() != size_) {
    throw Error(ErrorKind::kShapeMismatch, "distance matrix storage does not match its size");
  }
}

bool PairwiseDistanceMatrix::all_zero() const
{
  return std::all_of(entries_.begin(), entries_.end(), [](double v) { return v == 0.0; });
}

double PairwiseDistanceMatrix::split_distance(std::span<const std::uint8_t> in_a) const
{
  if (in_a.size() != size_) {
    throw Error(ErrorKind::kShapeMismatch, "split mask does not match the pool size");
  }
  std::size_t m = 0;
  double sum_a = 0.0;
  double sum_b = 0.0;
  for (std::size_t i = 0; i < size_; ++i) {
    const double * r = entries_.data() + i * size_;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < size_; ++j) {
      if ((in_a[j] != 0) != (in_a[i] != 0)) {
        best = std::min(best, r[j]);
      }
    }
    if (in_a[i]) {
      sum_a += best;
      ++m;
    } else {
      sum_b += best;
    }
  }
  if (m == 0 || m == size_) {
    throw Error(ErrorKind::kEmptySet, "split leaves one side empty");
  }
  return combine_chamfer_terms(sum_a, m, sum_b, size_ - m);
}

double PairwiseDistanceMatrix::split_distance(
  std::span<const std::size_t> a, std::span<const std::size_t> b) const
{
  if (a.empty() || b.empty()) {
    throw Error(ErrorKind::kEmptySet, "split leaves one side empty");
  }
  auto nearest = [this](std::size_t i, std::span<const std::size_t> others) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto j : others) {
      best = std::min(best, (*this)(i, j));
    }
    return best;
  };
  double sum_a = 0.0;
  for (const auto i : a) {
    sum_a += nearest(i, b);
  }
  double sum_b = 0.0;
  for (const auto j : b) {
    sum_b += nearest(j, a);
  }
  return combine_chamfer_terms(sum_a, a.size(), sum_b, b.size());
}

PairwiseDistanceMatrix build_distance_matrix(std::span<const Trajectory> pool)
{
  if (pool.empty()) {
    throw Error(ErrorKind::kEmptySet, "distance matrix needs a nonempty pool");
  }
  const auto size = pool.size();
  std::vector<double> entries(size * size, 0.0);
  std::vector<std::size_t> order(size);
  for (std::size_t i = 0; i < size; ++i) {
    order[i] = i;
    for (std::size_t j = i + 1; j < size; ++j) {
      const double d = trajectory_distance(pool[i], pool[j]);
      entries[i * size + j] = d;
      entries[j * size + i] = d;
    }
  }
  return PairwiseDistanceMatrix(size, std::move(entries), std::move(order));
}

}  // namespace coeval
