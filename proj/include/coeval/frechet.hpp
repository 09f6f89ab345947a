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

#ifndef COEVAL__FRECHET_HPP_
#define COEVAL__FRECHET_HPP_

#include <Eigen/Core>

#include <cstddef>

namespace coeval
{

inline constexpr std::size_t kDefaultFeatureSamples = 5000;

enum class CovarianceEstimator {
  kUnbiased,  ///< divisor n - 1
  kBiased,    ///< divisor n
};

struct GaussianSummary
{
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;
  std::size_t sample_count = 0;
};

/// Moment fit over the rows of `features` (one sample per row).
GaussianSummary fit_gaussian(const Eigen::MatrixXd & features,
                             CovarianceEstimator estimator = CovarianceEstimator::kUnbiased);

/// ||mu_a - mu_b||^2 + Tr(S_a + S_b - 2 (S_a S_b)^{1/2}).
///
/// The trace of (S_a S_b)^{1/2} is taken from the eigenvalues of the symmetric
/// product S_a^{1/2} S_b S_a^{1/2}; eigenvalues below 1e-10 count as zero.
double frechet_distance(const GaussianSummary & a, const GaussianSummary & b);

/// Symmetric PSD square root with eigenvalues below `floor` clamped to zero.
Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd & symmetric, double floor = 1e-10);

}  // namespace coeval

#endif  // COEVAL__FRECHET_HPP_
