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

#include "coeval/frechet.hpp"

#include "coeval/error.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <string>

namespace coeval
{
namespace
{

constexpr double kEigenFloor = 1e-10;
constexpr double kNegativeTolerance = 1e-6;

Eigen::MatrixXd symmetrized(const Eigen::MatrixXd & m) { return 0.5 * (m + m.transpose()); }

}  // namespace

GaussianSummary fit_gaussian(const Eigen::MatrixXd & features, CovarianceEstimator estimator)
{
  const auto n = features.rows();
  if (n < 2) {
    throw Error(ErrorKind::kInsufficientData,
                "need at least 2 samples to fit a Gaussian, got " + std::to_string(n));
  }
  if (features.cols() == 0) {
    throw Error(ErrorKind::kShapeMismatch, "feature vectors have zero dimension");
  }
  if (!features.allFinite()) {
    throw Error(ErrorKind::kInvalidInput, "feature matrix has non-finite entries");
  }
  GaussianSummary g;
  g.sample_count = static_cast<std::size_t>(n);
  g.mean = features.colwise().mean().transpose();
  const Eigen::MatrixXd centered = features.rowwise() - g.mean.transpose();
  const double divisor = estimator == CovarianceEstimator::kUnbiased ? static_cast<double>(n - 1)
                                                                      : static_cast<double>(n);
  g.covariance = symmetrized(centered.transpose() * centered / divisor);
  return g;
}

Eigen::MatrixXd psd_sqrt(const Eigen::MatrixXd & symmetric, double floor)
{
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(symmetrized(symmetric));
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kNumericalFailure, "eigendecomposition did not converge");
  }
  Eigen::VectorXd roots = solver.eigenvalues();
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    roots[i] = roots[i] < floor ? 0.0 : std::sqrt(roots[i]);
  }
  return solver.eigenvectors() * roots.asDiagonal() * solver.eigenvectors().transpose();
}

double frechet_distance(const GaussianSummary & a, const GaussianSummary & b)
{
  const auto d = a.mean.size();
  if (b.mean.size() != d || a.covariance.rows() != d || a.covariance.cols() != d ||
      b.covariance.rows() != d || b.covariance.cols() != d) {
    throw Error(ErrorKind::kShapeMismatch, "Gaussian summaries differ in dimension");
  }
  const Eigen::MatrixXd root_a = psd_sqrt(a.covariance, kEigenFloor);
  const Eigen::MatrixXd middle = symmetrized(root_a * b.covariance * root_a);

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(middle, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kNumericalFailure, "eigendecomposition did not converge");
  }
  double trace_root = 0.0;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
    const double lambda = solver.eigenvalues()[i];
    trace_root += lambda < kEigenFloor ? 0.0 : std::sqrt(lambda);
  }

  const double mean_term = (a.mean - b.mean).squaredNorm();
  const double trace_a = a.covariance.trace();
  const double trace_b = b.covariance.trace();
  const double value = mean_term + trace_a + trace_b - 2.0 * trace_root;
  if (!std::isfinite(value)) {
    throw Error(ErrorKind::kNumericalFailure, "Frechet distance is not finite");
  }
  // Cancellation in the trace term scales with the covariance magnitude.
  const double tolerance = kNegativeTolerance * std::max(1.0, trace_a + trace_b);
  if (value < -tolerance) {
    throw Error(ErrorKind::kNumericalFailure,
                "Frechet distance is negative beyond tolerance: " + std::to_string(value));
  }
  return std::max(value, 0.0);
}

}  // namespace coeval
