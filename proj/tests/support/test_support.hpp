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

#ifndef COEVAL__TESTS__TEST_SUPPORT_HPP_
#define COEVAL__TESTS__TEST_SUPPORT_HPP_

#include "coeval/core_model.hpp"

#include <Eigen/Geometry>

#include <filesystem>
#include <random>
#include <string>
#include <vector>

namespace coeval::testing
{

inline std::filesystem::path fixture(const std::string & name)
{
  return std::filesystem::path(COEVAL_FIXTURE_DIR) / name;
}

inline Trajectory random_trajectory(std::mt19937_64 & rng, std::size_t q, double dt = 0.1,
                                    double scale = 10.0)
{
  std::normal_distribution<double> normal(0.0, scale);
  std::vector<Point2> points(q);
  for (auto & p : points) {
    p = {normal(rng), normal(rng)};
  }
  return Trajectory(std::move(points), dt);
}

inline std::vector<Trajectory> random_trajectories(std::mt19937_64 & rng, std::size_t count,
                                                   std::size_t q)
{
  std::vector<Trajectory> out;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(random_trajectory(rng, q));
  }
  return out;
}

inline Trajectory constant(std::size_t q, Point2 p, double dt = 0.1)
{
  return Trajectory(std::vector<Point2>(q, p), dt);
}

inline EgoPose random_pose(std::mt19937_64 & rng)
{
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::Quaterniond quat(normal(rng), normal(rng), normal(rng), normal(rng));
  quat.normalize();
  EgoPose pose;
  pose.rotation = quat.toRotationMatrix();
  pose.translation = Vec3(normal(rng), normal(rng), normal(rng)) * 100.0;
  return pose;
}

/// Temporary directory removed on scope exit.
class TempDir
{
public:
  explicit TempDir(const std::string & tag)
  {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("coeval_" + tag + "_" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir()
  {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir & operator=(const TempDir &) = delete;

  const std::filesystem::path & path() const { return path_; }
  std::string file(const std::string & name) const { return (path_ / name).string(); }

private:
  std::filesystem::path path_;
};

}  // namespace coeval::testing

#endif  // COEVAL__TESTS__TEST_SUPPORT_HPP_
