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

#ifndef COEVAL__SYNTH_HPP_
#define COEVAL__SYNTH_HPP_

#include "coeval/bpt.hpp"
#include "coeval/core_model.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace coeval
{

/// Effect of one active condition on the oracle planner.
struct ConditionEffect
{
  double sigma_factor = 1.0;
  double lateral_bias = 0.0;  // meters, +y in the ego frame
};

struct ConditionSensitivity
{
  ConditionEffect rain{1.10, 0.0};
  ConditionEffect night{1.15, 0.0};
  ConditionEffect layout_removed{1.8, 0.3};
};

enum class NoiseMode {
  kIid,         ///< independent per-waypoint noise
  kRandomWalk,  ///< cumulative noise whose last waypoint has std sigma
};

/// Stochastic stand-in for a learned planner: ground truth plus Gaussian noise.
struct OracleParams
{
  double base_speed = 10.0;  // m/s, nominal motion of oracle_rollout
  double curvature = 0.0;    // 1/m
  double noise_sigma = 0.5;  // m
  ConditionSensitivity sensitivity;
  NoiseMode noise_mode = NoiseMode::kIid;
};

/// Which conditions are in effect for one planner invocation.
struct ActiveConditions
{
  bool rain = false;
  bool night = false;
  bool layout_removed = false;
};

/// Sun elevation (degrees) below which a scene counts as night.
inline constexpr double kNightElevation = -6.0;

struct ScenarioParams
{
  std::size_t num_frames = 17;
  double frame_dt = 0.1;
  std::size_t num_boxes = 24;
  std::size_t num_road_segments = 120;
  std::size_t waypoint_count = kDefaultWaypointCount;
  double waypoint_dt = kDefaultWaypointDt;
  double min_speed = 5.0;
  double max_speed = 15.0;
  double max_abs_curvature = 0.02;
  double rain_probability = 0.2;
  double min_latitude = 25.0;
  double max_latitude = 50.0;
  double min_longitude = -125.0;
  double max_longitude = -70.0;
  std::int64_t min_timestamp = 1420070400;  // 2015-01-01
  std::int64_t max_timestamp = 1767225600;  // 2026-01-01
};

/// Noiseless constant-speed, constant-curvature rollout in the ego frame.
Trajectory oracle_rollout(const OracleParams & params, std::size_t waypoint_count, double dt);

/// Deterministic scene for the seed. Throws kInvalidParameter when counts
/// exceed the scene caps.
Scene generate_scene(std::uint64_t seed, const ScenarioParams & params, std::string id);

/// Conditions in effect for a scene as logged: rain from the weather tag,
/// night from the sun elevation.
ActiveConditions scene_conditions(const Scene & scene);

/// num_samples planner outputs for the scene. Each sample is the ground truth
/// plus N(0, sigma^2) noise per coordinate, sigma = noise_sigma times the
/// factors of the active conditions, plus their summed lateral bias.
TrajectorySet oracle_planner(const Scene & scene, const OracleParams & params,
                             std::size_t num_samples, std::uint64_t seed,
                             const ActiveConditions & active, std::string label = "oracle");
TrajectorySet oracle_planner(const Scene & scene, const OracleParams & params,
                             std::size_t num_samples, std::uint64_t seed);

/// Copy of the set with every waypoint moved by `lateral` meters along +y.
TrajectorySet shift_laterally(const TrajectorySet & set, double lateral);

struct ExperimentConfig
{
  ScenarioParams scenario;
  OracleParams oracle;
  std::size_t jobs = 1;
  PValueRule rule = PValueRule::kStrict;
};

/// Scene ids used by the experiments and the simulate command.
std::string synthetic_scene_id(std::size_t index);

/// Everything drawn for one synthetic scene.
struct SyntheticDraw
{
  Scene scene;
  TrajectorySet real;
  TrajectorySet gen;
};

/// Scene plus real and generated sets for index `index` under `master_seed`;
/// the generated set is shifted laterally by `shift_meters`.
SyntheticDraw draw_synthetic(std::uint64_t master_seed, std::size_t index, std::size_t m,
                             std::size_t n, double shift_meters, const ExperimentConfig & config);

/// Per-scene permutation tests where real and generated sets come from the
/// same oracle distribution.
BptSummary run_h0_experiment(std::size_t num_scenes, std::size_t m, std::size_t n,
                             std::size_t permutations, double alpha, std::uint64_t seed,
                             const ExperimentConfig & config = {});

/// As run_h0_experiment with the generated sets shifted laterally.
BptSummary run_shift_experiment(double shift_meters, std::size_t num_scenes, std::size_t m,
                                std::size_t n, std::size_t permutations, double alpha,
                                std::uint64_t seed, const ExperimentConfig & config = {});

}  // namespace coeval

#endif  // COEVAL__SYNTH_HPP_
