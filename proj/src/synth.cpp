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

#include "coeval/synth.hpp"

#include "coeval/conditions.hpp"
#include "coeval/error.hpp"
#include "coeval/streams.hpp"

#include <Eigen/Geometry>

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

namespace coeval
{
namespace
{

constexpr double kLaneHalfWidth = 1.75;
constexpr double kRoadHalfWidth = 5.25;
constexpr double kStraightCurvature = 1e-12;

struct ArcPoint
{
  double x;
  double y;
  double heading;
};

// Point at arc length s along a constant-curvature path starting at the
// origin heading +x.
ArcPoint arc_point(double curvature, double s)
{
  if (std::abs(curvature) < kStraightCurvature) {
    return {s, 0.0, 0.0};
  }
  const double angle = curvature * s;
  const double half = std::sin(0.5 * angle);
  return {std::sin(angle) / curvature, 2.0 * half * half / curvature, angle};
}

double uniform(Rng & rng, double lo, double hi)
{
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Vec3 box_size(AgentType type, Rng & rng)
{
  switch (type) {
    case AgentType::kVehicle:
      return {uniform(rng, 1.8, 2.2), uniform(rng, 1.4, 1.9), uniform(rng, 4.2, 5.2)};
    case AgentType::kPedestrian:
      return {uniform(rng, 0.5, 0.8), uniform(rng, 1.5, 1.9), uniform(rng, 0.5, 0.8)};
    case AgentType::kCyclist:
      return {uniform(rng, 0.6, 0.9), uniform(rng, 1.6, 1.9), uniform(rng, 1.6, 1.9)};
    case AgentType::kOther:
      break;
  }
  return {uniform(rng, 0.5, 3.0), uniform(rng, 0.5, 3.0), uniform(rng, 0.5, 3.0)};
}

}  // namespace

Trajectory oracle_rollout(const OracleParams & params, std::size_t waypoint_count, double dt)
{
  if (waypoint_count == 0 || !(dt > 0.0)) {
    throw Error(ErrorKind::kInvalidParameter, "rollout needs waypoints and a positive dt");
  }
  std::vector<Point2> points;
  points.reserve(waypoint_count);
  for (std::size_t k = 1; k <= waypoint_count; ++k) {
    const auto p = arc_point(params.curvature, params.base_speed * static_cast<double>(k) * dt);
    points.push_back({p.x, p.y});
  }
  return Trajectory(std::move(points), dt);
}

Scene generate_scene(std::uint64_t seed, const ScenarioParams & params, std::string id)
{
  if (params.num_boxes > kMaxBoxesPerFrame) {
    throw Error(ErrorKind::kInvalidParameter,
                "box count " + std::to_string(params.num_boxes) + " exceeds the cap of " +
                  std::to_string(kMaxBoxesPerFrame));
  }
  if (params.num_road_segments > kMaxRoadSegments) {
    throw Error(ErrorKind::kInvalidParameter,
                "road segment count " + std::to_string(params.num_road_segments) +
                  " exceeds the cap of " + std::to_string(kMaxRoadSegments));
  }
  if (params.num_frames == 0 || !(params.frame_dt > 0.0)) {
    throw Error(ErrorKind::kInvalidParameter, "scene needs at least one frame and frame_dt > 0");
  }
  if (!(params.min_speed >= 0.0 && params.max_speed >= params.min_speed) ||
      !(params.max_abs_curvature >= 0.0) ||
      !(params.rain_probability >= 0.0 && params.rain_probability <= 1.0) ||
      params.max_timestamp < params.min_timestamp) {
    throw Error(ErrorKind::kInvalidParameter, "inconsistent scenario ranges");
  }

  Rng rng(seed);
  const double speed = uniform(rng, params.min_speed, params.max_speed);
  const double curvature = params.max_abs_curvature > 0.0
                             ? uniform(rng, -params.max_abs_curvature, params.max_abs_curvature)
                             : 0.0;
  const double yaw0 = uniform(rng, -std::numbers::pi, std::numbers::pi);
  const Vec3 origin(uniform(rng, -1000.0, 1000.0), uniform(rng, -1000.0, 1000.0), 0.0);
  const EgoPose anchor = EgoPose::from_yaw(yaw0, origin);

  // Path point at arc length s, pushed sideways by `offset`, in world frame.
  auto world_at = [&](double s, double offset) {
    const auto p = arc_point(curvature, s);
    const Vec3 local(p.x - offset * std::sin(p.heading), p.y + offset * std::cos(p.heading), 0.0);
    return Vec3(anchor.rotation * local + anchor.translation);
  };
  auto heading_at = [&](double s) { return yaw0 + arc_point(curvature, s).heading; };

  Scene scene;
  scene.id = std::move(id);

  const double horizon = static_cast<double>(params.waypoint_count) * params.waypoint_dt;
  const double s_min = -30.0;
  const double s_max = speed * horizon + 30.0;

  constexpr std::array<std::pair<double, SegmentType>, 5> kPolylines = {{
    {0.0, SegmentType::kLaneCenter},
    {kLaneHalfWidth, SegmentType::kLaneBoundary},
    {-kLaneHalfWidth, SegmentType::kLaneBoundary},
    {kRoadHalfWidth, SegmentType::kRoadEdge},
    {-kRoadHalfWidth, SegmentType::kRoadEdge},
  }};
  const std::size_t pieces = (params.num_road_segments + kPolylines.size() - 1) / kPolylines.size();
  const double piece_length = pieces > 0 ? (s_max - s_min) / static_cast<double>(pieces) : 0.0;
  scene.road.reserve(params.num_road_segments);
  for (std::size_t i = 0; i < params.num_road_segments; ++i) {
    const auto & [offset, type] = kPolylines[i % kPolylines.size()];
    const double s0 = s_min + piece_length * static_cast<double>(i / kPolylines.size());
    scene.road.push_back({world_at(s0, offset), world_at(s0 + piece_length, offset), type});
  }

  std::vector<BoundingBox> boxes;
  boxes.reserve(params.num_boxes);
  std::discrete_distribution<int> type_dist({0.6, 0.15, 0.15, 0.1});
  for (std::size_t b = 0; b < params.num_boxes; ++b) {
    const auto type = static_cast<AgentType>(type_dist(rng));
    const double s = uniform(rng, -20.0, 80.0);
    const double side = uniform(rng, 0.0, 1.0) < 0.5 ? -1.0 : 1.0;
    const double lateral = side * uniform(rng, 4.0, 15.0);
    BoundingBox box;
    box.size = box_size(type, rng);
    box.center = world_at(s, lateral);
    box.center.z() = 0.5 * box.size.y();
    box.yaw = wrap_angle(heading_at(s) + uniform(rng, -0.3, 0.3));
    box.agent_type = type;
    boxes.push_back(box);
  }

  scene.frames.reserve(params.num_frames);
  for (std::size_t f = 0; f < params.num_frames; ++f) {
    const double t = -static_cast<double>(params.num_frames - 1 - f) * params.frame_dt;
    Frame frame;
    frame.boxes = boxes;
    frame.ego_pose = EgoPose::from_yaw(heading_at(speed * t), world_at(speed * t, 0.0));
    scene.frames.push_back(std::move(frame));
  }

  auto & cond = scene.conditions;
  cond.weather = uniform(rng, 0.0, 1.0) < params.rain_probability ? Weather::kRain : Weather::kNoRain;
  cond.timestamp_utc =
    std::uniform_int_distribution<std::int64_t>(params.min_timestamp, params.max_timestamp)(rng);
  cond.geolocation.latitude = uniform(rng, params.min_latitude, params.max_latitude);
  cond.geolocation.longitude = uniform(rng, params.min_longitude, params.max_longitude);
  cond.utc_offset = std::round(cond.geolocation.longitude / 15.0);

  OracleParams motion;
  motion.base_speed = speed;
  motion.curvature = curvature;
  scene.ground_truth_future = oracle_rollout(motion, params.waypoint_count, params.waypoint_dt);
  return scene;
}

ActiveConditions scene_conditions(const Scene & scene)
{
  const auto & cond = scene.conditions;
  const auto sun =
    solar_angles(cond.timestamp_utc, cond.geolocation.latitude, cond.geolocation.longitude);
  ActiveConditions active;
  active.rain = cond.weather == Weather::kRain;
  active.night = sun.elevation < kNightElevation;
  return active;
}

TrajectorySet oracle_planner(const Scene & scene, const OracleParams & params,
                             std::size_t num_samples, std::uint64_t seed,
                             const ActiveConditions & active, std::string label)
{
  if (num_samples == 0) {
    throw Error(ErrorKind::kInvalidParameter, "oracle planner needs at least one sample");
  }
  const auto & s = params.sensitivity;
  if (!(params.noise_sigma >= 0.0) || !(s.rain.sigma_factor > 0.0) ||
      !(s.night.sigma_factor > 0.0) || !(s.layout_removed.sigma_factor > 0.0)) {
    throw Error(ErrorKind::kInvalidParameter, "noise sigma must be >= 0 and factors > 0");
  }
  double sigma = params.noise_sigma;
  double bias = 0.0;
  auto apply = [&](bool on, const ConditionEffect & effect) {
    if (on) {
      sigma *= effect.sigma_factor;
      bias += effect.lateral_bias;
    }
  };
  apply(active.rain, s.rain);
  apply(active.night, s.night);
  apply(active.layout_removed, s.layout_removed);

  const auto & gt = scene.ground_truth_future;
  const auto q = gt.size();
  const double step_sigma =
    params.noise_mode == NoiseMode::kRandomWalk ? sigma / std::sqrt(static_cast<double>(q)) : sigma;
  Rng rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<Trajectory> members;
  members.reserve(num_samples);
  for (std::size_t i = 0; i < num_samples; ++i) {
    std::vector<Point2> points;
    points.reserve(q);
    double wx = 0.0;
    double wy = 0.0;
    for (std::size_t k = 0; k < q; ++k) {
      const double ex = step_sigma * normal(rng);
      const double ey = step_sigma * normal(rng);
      if (params.noise_mode == NoiseMode::kRandomWalk) {
        wx += ex;
        wy += ey;
      } else {
        wx = ex;
        wy = ey;
      }
      points.push_back({gt[k].x + wx, gt[k].y + wy + bias});
    }
    members.emplace_back(std::move(points), gt.dt());
  }
  return TrajectorySet(std::move(members), std::move(label));
}

TrajectorySet oracle_planner(const Scene & scene, const OracleParams & params,
                             std::size_t num_samples, std::uint64_t seed)
{
  return oracle_planner(scene, params, num_samples, seed, scene_conditions(scene));
}

TrajectorySet shift_laterally(const TrajectorySet & set, double lateral)
{
  std::vector<Trajectory> members;
  members.reserve(set.size());
  for (const auto & t : set.members()) {
    std::vector<Point2> points(t.waypoints().begin(), t.waypoints().end());
    for (auto & p : points) {
      p.y += lateral;
    }
    members.emplace_back(std::move(points), t.dt());
  }
  return TrajectorySet(std::move(members), set.source_label());
}

std::string synthetic_scene_id(std::size_t index)
{
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "scene_%06zu", index);
  return buffer;
}

SyntheticDraw draw_synthetic(std::uint64_t master_seed, std::size_t index, std::size_t m,
                             std::size_t n, double shift_meters, const ExperimentConfig & config)
{
  if (!(shift_meters >= 0.0)) {
    throw Error(ErrorKind::kInvalidParameter, "shift must be nonnegative");
  }
  auto id = synthetic_scene_id(index);
  Scene scene = generate_scene(derive_seed(master_seed, id + "/scene"), config.scenario, id);
  const auto active = scene_conditions(scene);
  auto real =
    oracle_planner(scene, config.oracle, m, derive_seed(master_seed, id + "/real"), active, "real");
  auto gen =
    oracle_planner(scene, config.oracle, n, derive_seed(master_seed, id + "/gen"), active, "gen");
  if (shift_meters != 0.0) {
    gen = shift_laterally(gen, shift_meters);
  }
  return SyntheticDraw{std::move(scene), std::move(real), std::move(gen)};
}

BptSummary run_shift_experiment(double shift_meters, std::size_t num_scenes, std::size_t m,
                                std::size_t n, std::size_t permutations, double alpha,
                                std::uint64_t seed, const ExperimentConfig & config)
{
  if (num_scenes == 0 || m == 0 || n == 0) {
    throw Error(ErrorKind::kInvalidParameter, "experiment counts must be positive");
  }
  std::vector<PermutationTestResult> results(num_scenes);
  parallel_for(num_scenes, config.jobs, [&](std::size_t i) {
    const auto draw = draw_synthetic(seed, i, m, n, shift_meters, config);
    PermutationTestOptions options;
    options.permutations = permutations;
    options.alpha = alpha;
    options.rule = config.rule;
    options.seed = scene_stream_seed(seed, draw.scene.id);
    results[i] = permutation_test(draw.real, draw.gen, options);
    results[i].scene_id = draw.scene.id;
  });
  return bpt_rate(results, alpha);
}

BptSummary run_h0_experiment(std::size_t num_scenes, std::size_t m, std::size_t n,
                             std::size_t permutations, double alpha, std::uint64_t seed,
                             const ExperimentConfig & config)
{
  return run_shift_experiment(0.0, num_scenes, m, n, permutations, alpha, seed, config);
}

}  // namespace coeval
