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

#include "coeval/core_model.hpp"

#include "coeval/error.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

namespace coeval
{
namespace
{

template <typename Enum, std::size_t N>
std::optional<Enum> lookup(std::string_view name, const std::array<std::string_view, N> & names)
{
  for (std::size_t i = 0; i < N; ++i) {
    if (names[i] == name) {
      return static_cast<Enum>(i);
    }
  }
  return std::nullopt;
}

constexpr std::array<std::string_view, kNumAgentTypes> kAgentTypeNames = {
  "vehicle", "pedestrian", "cyclist", "other"};
constexpr std::array<std::string_view, kNumSegmentTypes> kSegmentTypeNames = {
  "lane_center", "lane_boundary", "road_edge", "crosswalk", "other"};
constexpr std::array<std::string_view, kNumWeatherValues> kWeatherNames = {"no_rain", "rain"};

std::string describe(const Vec3 & v)
{
  std::ostringstream os;
  os << "(" << v.x() << ", " << v.y() << ", " << v.z() << ")";
  return os.str();
}

}  // namespace

Trajectory::Trajectory(std::vector<Point2> waypoints, double dt)
: waypoints_(std::move(waypoints)), dt_(dt)
{
  if (waypoints_.empty()) {
    throw Error(ErrorKind::kInvalidInput, "trajectory has no waypoints");
  }
  if (!(std::isfinite(dt_) && dt_ > 0.0)) {
    throw Error(ErrorKind::kInvalidInput, "trajectory dt must be finite and positive");
  }
  for (std::size_t k = 0; k < waypoints_.size(); ++k) {
    if (!std::isfinite(waypoints_[k].x) || !std::isfinite(waypoints_[k].y)) {
      throw Error(
        ErrorKind::kInvalidInput, "non-finite coordinate at waypoint " + std::to_string(k));
    }
  }
}

TrajectorySet::TrajectorySet(std::vector<Trajectory> members, std::string source_label)
: members_(std::move(members)), source_label_(std::move(source_label))
{
  if (members_.empty()) {
    throw Error(ErrorKind::kEmptySet, "trajectory set '" + source_label_ + "' is empty");
  }
  const auto q = members_.front().size();
  const auto dt = members_.front().dt();
  for (std::size_t i = 1; i < members_.size(); ++i) {
    if (members_[i].size() != q || members_[i].dt() != dt) {
      throw Error(
        ErrorKind::kShapeMismatch,
        "member " + std::to_string(i) + " of set '" + source_label_ + "' differs in q or dt");
    }
  }
}

EgoPose EgoPose::from_yaw(double yaw, const Vec3 & translation)
{
  EgoPose pose;
  pose.rotation = Eigen::AngleAxisd(yaw, Vec3::UnitZ()).toRotationMatrix();
  pose.translation = translation;
  return pose;
}

std::string_view to_string(AgentType type) { return kAgentTypeNames[static_cast<std::size_t>(type)]; }
std::string_view to_string(SegmentType type)
{
  return kSegmentTypeNames[static_cast<std::size_t>(type)];
}
std::string_view to_string(Weather weather) { return kWeatherNames[static_cast<std::size_t>(weather)]; }

std::optional<AgentType> parse_agent_type(std::string_view name)
{
  return lookup<AgentType>(name, kAgentTypeNames);
}
std::optional<SegmentType> parse_segment_type(std::string_view name)
{
  return lookup<SegmentType>(name, kSegmentTypeNames);
}
std::optional<Weather> parse_weather(std::string_view name)
{
  return lookup<Weather>(name, kWeatherNames);
}

bool all_finite(const Vec3 & v) { return v.allFinite(); }

bool is_valid_rotation(const Mat3 & rotation, double tolerance)
{
  if (!rotation.allFinite()) {
    return false;
  }
  const Mat3 gram = rotation.transpose() * rotation;
  if ((gram - Mat3::Identity()).cwiseAbs().maxCoeff() > tolerance) {
    return false;
  }
  return std::abs(rotation.determinant() - 1.0) <= tolerance;
}

void require_valid_pose(const EgoPose & pose)
{
  if (!is_valid_rotation(pose.rotation)) {
    throw Error(ErrorKind::kInvalidPose, "rotation is not orthonormal with determinant +1");
  }
  if (!all_finite(pose.translation)) {
    throw Error(ErrorKind::kInvalidPose, "translation is not finite");
  }
}

Vec3 world_to_ego(const Vec3 & point, const EgoPose & pose)
{
  require_valid_pose(pose);
  return pose.rotation.transpose() * (point - pose.translation);
}

Vec3 ego_to_world(const Vec3 & point, const EgoPose & pose)
{
  require_valid_pose(pose);
  return pose.rotation * point + pose.translation;
}

double ego_heading(const EgoPose & pose) { return std::atan2(pose.rotation(1, 0), pose.rotation(0, 0)); }

double wrap_angle(double radians)
{
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double wrapped = std::fmod(radians + std::numbers::pi, kTwoPi);
  if (wrapped < 0.0) {
    wrapped += kTwoPi;
  }
  wrapped -= std::numbers::pi;
  // fmod can land exactly on +pi after the shift back.
  return wrapped >= std::numbers::pi ? -std::numbers::pi : wrapped;
}

std::size_t waypoints_within(double horizon, double dt)
{
  const double ratio = horizon / dt;
  return static_cast<std::size_t>(std::floor(ratio + 1e-9 * std::max(1.0, ratio)));
}

Trajectory truncate_to_horizon(const Trajectory & trajectory, double horizon)
{
  if (!(horizon >= 0.0) || waypoints_within(horizon, trajectory.dt()) == 0) {
    throw Error(ErrorKind::kEmptyHorizon, "horizon shorter than one waypoint interval");
  }
  const auto count = std::min(waypoints_within(horizon, trajectory.dt()), trajectory.size());
  const auto points = trajectory.waypoints();
  return Trajectory({points.begin(), points.begin() + static_cast<std::ptrdiff_t>(count)},
                    trajectory.dt());
}

std::vector<std::string> validate_scene(const Scene & scene)
{
  std::vector<std::string> issues;
  if (scene.id.empty()) {
    issues.emplace_back("scene id is empty");
  }
  if (scene.frames.empty()) {
    issues.emplace_back("scene has no frames");
  }
  for (std::size_t f = 0; f < scene.frames.size(); ++f) {
    const auto & frame = scene.frames[f];
    const std::string where = "frame " + std::to_string(f);
    if (frame.boxes.size() > kMaxBoxesPerFrame) {
      issues.push_back(where + ": " + std::to_string(frame.boxes.size()) +
                       " boxes exceed the cap of " + std::to_string(kMaxBoxesPerFrame));
    }
    if (!is_valid_rotation(frame.ego_pose.rotation)) {
      issues.push_back(where + ": ego rotation is not orthonormal with determinant +1");
    }
    if (!all_finite(frame.ego_pose.translation)) {
      issues.push_back(where + ": ego translation is not finite");
    }
    for (std::size_t b = 0; b < frame.boxes.size(); ++b) {
      const auto & box = frame.boxes[b];
      const std::string bwhere = where + " box " + std::to_string(b);
      if (!all_finite(box.center)) {
        issues.push_back(bwhere + ": non-finite center " + describe(box.center));
      }
      if (!all_finite(box.size) || (box.size.array() <= 0.0).any()) {
        issues.push_back(bwhere + ": dimensions must be positive, got " + describe(box.size));
      }
      if (!(box.yaw >= -std::numbers::pi && box.yaw < std::numbers::pi)) {
        issues.push_back(bwhere + ": yaw outside [-pi, pi)");
      }
    }
  }
  if (scene.road.size() > kMaxRoadSegments) {
    issues.push_back(std::to_string(scene.road.size()) + " road segments exceed the cap of " +
                     std::to_string(kMaxRoadSegments));
  }
  for (std::size_t s = 0; s < scene.road.size(); ++s) {
    const auto & seg = scene.road[s];
    const std::string where = "road segment " + std::to_string(s);
    if (!all_finite(seg.start) || !all_finite(seg.end)) {
      issues.push_back(where + ": non-finite endpoint");
    } else if (seg.start == seg.end) {
      issues.push_back(where + ": start equals end");
    }
  }
  const auto & geo = scene.conditions.geolocation;
  if (!(geo.latitude >= -90.0 && geo.latitude <= 90.0)) {
    issues.emplace_back("latitude outside [-90, 90]");
  }
  if (!(geo.longitude >= -180.0 && geo.longitude <= 180.0)) {
    issues.emplace_back("longitude outside [-180, 180]");
  }
  if (!std::isfinite(scene.conditions.utc_offset)) {
    issues.emplace_back("utc_offset is not finite");
  }
  return issues;
}

}  // namespace coeval
