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

#ifndef COEVAL__CORE_MODEL_HPP_
#define COEVAL__CORE_MODEL_HPP_

#include <Eigen/Core>

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace coeval
{

inline constexpr std::size_t kMaxBoxesPerFrame = 256;
inline constexpr std::size_t kMaxRoadSegments = 4096;
inline constexpr double kDefaultWaypointDt = 0.1;      // 10 Hz
inline constexpr std::size_t kDefaultWaypointCount = 50;  // 5 s horizon
inline constexpr double kRotationTolerance = 1e-9;

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Planar waypoint in the ego frame at prediction time, meters.
struct Point2
{
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2 &, const Point2 &) = default;
};

/**
 * @brief Planned or logged future motion, q waypoints sampled every dt seconds.
 *
 * Waypoint k (0-based) is the state at time (k + 1) * dt, i.e. the current
 * position is not included. Construction rejects empty, non-finite, or
 * non-positive-dt inputs, so every Trajectory in circulation is valid.
 */
class Trajectory
{
public:
  Trajectory(std::vector<Point2> waypoints, double dt);

  std::span<const Point2> waypoints() const { return waypoints_; }
  std::size_t size() const { return waypoints_.size(); }
  double dt() const { return dt_; }
  double duration() const { return static_cast<double>(waypoints_.size()) * dt_; }
  const Point2 & operator[](std::size_t k) const { return waypoints_[k]; }

  friend bool operator==(const Trajectory &, const Trajectory &) = default;

private:
  std::vector<Point2> waypoints_;
  double dt_;
};

/// Collection of trajectories sampled from one planner on one scene.
class TrajectorySet
{
public:
  TrajectorySet(std::vector<Trajectory> members, std::string source_label);

  std::span<const Trajectory> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const std::string & source_label() const { return source_label_; }
  const Trajectory & operator[](std::size_t i) const { return members_[i]; }

private:
  std::vector<Trajectory> members_;
  std::string source_label_;
};

/// Rigid ego pose. `rotation` maps ego-frame axes into the world frame, so a
/// world point p sits at rotation^T (p - translation) in the ego frame.
struct EgoPose
{
  Mat3 rotation = Mat3::Identity();
  Vec3 translation = Vec3::Zero();

  static EgoPose from_yaw(double yaw, const Vec3 & translation);
};

enum class AgentType : std::uint8_t { kVehicle, kPedestrian, kCyclist, kOther };
inline constexpr std::size_t kNumAgentTypes = 4;

enum class SegmentType : std::uint8_t { kLaneCenter, kLaneBoundary, kRoadEdge, kCrosswalk, kOther };
inline constexpr std::size_t kNumSegmentTypes = 5;

enum class Weather : std::uint8_t { kNoRain, kRain };
inline constexpr std::size_t kNumWeatherValues = 2;

std::string_view to_string(AgentType type);
std::string_view to_string(SegmentType type);
std::string_view to_string(Weather weather);
std::optional<AgentType> parse_agent_type(std::string_view name);
std::optional<SegmentType> parse_segment_type(std::string_view name);
std::optional<Weather> parse_weather(std::string_view name);

struct BoundingBox
{
  Vec3 center = Vec3::Zero();
  Vec3 size = Vec3::Ones();  // width, height, length
  double yaw = 0.0;
  AgentType agent_type = AgentType::kVehicle;
};

struct RoadSegment
{
  Vec3 start = Vec3::Zero();
  Vec3 end = Vec3::UnitX();
  SegmentType segment_type = SegmentType::kLaneCenter;
};

struct GeoLocation
{
  double latitude = 0.0;
  double longitude = 0.0;
};

struct SceneConditions
{
  Weather weather = Weather::kNoRain;
  std::int64_t timestamp_utc = 0;
  GeoLocation geolocation;
  double utc_offset = 0.0;  // hours, reporting only
};

struct Frame
{
  std::vector<BoundingBox> boxes;
  EgoPose ego_pose;
};

struct Scene
{
  std::string id;
  std::vector<Frame> frames;
  std::vector<RoadSegment> road;
  SceneConditions conditions;
  Trajectory ground_truth_future{{Point2{}}, kDefaultWaypointDt};
};

// Geometry -------------------------------------------------------------------

/// Throws kInvalidPose unless the rotation is orthonormal with det +1.
void require_valid_pose(const EgoPose & pose);
bool is_valid_rotation(const Mat3 & rotation, double tolerance = kRotationTolerance);

Vec3 world_to_ego(const Vec3 & point, const EgoPose & pose);
Vec3 ego_to_world(const Vec3 & point, const EgoPose & pose);

/// Heading of the ego x axis in the world xy plane.
double ego_heading(const EgoPose & pose);

/// Wraps an angle into [-pi, pi).
double wrap_angle(double radians);

/// Prefix with every waypoint whose time index * dt <= horizon.
/// Throws kEmptyHorizon when horizon < dt.
Trajectory truncate_to_horizon(const Trajectory & trajectory, double horizon);

/// Number of waypoints inside (0, horizon]; tolerant to the usual binary
/// representation error of values like 3.0 / 0.1.
std::size_t waypoints_within(double horizon, double dt);

// Validation -----------------------------------------------------------------

/// Every invariant violation found in the scene, empty when valid.
std::vector<std::string> validate_scene(const Scene & scene);

bool all_finite(const Vec3 & v);

}  // namespace coeval

#endif  // COEVAL__CORE_MODEL_HPP_
