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

#ifndef COEVAL__CONDITIONS_HPP_
#define COEVAL__CONDITIONS_HPP_

#include "coeval/core_model.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace coeval
{

inline constexpr std::size_t kDefaultSunFrequencies = 8;
inline constexpr double kDefaultDropoutProbability = 0.1;
inline constexpr std::size_t kBoxFeatureWidth = 8 + kNumAgentTypes;
inline constexpr std::size_t kRoadFeatureWidth = 6 + kNumSegmentTypes;
inline constexpr std::size_t kEgoFeatureWidth = 12;

/// Valid timestamps for solar_angles: 1950-01-01T00:00Z up to 2101-01-01T00:00Z.
inline constexpr std::int64_t kSolarEraBegin = -631152000;
inline constexpr std::int64_t kSolarEraEnd = 4133980800;

struct SunAngles
{
  double azimuth = 0.0;    ///< degrees in [0, 360), clockwise from true north
  double elevation = 0.0;  ///< degrees in [-90, 90], geometric (no refraction)
};

/**
 * Solar azimuth and elevation for an instant and a place.
 *
 * NOAA solar calculator formulation: mean longitude and anomaly of the sun in
 * Julian centuries since J2000, apparent longitude and corrected obliquity,
 * then declination and equation of time, true solar time, hour angle, and
 * finally the horizontal coordinates. Within a few hundredths of a degree of
 * a full ephemeris across 1950-2100.
 */
SunAngles solar_angles(std::int64_t timestamp_utc, double latitude, double longitude);

/// Solar declination in degrees at the instant, same series as solar_angles.
double solar_declination(std::int64_t timestamp_utc);

/// [sin(a), cos(a), sin(2a), cos(2a), ..., sin(2^{K-1} a), cos(2^{K-1} a)].
std::vector<double> sinusoidal_encode(double angle, std::size_t num_frequencies);

/// [x, y, z, width, height, length, sin(yaw), cos(yaw), one-hot type], with
/// position and yaw expressed relative to the ego pose.
std::vector<double> featurize_box(const BoundingBox & box, const EgoPose & pose);

/// [start xyz, end xyz, one-hot type] in the ego frame.
std::vector<double> featurize_road_segment(const RoadSegment & segment, const EgoPose & pose);

/// Row-major rotation followed by translation.
std::vector<double> featurize_ego_pose(const EgoPose & pose);

std::vector<double> featurize_weather(Weather weather);

enum class ConditionGroup : std::uint8_t { kBoxes, kRoad, kEgoPose, kSun, kWeather };
inline constexpr std::size_t kNumConditionGroups = 5;

/// Presence flags per condition group; false means dropped.
struct DropoutMask
{
  bool boxes = true;
  bool road = true;
  bool ego_pose = true;
  bool sun = true;
  bool weather = true;

  bool present(ConditionGroup group) const;
  friend bool operator==(const DropoutMask &, const DropoutMask &) = default;
};

struct BundleConfig
{
  std::size_t max_boxes = kMaxBoxesPerFrame;
  std::size_t max_road_segments = kMaxRoadSegments;
  std::size_t sun_frequencies = kDefaultSunFrequencies;
  double dropout_probability = kDefaultDropoutProbability;
};

using FeatureMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

struct ConditionFeatureBundle
{
  FeatureMatrix box_features;             // max_boxes x kBoxFeatureWidth
  std::vector<std::uint8_t> box_mask;     // 1 where a real box sits
  FeatureMatrix road_features;            // max_road_segments x kRoadFeatureWidth
  std::vector<std::uint8_t> road_mask;
  std::vector<double> ego_feature;        // 12
  std::vector<double> sun_feature;        // 4K
  std::vector<double> weather_feature;    // 2
  SunAngles sun_angles;
  DropoutMask dropout_mask;
};

/// Draws the per-group dropout decisions for (seed, scene id, frame index).
DropoutMask draw_dropout(std::uint64_t seed, std::string_view scene_id, std::size_t frame_index,
                         double probability);

/**
 * Raw condition features for one frame of a scene.
 *
 * Boxes and road segments are ordered nearest-to-ego first, truncated to the
 * configured caps and zero-padded; masks flag the real rows. When a dropout
 * seed is given, each group is independently dropped (zeroed and masked)
 * with the configured probability.
 */
ConditionFeatureBundle assemble_bundle(const Scene & scene, std::size_t frame_index,
                                       const BundleConfig & config = {},
                                       std::optional<std::uint64_t> dropout_seed = std::nullopt);

}  // namespace coeval

#endif  // COEVAL__CONDITIONS_HPP_
