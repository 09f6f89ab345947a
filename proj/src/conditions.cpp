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

#include "coeval/conditions.hpp"

#include "coeval/error.hpp"
#include "coeval/streams.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>
#include <string>

namespace coeval
{
namespace
{

constexpr double kDegToRad = std::numbers::pi / 180.0;
constexpr double kRadToDeg = 180.0 / std::numbers::pi;

struct SolarTerms
{
  double declination;     // radians
  double equation_of_time;  // minutes
  double utc_minutes;     // minutes since UTC midnight
};

SolarTerms solar_terms(std::int64_t timestamp_utc)
{
  if (timestamp_utc < kSolarEraBegin || timestamp_utc >= kSolarEraEnd) {
    throw Error(ErrorKind::kInvalidInput, "timestamp outside the supported 1950-2100 era");
  }
  using namespace std::chrono;
  const sys_seconds instant{seconds{timestamp_utc}};
  const auto day = floor<days>(instant);
  const double utc_minutes = static_cast<double>((instant - day).count()) / 60.0;

  // Julian centuries since J2000.0.
  const double julian_day = static_cast<double>(timestamp_utc) / 86400.0 + 2440587.5;
  const double t = (julian_day - 2451545.0) / 36525.0;

  const double mean_longitude =
    std::fmod(280.46646 + t * (36000.76983 + t * 0.0003032), 360.0) * kDegToRad;
  const double mean_anomaly = (357.52911 + t * (35999.05029 - 0.0001537 * t)) * kDegToRad;
  const double eccentricity = 0.016708634 - t * (0.000042037 + 0.0000001267 * t);
  const double center = (std::sin(mean_anomaly) * (1.914602 - t * (0.004817 + 0.000014 * t)) +
                         std::sin(2.0 * mean_anomaly) * (0.019993 - 0.000101 * t) +
                         std::sin(3.0 * mean_anomaly) * 0.000289) *
                        kDegToRad;
  const double omega = (125.04 - 1934.136 * t) * kDegToRad;
  const double apparent_longitude =
    mean_longitude + center - (0.00569 + 0.00478 * std::sin(omega)) * kDegToRad;
  const double mean_obliquity =
    23.0 + (26.0 + (21.448 - t * (46.815 + t * (0.00059 - t * 0.001813))) / 60.0) / 60.0;
  const double obliquity = (mean_obliquity + 0.00256 * std::cos(omega)) * kDegToRad;

  SolarTerms terms{};
  terms.declination = std::asin(std::sin(obliquity) * std::sin(apparent_longitude));

  const double y = std::pow(std::tan(obliquity / 2.0), 2);
  const double l2 = 2.0 * mean_longitude;
  const double e = eccentricity;
  terms.equation_of_time =
    4.0 * kRadToDeg *
    (y * std::sin(l2) - 2.0 * e * std::sin(mean_anomaly) +
     4.0 * e * y * std::sin(mean_anomaly) * std::cos(l2) - 0.5 * y * y * std::sin(2.0 * l2) -
     1.25 * e * e * std::sin(2.0 * mean_anomaly));
  terms.utc_minutes = utc_minutes;
  return terms;
}

void append(std::vector<double> & out, const std::vector<double> & values)
{
  out.insert(out.end(), values.begin(), values.end());
}

void one_hot(std::vector<double> & out, std::size_t index, std::size_t count)
{
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(i == index ? 1.0 : 0.0);
  }
}

// Stable order of indices by ascending key; ties keep input order.
std::vector<std::size_t> nearest_first(const std::vector<double> & distance)
{
  std::vector<std::size_t> order(distance.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return distance[a] < distance[b];
  });
  return order;
}

}  // namespace

double solar_declination(std::int64_t timestamp_utc)
{
  return solar_terms(timestamp_utc).declination * kRadToDeg;
}

SunAngles solar_angles(std::int64_t timestamp_utc, double latitude, double longitude)
{
  if (!(latitude >= -90.0 && latitude <= 90.0)) {
    throw Error(ErrorKind::kInvalidInput, "latitude outside [-90, 90]");
  }
  if (!(longitude >= -180.0 && longitude <= 180.0)) {
    throw Error(ErrorKind::kInvalidInput, "longitude outside [-180, 180]");
  }
  const auto terms = solar_terms(timestamp_utc);
  const double true_solar_minutes = terms.utc_minutes + terms.equation_of_time + 4.0 * longitude;
  const double hour_angle = (true_solar_minutes / 4.0 - 180.0) * kDegToRad;

  const double lat = latitude * kDegToRad;
  const double decl = terms.declination;
  const double sin_elevation =
    std::sin(lat) * std::sin(decl) + std::cos(lat) * std::cos(decl) * std::cos(hour_angle);
  const double elevation = std::asin(std::clamp(sin_elevation, -1.0, 1.0));

  // Clockwise from north; the hour angle is positive in the afternoon.
  const double azimuth = std::atan2(
    std::sin(hour_angle),
    std::cos(hour_angle) * std::sin(lat) - std::tan(decl) * std::cos(lat));
  double azimuth_deg = std::fmod(azimuth * kRadToDeg + 180.0, 360.0);
  if (azimuth_deg < 0.0) {
    azimuth_deg += 360.0;
  }
  if (azimuth_deg >= 360.0) {
    azimuth_deg = 0.0;
  }
  return SunAngles{azimuth_deg, elevation * kRadToDeg};
}

std::vector<double> sinusoidal_encode(double angle, std::size_t num_frequencies)
{
  if (num_frequencies == 0) {
    throw Error(ErrorKind::kInvalidParameter, "sinusoidal encoding needs at least one frequency");
  }
  std::vector<double> out;
  out.reserve(2 * num_frequencies);
  double frequency = 1.0;
  for (std::size_t k = 0; k < num_frequencies; ++k) {
    out.push_back(std::sin(frequency * angle));
    out.push_back(std::cos(frequency * angle));
    frequency *= 2.0;
  }
  return out;
}

std::vector<double> featurize_box(const BoundingBox & box, const EgoPose & pose)
{
  const Vec3 center = world_to_ego(box.center, pose);
  const double yaw = wrap_angle(box.yaw - ego_heading(pose));
  std::vector<double> out{center.x(), center.y(), center.z(),  box.size.x(),
                          box.size.y(), box.size.z(), std::sin(yaw), std::cos(yaw)};
  one_hot(out, static_cast<std::size_t>(box.agent_type), kNumAgentTypes);
  return out;
}

std::vector<double> featurize_road_segment(const RoadSegment & segment, const EgoPose & pose)
{
  if (!all_finite(segment.start) || !all_finite(segment.end) || segment.start == segment.end) {
    throw Error(ErrorKind::kInvalidInput, "degenerate road segment");
  }
  const Vec3 start = world_to_ego(segment.start, pose);
  const Vec3 end = world_to_ego(segment.end, pose);
  std::vector<double> out{start.x(), start.y(), start.z(), end.x(), end.y(), end.z()};
  one_hot(out, static_cast<std::size_t>(segment.segment_type), kNumSegmentTypes);
  return out;
}

std::vector<double> featurize_ego_pose(const EgoPose & pose)
{
  require_valid_pose(pose);
  std::vector<double> out;
  out.reserve(kEgoFeatureWidth);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) {
      out.push_back(pose.rotation(r, c));
    }
  }
  for (int i = 0; i < 3; ++i) {
    out.push_back(pose.translation[i]);
  }
  return out;
}

std::vector<double> featurize_weather(Weather weather)
{
  std::vector<double> out;
  one_hot(out, static_cast<std::size_t>(weather), kNumWeatherValues);
  return out;
}

bool DropoutMask::present(ConditionGroup group) const
{
  switch (group) {
    case ConditionGroup::kBoxes:
      return boxes;
    case ConditionGroup::kRoad:
      return road;
    case ConditionGroup::kEgoPose:
      return ego_pose;
    case ConditionGroup::kSun:
      return sun;
    case ConditionGroup::kWeather:
      return weather;
  }
  return true;
}

DropoutMask draw_dropout(std::uint64_t seed, std::string_view scene_id, std::size_t frame_index,
                         double probability)
{
  if (!(probability >= 0.0 && probability <= 1.0)) {
    throw Error(ErrorKind::kInvalidParameter, "dropout probability must lie in [0, 1]");
  }
  Rng rng(derive_seed(derive_seed(seed, scene_id), static_cast<std::uint64_t>(frame_index)));
  std::bernoulli_distribution drop(probability);
  DropoutMask mask;
  mask.boxes = !drop(rng);
  mask.road = !drop(rng);
  mask.ego_pose = !drop(rng);
  mask.sun = !drop(rng);
  mask.weather = !drop(rng);
  return mask;
}

ConditionFeatureBundle assemble_bundle(const Scene & scene, std::size_t frame_index,
                                       const BundleConfig & config,
                                       std::optional<std::uint64_t> dropout_seed)
{
  if (frame_index >= scene.frames.size()) {
    throw Error(ErrorKind::kRange, "frame index " + std::to_string(frame_index) +
                                     " outside scene with " +
                                     std::to_string(scene.frames.size()) + " frames");
  }
  if (config.sun_frequencies == 0) {
    throw Error(ErrorKind::kInvalidParameter, "sun encoding needs at least one frequency");
  }
  const auto & frame = scene.frames[frame_index];
  const auto & pose = frame.ego_pose;
  require_valid_pose(pose);

  ConditionFeatureBundle bundle;
  if (dropout_seed) {
    bundle.dropout_mask =
      draw_dropout(*dropout_seed, scene.id, frame_index, config.dropout_probability);
  }
  const auto & present = bundle.dropout_mask;

  bundle.box_features = FeatureMatrix::Zero(static_cast<Eigen::Index>(config.max_boxes),
                                            static_cast<Eigen::Index>(kBoxFeatureWidth));
  bundle.box_mask.assign(config.max_boxes, 0);
  if (present.boxes) {
    std::vector<double> distance;
    distance.reserve(frame.boxes.size());
    for (const auto & box : frame.boxes) {
      distance.push_back(world_to_ego(box.center, pose).norm());
    }
    const auto order = nearest_first(distance);
    const auto kept = std::min(order.size(), config.max_boxes);
    for (std::size_t row = 0; row < kept; ++row) {
      const auto f = featurize_box(frame.boxes[order[row]], pose);
      for (std::size_t c = 0; c < f.size(); ++c) {
        bundle.box_features(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(c)) = f[c];
      }
      bundle.box_mask[row] = 1;
    }
  }

  bundle.road_features = FeatureMatrix::Zero(static_cast<Eigen::Index>(config.max_road_segments),
                                             static_cast<Eigen::Index>(kRoadFeatureWidth));
  bundle.road_mask.assign(config.max_road_segments, 0);
  if (present.road) {
    std::vector<double> distance;
    distance.reserve(scene.road.size());
    for (const auto & seg : scene.road) {
      distance.push_back(world_to_ego(0.5 * (seg.start + seg.end), pose).norm());
    }
    const auto order = nearest_first(distance);
    const auto kept = std::min(order.size(), config.max_road_segments);
    for (std::size_t row = 0; row < kept; ++row) {
      const auto f = featurize_road_segment(scene.road[order[row]], pose);
      for (std::size_t c = 0; c < f.size(); ++c) {
        bundle.road_features(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(c)) = f[c];
      }
      bundle.road_mask[row] = 1;
    }
  }

  bundle.ego_feature.assign(kEgoFeatureWidth, 0.0);
  if (present.ego_pose) {
    bundle.ego_feature = featurize_ego_pose(pose);
  }

  const auto & cond = scene.conditions;
  bundle.sun_angles =
    solar_angles(cond.timestamp_utc, cond.geolocation.latitude, cond.geolocation.longitude);
  bundle.sun_feature.assign(4 * config.sun_frequencies, 0.0);
  if (present.sun) {
    bundle.sun_feature.clear();
    append(bundle.sun_feature,
           sinusoidal_encode(bundle.sun_angles.azimuth * kDegToRad, config.sun_frequencies));
    append(bundle.sun_feature,
           sinusoidal_encode(bundle.sun_angles.elevation * kDegToRad, config.sun_frequencies));
  }

  bundle.weather_feature.assign(kNumWeatherValues, 0.0);
  if (present.weather) {
    bundle.weather_feature = featurize_weather(cond.weather);
  }
  return bundle;
}

}  // namespace coeval
