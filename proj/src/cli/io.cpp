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

#include "coeval/cli/io.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace coeval::cli
{
namespace
{

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

json vec3(const Vec3 & v) { return json::array({v.x(), v.y(), v.z()}); }

// Collects typed reads from a JSON record; wrong types become issues prefixed
// with the field path. JSON null stands for a non-finite number.
class FieldReader
{
public:
  explicit FieldReader(std::vector<std::string> & issues) : issues_(issues) {}

  const json * field(const json & object, const std::string & key, const std::string & path)
  {
    if (!object.is_object()) {
      fail(path, "expected an object");
      return nullptr;
    }
    const auto it = object.find(key);
    if (it == object.end()) {
      fail(join(path, key), "missing field");
      return nullptr;
    }
    return &*it;
  }

  double number(const json * value, const std::string & path)
  {
    if (value == nullptr) {
      return kNaN;
    }
    if (value->is_null()) {
      return kNaN;
    }
    if (!value->is_number()) {
      fail(path, "expected a number");
      return kNaN;
    }
    return value->get<double>();
  }

  double number(const json & object, const std::string & key, const std::string & path)
  {
    return number(field(object, key, path), join(path, key));
  }

  std::string text(const json & object, const std::string & key, const std::string & path)
  {
    const auto * value = field(object, key, path);
    if (value == nullptr) {
      return {};
    }
    if (!value->is_string()) {
      fail(join(path, key), "expected a string");
      return {};
    }
    return value->get<std::string>();
  }

  const json * array(const json & object, const std::string & key, const std::string & path)
  {
    const auto * value = field(object, key, path);
    if (value != nullptr && !value->is_array()) {
      fail(join(path, key), "expected an array");
      return nullptr;
    }
    return value;
  }

  Vec3 point3(const json & object, const std::string & key, const std::string & path)
  {
    const auto * value = field(object, key, path);
    const auto where = join(path, key);
    if (value == nullptr) {
      return Vec3::Constant(kNaN);
    }
    if (!value->is_array() || value->size() != 3) {
      fail(where, "expected an array of 3 numbers");
      return Vec3::Constant(kNaN);
    }
    return Vec3(number(&(*value)[0], where), number(&(*value)[1], where),
                number(&(*value)[2], where));
  }

  std::optional<Trajectory> trajectory(const json & value, const std::string & path)
  {
    const auto * points = array(value, "waypoints", path);
    const double dt = number(value, "dt", path);
    if (points == nullptr) {
      return std::nullopt;
    }
    std::vector<Point2> waypoints;
    waypoints.reserve(points->size());
    for (std::size_t k = 0; k < points->size(); ++k) {
      const auto & p = (*points)[k];
      const auto where = join(path, "waypoints[" + std::to_string(k) + "]");
      if (!p.is_array() || p.size() != 2) {
        fail(where, "expected an [x, y] pair");
        return std::nullopt;
      }
      waypoints.push_back({number(&p[0], where), number(&p[1], where)});
    }
    try {
      return Trajectory(std::move(waypoints), dt);
    } catch (const Error & e) {
      fail(path, e.what());
      return std::nullopt;
    }
  }

  void fail(const std::string & path, const std::string & message)
  {
    issues_.push_back(path.empty() ? message : path + ": " + message);
  }

  static std::string join(const std::string & path, const std::string & key)
  {
    return path.empty() ? key : path + "." + key;
  }

private:
  std::vector<std::string> & issues_;
};

void check_schema(FieldReader & reader, const json & record)
{
  const auto * schema = reader.field(record, "schema", "");
  if (schema != nullptr && !(schema->is_number_integer() && schema->get<int>() == kSchemaVersion)) {
    reader.fail("schema", "unsupported schema version (expected 1)");
  }
}

std::string record_id(const json & record, const char * key)
{
  if (record.is_object()) {
    const auto it = record.find(key);
    if (it != record.end() && it->is_string()) {
      return it->get<std::string>();
    }
  }
  return {};
}

// Calls parse(record, issues) for each nonblank line, gathering diagnostics.
template <typename T, typename Parse>
ScanResult<T> scan_jsonl(const std::filesystem::path & path, const char * id_key, Parse parse)
{
  ScanResult<T> result;
  auto & diagnostics = result.diagnostics;
  std::ifstream in(path);
  if (!in) {
    diagnostics.push_back({path.string(), 0, {}, "cannot open file"});
    return result;
  }
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) {
      continue;
    }
    json record;
    try {
      record = json::parse(line);
    } catch (const json::parse_error & e) {
      diagnostics.push_back({path.string(), line_number, {}, std::string("malformed JSON: ") + e.what()});
      continue;
    }
    std::vector<std::string> issues;
    auto parsed = parse(record, issues);
    if (!issues.empty() || !parsed) {
      std::string message;
      for (std::size_t i = 0; i < issues.size(); ++i) {
        message += (i ? "; " : "") + issues[i];
      }
      diagnostics.push_back({path.string(), line_number, record_id(record, id_key), message});
      continue;
    }
    result.records.push_back(std::move(*parsed));
    result.lines.push_back(line_number);
  }
  return result;
}

template <typename T>
std::vector<T> records_or_throw(ScanResult<T> scan)
{
  if (!scan.diagnostics.empty()) {
    throw ValidationError(ErrorKind::kInvalidInput, std::move(scan.diagnostics));
  }
  return std::move(scan.records);
}

std::string join_issues(const std::vector<Diagnostic> & diagnostics)
{
  std::string text = std::to_string(diagnostics.size()) + " invalid record(s)";
  for (const auto & d : diagnostics) {
    text += "\n  " + format(d);
  }
  return text;
}

}  // namespace

std::string format(const Diagnostic & d)
{
  std::string out = d.file;
  if (d.line > 0) {
    out += ":" + std::to_string(d.line);
  }
  if (!d.record_id.empty()) {
    out += " [" + d.record_id + "]";
  }
  return out + ": " + d.message;
}

ValidationError::ValidationError(ErrorKind kind, std::vector<Diagnostic> diagnostics)
: Error(kind, join_issues(diagnostics)), diagnostics_(std::move(diagnostics))
{
}

json to_json(const Trajectory & trajectory)
{
  json points = json::array();
  for (const auto & p : trajectory.waypoints()) {
    points.push_back(json::array({p.x, p.y}));
  }
  return {{"waypoints", std::move(points)}, {"dt", trajectory.dt()}};
}

json to_json(const Scene & scene)
{
  json frames = json::array();
  for (const auto & frame : scene.frames) {
    json boxes = json::array();
    for (const auto & box : frame.boxes) {
      boxes.push_back({{"center", vec3(box.center)},
                       {"size", vec3(box.size)},
                       {"yaw", box.yaw},
                       {"agent_type", to_string(box.agent_type)}});
    }
    json rotation = json::array();
    for (int r = 0; r < 3; ++r) {
      rotation.push_back(json::array(
        {frame.ego_pose.rotation(r, 0), frame.ego_pose.rotation(r, 1), frame.ego_pose.rotation(r, 2)}));
    }
    frames.push_back(
      {{"boxes", std::move(boxes)},
       {"ego_pose", {{"rotation", std::move(rotation)}, {"translation", vec3(frame.ego_pose.translation)}}}});
  }
  json road = json::array();
  for (const auto & seg : scene.road) {
    road.push_back({{"start", vec3(seg.start)},
                    {"end", vec3(seg.end)},
                    {"segment_type", to_string(seg.segment_type)}});
  }
  const auto & c = scene.conditions;
  return {{"schema", kSchemaVersion},
          {"id", scene.id},
          {"frames", std::move(frames)},
          {"road", std::move(road)},
          {"conditions",
           {{"weather", to_string(c.weather)},
            {"timestamp_utc", c.timestamp_utc},
            {"geolocation", {{"latitude", c.geolocation.latitude}, {"longitude", c.geolocation.longitude}}},
            {"utc_offset", c.utc_offset}}},
          {"ground_truth_future", to_json(scene.ground_truth_future)}};
}

json to_json(const SetRecord & record)
{
  json members = json::array();
  for (const auto & t : record.set.members()) {
    members.push_back(to_json(t));
  }
  return {{"schema", kSchemaVersion},
          {"scene_id", record.scene_id},
          {"source_label", record.set.source_label()},
          {"trajectories", std::move(members)}};
}

json to_json(const PredictionRecord & record)
{
  json members = json::array();
  for (const auto & t : record.trajectories) {
    members.push_back(to_json(t));
  }
  return {{"schema", kSchemaVersion},
          {"scene_id", record.scene_id},
          {"variant", record.variant},
          {"trajectories", std::move(members)}};
}

json to_json(const PermutationTestResult & result, bool keep_statistics)
{
  json out = {{"schema", kSchemaVersion},
              {"scene_id", result.scene_id},
              {"t0", result.t0},
              {"n_permutations", result.n_permutations},
              {"p_value", result.p_value},
              {"reject", result.reject},
              {"alpha", result.alpha},
              {"degenerate", result.degenerate}};
  if (keep_statistics && result.permuted_statistics) {
    out["permuted_statistics"] = *result.permuted_statistics;
  }
  return out;
}

json to_json(const BptSummary & summary)
{
  json per_scene = json::array();
  for (const auto & s : summary.per_scene) {
    per_scene.push_back({{"scene_id", s.scene_id}, {"p_value", s.p_value}});
  }
  return {{"scene_count", summary.scene_count},
          {"fail_to_reject_rate", summary.fail_to_reject_rate},
          {"alpha", summary.alpha},
          {"degenerate_count", summary.degenerate_count},
          {"per_scene", std::move(per_scene)}};
}

json to_json(const GaussianSummary & summary)
{
  json covariance = json::array();
  for (Eigen::Index r = 0; r < summary.covariance.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < summary.covariance.cols(); ++c) {
      row.push_back(summary.covariance(r, c));
    }
    covariance.push_back(std::move(row));
  }
  return {{"mean", std::vector<double>(summary.mean.data(), summary.mean.data() + summary.mean.size())},
          {"covariance", std::move(covariance)},
          {"sample_count", summary.sample_count}};
}

json to_json(const SunAngles & angles)
{
  return {{"azimuth", angles.azimuth}, {"elevation", angles.elevation}};
}

json to_json(const ConditionFeatureBundle & bundle)
{
  auto rows = [](const FeatureMatrix & m) {
    json out = json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      out.push_back(std::vector<double>(m.row(r).data(), m.row(r).data() + m.cols()));
    }
    return out;
  };
  const auto & d = bundle.dropout_mask;
  return {{"box_features", rows(bundle.box_features)},
          {"box_mask", bundle.box_mask},
          {"road_features", rows(bundle.road_features)},
          {"road_mask", bundle.road_mask},
          {"ego_feature", bundle.ego_feature},
          {"sun_feature", bundle.sun_feature},
          {"sun_angles", to_json(bundle.sun_angles)},
          {"weather_feature", bundle.weather_feature},
          {"dropout_mask",
           {{"boxes", d.boxes}, {"road", d.road}, {"ego_pose", d.ego_pose}, {"sun", d.sun}, {"weather", d.weather}}}};
}

std::optional<Scene> scene_from_json(const json & record, std::vector<std::string> & issues)
{
  FieldReader reader(issues);
  if (!record.is_object()) {
    reader.fail("", "record is not a JSON object");
    return std::nullopt;
  }
  const auto first_issue = issues.size();
  check_schema(reader, record);

  Scene scene;
  scene.id = reader.text(record, "id", "");

  if (const auto * frames = reader.array(record, "frames", "")) {
    for (std::size_t f = 0; f < frames->size(); ++f) {
      const auto & jf = (*frames)[f];
      const auto path = "frames[" + std::to_string(f) + "]";
      Frame frame;
      if (const auto * boxes = reader.array(jf, "boxes", path)) {
        for (std::size_t b = 0; b < boxes->size(); ++b) {
          const auto & jb = (*boxes)[b];
          const auto bpath = path + ".boxes[" + std::to_string(b) + "]";
          BoundingBox box;
          box.center = reader.point3(jb, "center", bpath);
          box.size = reader.point3(jb, "size", bpath);
          box.yaw = reader.number(jb, "yaw", bpath);
          const auto type = reader.text(jb, "agent_type", bpath);
          if (const auto parsed = parse_agent_type(type)) {
            box.agent_type = *parsed;
          } else if (!type.empty()) {
            reader.fail(bpath + ".agent_type", "unknown agent type '" + type + "'");
          }
          frame.boxes.push_back(box);
        }
      }
      if (const auto * pose = reader.field(jf, "ego_pose", path)) {
        const auto ppath = path + ".ego_pose";
        const auto * rotation = reader.array(*pose, "rotation", ppath);
        if (rotation != nullptr) {
          bool shaped = rotation->size() == 3;
          for (std::size_t r = 0; shaped && r < 3; ++r) {
            shaped = (*rotation)[r].is_array() && (*rotation)[r].size() == 3;
          }
          if (!shaped) {
            reader.fail(ppath + ".rotation", "expected a 3x3 nested array");
          } else {
            for (int r = 0; r < 3; ++r) {
              for (int c = 0; c < 3; ++c) {
                frame.ego_pose.rotation(r, c) =
                  reader.number(&(*rotation)[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)],
                                ppath + ".rotation");
              }
            }
          }
        }
        frame.ego_pose.translation = reader.point3(*pose, "translation", ppath);
      }
      scene.frames.push_back(std::move(frame));
    }
  }

  if (const auto * road = reader.array(record, "road", "")) {
    for (std::size_t s = 0; s < road->size(); ++s) {
      const auto & js = (*road)[s];
      const auto spath = "road[" + std::to_string(s) + "]";
      RoadSegment seg;
      seg.start = reader.point3(js, "start", spath);
      seg.end = reader.point3(js, "end", spath);
      const auto type = reader.text(js, "segment_type", spath);
      if (const auto parsed = parse_segment_type(type)) {
        seg.segment_type = *parsed;
      } else if (!type.empty()) {
        reader.fail(spath + ".segment_type", "unknown segment type '" + type + "'");
      }
      scene.road.push_back(seg);
    }
  }

  if (const auto * cond = reader.field(record, "conditions", "")) {
    const auto weather = reader.text(*cond, "weather", "conditions");
    if (const auto parsed = parse_weather(weather)) {
      scene.conditions.weather = *parsed;
    } else if (!weather.empty()) {
      reader.fail("conditions.weather", "unknown weather '" + weather + "'");
    }
    if (const auto * ts = reader.field(*cond, "timestamp_utc", "conditions")) {
      if (ts->is_number_integer()) {
        scene.conditions.timestamp_utc = ts->get<std::int64_t>();
      } else {
        reader.fail("conditions.timestamp_utc", "expected integer seconds since the Unix epoch");
      }
    }
    if (const auto * geo = reader.field(*cond, "geolocation", "conditions")) {
      scene.conditions.geolocation.latitude =
        reader.number(*geo, "latitude", "conditions.geolocation");
      scene.conditions.geolocation.longitude =
        reader.number(*geo, "longitude", "conditions.geolocation");
    }
    scene.conditions.utc_offset = reader.number(*cond, "utc_offset", "conditions");
  }

  if (const auto * gt = reader.field(record, "ground_truth_future", "")) {
    if (auto trajectory = reader.trajectory(*gt, "ground_truth_future")) {
      scene.ground_truth_future = std::move(*trajectory);
    }
  }

  for (auto & issue : validate_scene(scene)) {
    issues.push_back(std::move(issue));
  }
  if (issues.size() != first_issue) {
    return std::nullopt;
  }
  return scene;
}

ScanResult<Scene> scan_scenes(const std::filesystem::path & path)
{
  auto scan = scan_jsonl<Scene>(path, "id", [](const json & record, std::vector<std::string> & issues) {
    return scene_from_json(record, issues);
  });
  // Later records reusing an id are rejected; the first one stands.
  ScanResult<Scene> out;
  out.diagnostics = std::move(scan.diagnostics);
  std::set<std::string> seen;
  for (std::size_t i = 0; i < scan.records.size(); ++i) {
    if (!seen.insert(scan.records[i].id).second) {
      out.diagnostics.push_back({path.string(), scan.lines[i], scan.records[i].id, "duplicate scene id"});
      continue;
    }
    out.records.push_back(std::move(scan.records[i]));
    out.lines.push_back(scan.lines[i]);
  }
  std::stable_sort(out.diagnostics.begin(), out.diagnostics.end(),
                   [](const Diagnostic & a, const Diagnostic & b) { return a.line < b.line; });
  return out;
}

std::vector<Scene> read_scenes(const std::filesystem::path & path)
{
  return records_or_throw(scan_scenes(path));
}

namespace
{

std::vector<Trajectory> read_members(FieldReader & reader, const json & record)
{
  std::vector<Trajectory> members;
  const auto * list = reader.array(record, "trajectories", "");
  if (list == nullptr) {
    return members;
  }
  for (std::size_t i = 0; i < list->size(); ++i) {
    if (auto t = reader.trajectory((*list)[i], "trajectories[" + std::to_string(i) + "]")) {
      members.push_back(std::move(*t));
    }
  }
  return members;
}

}  // namespace

ScanResult<SetRecord> scan_trajectory_sets(const std::filesystem::path & path)
{
  return scan_jsonl<SetRecord>(
    path, "scene_id", [](const json & record, std::vector<std::string> & issues) -> std::optional<SetRecord> {
      FieldReader reader(issues);
      if (!record.is_object()) {
        reader.fail("", "record is not a JSON object");
        return std::nullopt;
      }
      const auto first_issue = issues.size();
      check_schema(reader, record);
      auto scene_id = reader.text(record, "scene_id", "");
      std::string label = "set";
      if (record.contains("source_label")) {
        label = reader.text(record, "source_label", "");
      }
      auto members = read_members(reader, record);
      if (issues.size() != first_issue) {
        return std::nullopt;
      }
      try {
        return SetRecord{std::move(scene_id), TrajectorySet(std::move(members), std::move(label))};
      } catch (const Error & e) {
        reader.fail("trajectories", e.what());
        return std::nullopt;
      }
    });
}

ScanResult<PredictionRecord> scan_predictions(const std::filesystem::path & path)
{
  return scan_jsonl<PredictionRecord>(
    path, "scene_id",
    [](const json & record, std::vector<std::string> & issues) -> std::optional<PredictionRecord> {
      FieldReader reader(issues);
      if (!record.is_object()) {
        reader.fail("", "record is not a JSON object");
        return std::nullopt;
      }
      const auto first_issue = issues.size();
      check_schema(reader, record);
      PredictionRecord out;
      out.scene_id = reader.text(record, "scene_id", "");
      out.variant = record.contains("variant") ? reader.text(record, "variant", "") : "default";
      if (record.contains("trajectory")) {
        if (auto t = reader.trajectory(record["trajectory"], "trajectory")) {
          out.trajectories.push_back(std::move(*t));
        }
      } else {
        out.trajectories = read_members(reader, record);
        if (out.trajectories.empty() && issues.size() == first_issue) {
          reader.fail("trajectories", "no trajectories");
        }
      }
      if (issues.size() != first_issue) {
        return std::nullopt;
      }
      return out;
    });
}

std::vector<SetRecord> read_trajectory_sets(const std::filesystem::path & path)
{
  return records_or_throw(scan_trajectory_sets(path));
}

std::vector<PredictionRecord> read_predictions(const std::filesystem::path & path)
{
  return records_or_throw(scan_predictions(path));
}

Eigen::MatrixXd read_features(const std::filesystem::path & path)
{
  std::ifstream in(path);
  if (!in) {
    throw ValidationError(ErrorKind::kInvalidInput,
                          {Diagnostic{path.string(), 0, {}, "cannot open file"}});
  }
  std::vector<std::vector<double>> rows;
  std::vector<std::size_t> row_lines;
  std::vector<Diagnostic> diagnostics;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
      continue;
    }
    std::vector<double> row;
    if (line[first] == '{') {
      try {
        const auto record = json::parse(line);
        const auto it = record.find("features");
        if (it == record.end() || !it->is_array()) {
          diagnostics.push_back({path.string(), line_number, record_id(record, "id"), "missing features array"});
          continue;
        }
        for (const auto & v : *it) {
          row.push_back(v.is_number() ? v.get<double>() : kNaN);
        }
      } catch (const json::exception & e) {
        diagnostics.push_back({path.string(), line_number, {}, std::string("malformed JSON: ") + e.what()});
        continue;
      }
    } else {
      std::stringstream cells(line);
      std::string cell;
      bool numeric = true;
      while (std::getline(cells, cell, ',')) {
        try {
          std::size_t used = 0;
          row.push_back(std::stod(cell, &used));
          if (cell.find_first_not_of(" \t\r", used) != std::string::npos) {
            numeric = false;
          }
        } catch (const std::exception &) {
          numeric = false;
        }
      }
      if (!numeric) {
        if (rows.empty() && diagnostics.empty()) {
          continue;  // header
        }
        diagnostics.push_back({path.string(), line_number, {}, "non-numeric CSV cell"});
        continue;
      }
    }
    bool finite = true;
    for (const double v : row) {
      finite = finite && std::isfinite(v);
    }
    if (!finite) {
      diagnostics.push_back({path.string(), line_number, {}, "non-finite feature value"});
      continue;
    }
    rows.push_back(std::move(row));
    row_lines.push_back(line_number);
  }
  if (!rows.empty()) {
    const auto width = rows.front().size();
    for (std::size_t r = 1; r < rows.size(); ++r) {
      if (rows[r].size() != width) {
        diagnostics.push_back({path.string(), row_lines[r], {},
                               "row has " + std::to_string(rows[r].size()) + " values, expected " +
                                 std::to_string(width)});
      }
    }
  }
  if (!diagnostics.empty()) {
    throw ValidationError(ErrorKind::kShapeMismatch, std::move(diagnostics));
  }
  if (rows.empty()) {
    throw ValidationError(ErrorKind::kInsufficientData,
                          {Diagnostic{path.string(), 0, {}, "no feature rows"}});
  }
  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(rows.front().size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = rows[r][c];
    }
  }
  return m;
}

void write_jsonl(std::ostream & os, const json & record) { os << record.dump() << '\n'; }

void write_text_file(const std::filesystem::path & path, const std::string & contents)
{
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorKind::kInvalidInput, "cannot write " + path.string());
  }
  out << contents;
}

std::string sha256_file(const std::filesystem::path & path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorKind::kInvalidInput, "cannot open " + path.string());
  }
  std::unique_ptr<EVP_MD_CTX, decltype(&EVP_MD_CTX_free)> ctx(EVP_MD_CTX_new(), EVP_MD_CTX_free);
  EVP_DigestInit_ex(ctx.get(), EVP_sha256(), nullptr);
  std::array<char, 1 << 16> buffer{};
  while (in) {
    in.read(buffer.data(), buffer.size());
    EVP_DigestUpdate(ctx.get(), buffer.data(), static_cast<std::size_t>(in.gcount()));
  }
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  EVP_DigestFinal_ex(ctx.get(), digest.data(), &length);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < length; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

}  // namespace coeval::cli
