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

#include "coeval/cli/commands.hpp"

#include "coeval/cli/io.hpp"
#include "coeval/cli/pipeline.hpp"
#include "coeval/conditions.hpp"
#include "coeval/streams.hpp"
#include "coeval/synth.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

namespace coeval::cli
{
namespace
{

namespace fs = std::filesystem;

/// Writes to the file when a path is given, else to `fallback`.
void emit(const std::string & path, const std::string & contents, std::ostream & fallback)
{
  if (path.empty() || path == "-") {
    fallback << contents;
  } else {
    write_text_file(path, contents);
  }
}

PValueRule rule_from(bool smoothed) { return smoothed ? PValueRule::kSmoothed : PValueRule::kStrict; }
CovarianceEstimator estimator_from(bool biased)
{
  return biased ? CovarianceEstimator::kBiased : CovarianceEstimator::kUnbiased;
}
AdeMode mode_from(const std::string & name)
{
  return name == "final" ? AdeMode::kFinal : AdeMode::kPrefixMean;
}

std::string pretty(const json & document) { return document.dump(2) + "\n"; }

void write_histograms(const std::string & dir, std::span<const PermutationTestResult> results,
                      std::size_t bins)
{
  for (const auto & r : results) {
    std::ostringstream csv;
    write_histogram_csv(csv, export_histogram(r, bins));
    write_text_file(fs::path(dir) / (r.scene_id + ".csv"), csv.str());
  }
}

std::vector<std::string> ids_of(std::span<const SetRecord> records)
{
  std::vector<std::string> ids;
  for (const auto & r : records) {
    ids.push_back(r.scene_id);
  }
  return ids;
}

std::vector<std::string> ids_of(std::span<const PredictionRecord> records)
{
  std::vector<std::string> ids;
  for (const auto & r : records) {
    ids.push_back(r.scene_id);
  }
  return ids;
}

// Runs `load` and folds a ValidationError into `sink` instead of throwing, so
// several inputs can be checked before reporting.
template <typename T>
std::optional<T> gather(std::vector<Diagnostic> & sink, const std::function<T()> & load)
{
  try {
    return load();
  } catch (const ValidationError & e) {
    sink.insert(sink.end(), e.diagnostics().begin(), e.diagnostics().end());
    return std::nullopt;
  }
}

void throw_if_any(std::vector<Diagnostic> diagnostics, ErrorKind kind = ErrorKind::kInvalidInput)
{
  if (!diagnostics.empty()) {
    throw ValidationError(kind, std::move(diagnostics));
  }
}

void relabel(std::vector<Diagnostic> & diagnostics, const std::string & file)
{
  for (auto & d : diagnostics) {
    d.file = file;
  }
}

// Subcommand settings -----------------------------------------------------------

struct ValidateArgs
{
  std::string scenes;
  std::vector<std::string> sets;
  std::vector<std::string> predictions;
};

struct AdeArgs
{
  std::string scenes;
  std::string predictions;
  std::vector<double> horizons = kDefaultHorizons;
  std::string mode = "prefix";
  bool per_scene = false;
  std::string output;
};

struct BptArgs
{
  std::string real;
  std::string gen;
  std::size_t permutations = kDefaultPermutations;
  double alpha = kDefaultAlpha;
  std::uint64_t seed = 0;
  bool keep_stats = false;
  bool smoothed = false;
  std::size_t jobs = 1;
  std::string results;
  std::string summary;
  std::string histogram_dir;
  std::size_t bins = 20;
};

struct FrechetArgs
{
  std::string real;
  std::string gen;
  bool biased = false;
  std::size_t samples = kDefaultFeatureSamples;
  std::uint64_t seed = 0;
  std::string output;
};

struct SunposArgs
{
  std::int64_t timestamp = 0;
  double latitude = 0.0;
  double longitude = 0.0;
};

struct FeaturizeArgs
{
  std::string scenes;
  std::optional<std::size_t> frame;
  std::optional<std::uint64_t> dropout_seed;
  double dropout_p = kDefaultDropoutProbability;
  std::size_t frequencies = kDefaultSunFrequencies;
  std::size_t max_boxes = kMaxBoxesPerFrame;
  std::size_t max_segments = kMaxRoadSegments;
  std::string output;
};

struct SimulateArgs
{
  std::string out_dir;
  std::size_t num_scenes = 100;
  std::size_t samples_real = kDefaultSetSize;
  std::size_t samples_gen = kDefaultSetSize;
  double shift = 0.0;
  double noise_sigma = 0.5;
  std::vector<std::string> gen_conditions;
  bool random_walk = false;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;
};

struct ReportArgs
{
  std::string scenes;
  std::string predictions;
  std::string real;
  std::string gen;
  std::string real_features;
  std::string gen_features;
  std::vector<double> horizons = kDefaultHorizons;
  std::string mode = "prefix";
  std::size_t permutations = kDefaultPermutations;
  double alpha = kDefaultAlpha;
  std::uint64_t seed = 0;
  bool smoothed = false;
  bool biased = false;
  std::size_t samples = kDefaultFeatureSamples;
  std::size_t jobs = 1;
  std::string histogram_dir;
  std::size_t bins = 20;
  std::string output;
};

// Handlers -----------------------------------------------------------------------

// Ids of every scene record seen, including rejected ones, so a reference to
// a rejected scene is reported once (at the scene) rather than twice.
std::vector<std::string> scene_ids_seen(const ScanResult<Scene> & scan)
{
  std::vector<std::string> ids;
  for (const auto & s : scan.records) {
    ids.push_back(s.id);
  }
  for (const auto & d : scan.diagnostics) {
    if (!d.record_id.empty()) {
      ids.push_back(d.record_id);
    }
  }
  return ids;
}

template <typename Record>
void append_scan(std::vector<Diagnostic> & sink, const ScanResult<Record> & scan,
                 const std::optional<std::vector<std::string>> & known, const std::string & path)
{
  sink.insert(sink.end(), scan.diagnostics.begin(), scan.diagnostics.end());
  if (known) {
    auto missing = check_references(*known, path, ids_of(scan.records), scan.lines);
    sink.insert(sink.end(), missing.begin(), missing.end());
  }
}

int cmd_validate(const ValidateArgs & a, std::ostream & out)
{
  std::vector<Diagnostic> diagnostics;
  ScanResult<Scene> scenes;
  std::optional<std::vector<std::string>> known;
  if (!a.scenes.empty()) {
    scenes = scan_scenes(a.scenes);
    diagnostics = scenes.diagnostics;
    known = scene_ids_seen(scenes);
  }
  std::size_t set_records = 0;
  for (const auto & path : a.sets) {
    const auto scan = scan_trajectory_sets(path);
    set_records += scan.records.size();
    append_scan(diagnostics, scan, known, path);
  }
  std::size_t prediction_records = 0;
  for (const auto & path : a.predictions) {
    const auto scan = scan_predictions(path);
    prediction_records += scan.records.size();
    append_scan(diagnostics, scan, known, path);
  }
  throw_if_any(std::move(diagnostics));
  out << pretty({{"valid", true},
                 {"scenes", scenes.records.size()},
                 {"set_records", set_records},
                 {"prediction_records", prediction_records}});
  return kExitSuccess;
}

AdeTable load_and_score(const std::string & scenes_path, const std::string & predictions_path,
                        const std::vector<double> & horizons, AdeMode mode)
{
  auto scenes = scan_scenes(scenes_path);
  auto predictions = scan_predictions(predictions_path);
  std::vector<Diagnostic> diagnostics = scenes.diagnostics;
  append_scan(diagnostics, predictions, scene_ids_seen(scenes), predictions_path);
  throw_if_any(std::move(diagnostics));
  try {
    return evaluate_ade(scenes.records, predictions.records, horizons, mode);
  } catch (const ValidationError & e) {
    auto d = e.diagnostics();
    relabel(d, predictions_path);
    throw ValidationError(e.kind(), std::move(d));
  }
}

int cmd_ade(const AdeArgs & a, std::ostream & out)
{
  const auto table = load_and_score(a.scenes, a.predictions, a.horizons, mode_from(a.mode));
  emit(a.output, pretty(to_json(table, a.per_scene)), out);
  return kExitSuccess;
}

std::vector<PermutationTestResult> load_and_test(const std::string & real_path,
                                                 const std::string & gen_path,
                                                 const BptRunOptions & options)
{
  std::vector<Diagnostic> diagnostics;
  auto real = gather<std::vector<SetRecord>>(diagnostics, [&] { return read_trajectory_sets(real_path); });
  auto gen = gather<std::vector<SetRecord>>(diagnostics, [&] { return read_trajectory_sets(gen_path); });
  throw_if_any(std::move(diagnostics));
  try {
    return evaluate_bpt(*real, *gen, options);
  } catch (const ValidationError & e) {
    auto d = e.diagnostics();
    for (auto & item : d) {
      item.file = item.file == "real" ? real_path : gen_path;
    }
    throw ValidationError(e.kind(), std::move(d));
  }
}

int cmd_bpt(const BptArgs & a, std::ostream & out)
{
  BptRunOptions options;
  options.permutations = a.permutations;
  options.alpha = a.alpha;
  options.seed = a.seed;
  options.rule = rule_from(a.smoothed);
  options.keep_statistics = a.keep_stats || !a.histogram_dir.empty();
  options.jobs = a.jobs;
  const auto results = load_and_test(a.real, a.gen, options);

  if (!a.results.empty()) {
    std::ostringstream lines;
    for (const auto & r : results) {
      write_jsonl(lines, to_json(r, a.keep_stats));
    }
    emit(a.results, lines.str(), out);
  }
  if (!a.histogram_dir.empty()) {
    write_histograms(a.histogram_dir, results, a.bins);
  }
  json summary = to_json(bpt_rate(results, a.alpha));
  summary["n_permutations"] = a.permutations;
  summary["seed"] = a.seed;
  summary["p_value_rule"] = a.smoothed ? "smoothed" : "strict";
  emit(a.summary, pretty(summary), out);
  return kExitSuccess;
}

int cmd_frechet(const FrechetArgs & a, std::ostream & out)
{
  std::vector<Diagnostic> diagnostics;
  auto real = gather<Eigen::MatrixXd>(diagnostics, [&] { return read_features(a.real); });
  auto gen = gather<Eigen::MatrixXd>(diagnostics, [&] { return read_features(a.gen); });
  throw_if_any(std::move(diagnostics), ErrorKind::kShapeMismatch);
  const auto outcome = evaluate_frechet(*real, *gen, estimator_from(a.biased), a.samples, a.seed);
  emit(a.output,
       pretty({{"frechet_distance", outcome.distance},
               {"estimator", a.biased ? "biased" : "unbiased"},
               {"real", to_json(outcome.real)},
               {"gen", to_json(outcome.gen)}}),
       out);
  return kExitSuccess;
}

int cmd_sunpos(const SunposArgs & a, std::ostream & out)
{
  const auto angles = solar_angles(a.timestamp, a.latitude, a.longitude);
  out << pretty({{"timestamp_utc", a.timestamp},
                 {"latitude", a.latitude},
                 {"longitude", a.longitude},
                 {"azimuth", angles.azimuth},
                 {"elevation", angles.elevation}});
  return kExitSuccess;
}

int cmd_featurize(const FeaturizeArgs & a, std::ostream & out)
{
  if (a.frequencies == 0) {
    throw Error(ErrorKind::kInvalidParameter, "--frequencies must be at least 1");
  }
  const auto scenes = read_scenes(a.scenes);
  BundleConfig config;
  config.max_boxes = a.max_boxes;
  config.max_road_segments = a.max_segments;
  config.sun_frequencies = a.frequencies;
  config.dropout_probability = a.dropout_p;

  std::ostringstream lines;
  for (const auto & scene : scenes) {
    std::size_t first = 0;
    std::size_t last = scene.frames.size();
    if (a.frame) {
      first = *a.frame;
      last = first + 1;
    }
    for (std::size_t f = first; f < last; ++f) {
      auto record = to_json(assemble_bundle(scene, f, config, a.dropout_seed));
      record["schema"] = kSchemaVersion;
      record["scene_id"] = scene.id;
      record["frame_index"] = f;
      write_jsonl(lines, record);
    }
  }
  emit(a.output, lines.str(), out);
  return kExitSuccess;
}

int cmd_simulate(const SimulateArgs & a, std::ostream & out)
{
  ExperimentConfig config;
  config.oracle.noise_sigma = a.noise_sigma;
  config.oracle.noise_mode = a.random_walk ? NoiseMode::kRandomWalk : NoiseMode::kIid;
  config.jobs = a.jobs;
  ActiveConditions extra;
  for (const auto & c : a.gen_conditions) {
    extra.rain = extra.rain || c == "rain";
    extra.night = extra.night || c == "night";
    extra.layout_removed = extra.layout_removed || c == "layout_removed";
  }
  const bool any_extra = extra.rain || extra.night || extra.layout_removed;

  std::vector<std::optional<SyntheticDraw>> draws(a.num_scenes);
  parallel_for(a.num_scenes, a.jobs, [&](std::size_t i) {
    auto draw = draw_synthetic(a.seed, i, a.samples_real, a.samples_gen, a.shift, config);
    if (any_extra) {
      auto active = scene_conditions(draw.scene);
      active.rain = active.rain || extra.rain;
      active.night = active.night || extra.night;
      active.layout_removed = extra.layout_removed;
      auto gen = oracle_planner(draw.scene, config.oracle, a.samples_gen,
                                derive_seed(a.seed, draw.scene.id + "/gen"), active, "gen");
      draw.gen = a.shift != 0.0 ? shift_laterally(gen, a.shift) : std::move(gen);
    }
    draws[i] = std::move(draw);
  });

  std::ostringstream scenes;
  std::ostringstream real;
  std::ostringstream gen;
  std::ostringstream predictions;
  for (const auto & d : draws) {
    write_jsonl(scenes, to_json(d->scene));
    write_jsonl(real, to_json(SetRecord{d->scene.id, d->real}));
    write_jsonl(gen, to_json(SetRecord{d->scene.id, d->gen}));
    const auto real_members = d->real.members();
    const auto gen_members = d->gen.members();
    write_jsonl(predictions, to_json(PredictionRecord{
                               d->scene.id, "real", {real_members.begin(), real_members.end()}}));
    write_jsonl(predictions, to_json(PredictionRecord{
                               d->scene.id, "gen", {gen_members.begin(), gen_members.end()}}));
  }
  const fs::path dir(a.out_dir);
  write_text_file(dir / "scenes.jsonl", scenes.str());
  write_text_file(dir / "real.jsonl", real.str());
  write_text_file(dir / "gen.jsonl", gen.str());
  write_text_file(dir / "predictions.jsonl", predictions.str());
  out << pretty({{"scenes", a.num_scenes}, {"out_dir", a.out_dir}, {"seed", a.seed}});
  return kExitSuccess;
}

int cmd_report(const ReportArgs & a, std::ostream & out, std::ostream & err)
{
  json warnings = json::array();
  json inputs = json::object();
  json digests = json::object();
  auto note_input = [&](const char * role, const std::string & path) {
    if (!path.empty()) {
      inputs[role] = fs::path(path).filename().string();
      digests[role] = "sha256:" + sha256_file(path);
    }
  };
  note_input("scenes", a.scenes);
  note_input("predictions", a.predictions);
  note_input("real_sets", a.real);
  note_input("gen_sets", a.gen);
  note_input("real_features", a.real_features);
  note_input("gen_features", a.gen_features);

  json report = {{"schema", kSchemaVersion}};
  report["config_echo"] = {{"horizons", a.horizons},
                           {"ade_mode", a.mode},
                           {"permutations", a.permutations},
                           {"alpha", a.alpha},
                           {"seed", a.seed},
                           {"p_value_rule", a.smoothed ? "smoothed" : "strict"},
                           {"covariance_estimator", a.biased ? "biased" : "unbiased"},
                           {"feature_samples", a.samples},
                           {"histogram_bins", a.bins},
                           {"default_set_size", kDefaultSetSize},
                           {"inputs", inputs}};

  if (!a.scenes.empty() && !a.predictions.empty()) {
    report["ade_table"] = to_json(load_and_score(a.scenes, a.predictions, a.horizons, mode_from(a.mode)), false);
  } else {
    report["ade_table"] = nullptr;
    warnings.push_back("ade_table omitted: needs --scenes and --predictions");
  }

  if (!a.real.empty() && !a.gen.empty()) {
    BptRunOptions options;
    options.permutations = a.permutations;
    options.alpha = a.alpha;
    options.seed = a.seed;
    options.rule = rule_from(a.smoothed);
    options.keep_statistics = !a.histogram_dir.empty();
    options.jobs = a.jobs;
    const auto results = load_and_test(a.real, a.gen, options);
    json summary = to_json(bpt_rate(results, a.alpha));
    report["bpt_summary"] = std::move(summary);
    if (!a.histogram_dir.empty()) {
      write_histograms(a.histogram_dir, results, a.bins);
    }
  } else {
    report["bpt_summary"] = nullptr;
    warnings.push_back("bpt_summary omitted: needs --real and --gen");
  }

  if (!a.real_features.empty() && !a.gen_features.empty()) {
    std::vector<Diagnostic> diagnostics;
    auto real = gather<Eigen::MatrixXd>(diagnostics, [&] { return read_features(a.real_features); });
    auto gen = gather<Eigen::MatrixXd>(diagnostics, [&] { return read_features(a.gen_features); });
    throw_if_any(std::move(diagnostics), ErrorKind::kShapeMismatch);
    const auto outcome = evaluate_frechet(*real, *gen, estimator_from(a.biased), a.samples, a.seed);
    report["frechet_value"] = outcome.distance;
  } else {
    report["frechet_value"] = nullptr;
    warnings.push_back("frechet_value omitted: needs --real-features and --gen-features");
  }

  report["provenance"] = {{"master_seed", a.seed},
                          {"tool_version", std::string(kToolVersion)},
                          {"input_digests", digests}};
  report["warnings"] = warnings;
  for (const auto & w : warnings) {
    err << "warning: partial report, " << w.get<std::string>() << '\n';
  }
  emit(a.output, pretty(report), out);
  return kExitSuccess;
}

int exit_code_for(ErrorKind kind)
{
  switch (kind) {
    case ErrorKind::kNumericalFailure:
      return kExitNumerical;
    case ErrorKind::kInvalidParameter:
      return kExitUsage;
    default:
      return kExitValidation;
  }
}

}  // namespace

int run(const std::vector<std::string> & args, std::ostream & out, std::ostream & err)
{
  CLI::App app{"Co-evaluation toolkit for planner trajectories: ADE, behavior permutation test, "
               "Frechet distance, condition features and synthetic scenarios."};
  app.name("coeval");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));

  ValidateArgs validate;
  auto * v = app.add_subcommand("validate", "Check scene, set and prediction files");
  v->add_option("--scenes", validate.scenes, "Scene file (line-delimited JSON)");
  v->add_option("--sets", validate.sets, "Trajectory set file(s)");
  v->add_option("--predictions", validate.predictions, "Prediction file(s)");

  AdeArgs ade_args;
  auto * a = app.add_subcommand("ade", "Average displacement error per input variant");
  a->add_option("--scenes", ade_args.scenes, "Scene file")->required();
  a->add_option("--predictions", ade_args.predictions, "Prediction file")->required();
  a->add_option("--horizons", ade_args.horizons, "Horizons in seconds")->delimiter(',');
  a->add_option("--mode", ade_args.mode, "prefix (mean over waypoints) or final")
    ->check(CLI::IsMember({"prefix", "final"}));
  a->add_flag("--per-scene", ade_args.per_scene, "Include per-scene rows");
  a->add_option("--output", ade_args.output, "Output file (default stdout)");

  BptArgs bpt_args;
  auto * b = app.add_subcommand("bpt", "Behavior permutation test per scene");
  b->add_option("--real", bpt_args.real, "Real trajectory sets")->required();
  b->add_option("--gen", bpt_args.gen, "Generated trajectory sets")->required();
  b->add_option("--permutations", bpt_args.permutations, "Permutations per scene")->check(CLI::PositiveNumber);
  b->add_option("--alpha", bpt_args.alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
  b->add_option("--seed", bpt_args.seed, "Master seed");
  b->add_flag("--keep-stats", bpt_args.keep_stats, "Include permuted statistics in results");
  b->add_flag("--smoothed", bpt_args.smoothed, "Use (1 + #{T' >= t0}) / (n + 1)");
  b->add_option("--jobs", bpt_args.jobs, "Worker threads")->check(CLI::PositiveNumber);
  b->add_option("--results", bpt_args.results, "Per-scene results file ('-' for stdout)");
  b->add_option("--summary", bpt_args.summary, "Summary file (default stdout)");
  b->add_option("--histogram-dir", bpt_args.histogram_dir, "Write one histogram CSV per scene");
  b->add_option("--bins", bpt_args.bins, "Histogram bins")->check(CLI::PositiveNumber);

  FrechetArgs frechet_args;
  auto * f = app.add_subcommand("frechet", "Frechet distance between two feature files");
  f->add_option("--real", frechet_args.real, "Real features (CSV or JSONL)")->required();
  f->add_option("--gen", frechet_args.gen, "Generated features (CSV or JSONL)")->required();
  f->add_flag("--biased", frechet_args.biased, "Covariance with divisor n");
  f->add_option("--samples", frechet_args.samples, "Max samples per side (0 = all)");
  f->add_option("--seed", frechet_args.seed, "Seed for subsampling");
  f->add_option("--output", frechet_args.output, "Output file (default stdout)");

  SunposArgs sun_args;
  auto * s = app.add_subcommand("sunpos", "Solar azimuth and elevation");
  s->add_option("--timestamp", sun_args.timestamp, "UTC seconds since the Unix epoch")->required();
  s->add_option("--lat", sun_args.latitude, "Latitude in degrees")->required();
  s->add_option("--lon", sun_args.longitude, "Longitude in degrees")->required();

  FeaturizeArgs feat_args;
  auto * fz = app.add_subcommand("featurize", "Export raw condition features per frame");
  fz->add_option("--scenes", feat_args.scenes, "Scene file")->required();
  fz->add_option("--frame", feat_args.frame, "Only this frame index");
  fz->add_option("--dropout-seed", feat_args.dropout_seed, "Enable condition dropout with this seed");
  fz->add_option("--dropout-p", feat_args.dropout_p, "Per-group dropout probability")
    ->check(CLI::Range(0.0, 1.0));
  fz->add_option("--frequencies", feat_args.frequencies, "Sinusoidal frequencies for sun angles");
  fz->add_option("--max-boxes", feat_args.max_boxes, "Box slots per frame");
  fz->add_option("--max-segments", feat_args.max_segments, "Road segment slots");
  fz->add_option("--output", feat_args.output, "Output file (default stdout)");

  SimulateArgs sim_args;
  auto * sm = app.add_subcommand("simulate", "Synthetic scenes and oracle planner outputs");
  sm->add_option("--out-dir", sim_args.out_dir, "Output directory")->required();
  sm->add_option("--num-scenes", sim_args.num_scenes, "Scene count")->check(CLI::PositiveNumber);
  sm->add_option("--samples-real", sim_args.samples_real, "Trajectories per real set")->check(CLI::PositiveNumber);
  sm->add_option("--samples-gen", sim_args.samples_gen, "Trajectories per generated set")->check(CLI::PositiveNumber);
  sm->add_option("--shift", sim_args.shift, "Lateral shift of generated sets (m)")->check(CLI::NonNegativeNumber);
  sm->add_option("--noise-sigma", sim_args.noise_sigma, "Oracle noise sigma (m)")->check(CLI::NonNegativeNumber);
  sm->add_option("--gen-condition", sim_args.gen_conditions, "Extra condition for generated sets")
    ->check(CLI::IsMember({"rain", "night", "layout_removed"}));
  sm->add_flag("--random-walk", sim_args.random_walk, "Random-walk noise instead of i.i.d.");
  sm->add_option("--seed", sim_args.seed, "Master seed");
  sm->add_option("--jobs", sim_args.jobs, "Worker threads")->check(CLI::PositiveNumber);

  ReportArgs rep;
  auto * r = app.add_subcommand("report", "Joint ADE / BPT / Frechet evaluation report");
  r->add_option("--scenes", rep.scenes, "Scene file");
  r->add_option("--predictions", rep.predictions, "Prediction file");
  r->add_option("--real", rep.real, "Real trajectory sets");
  r->add_option("--gen", rep.gen, "Generated trajectory sets");
  r->add_option("--real-features", rep.real_features, "Real feature file");
  r->add_option("--gen-features", rep.gen_features, "Generated feature file");
  r->add_option("--horizons", rep.horizons, "ADE horizons")->delimiter(',');
  r->add_option("--mode", rep.mode, "ADE mode")->check(CLI::IsMember({"prefix", "final"}));
  r->add_option("--permutations", rep.permutations, "Permutations per scene")->check(CLI::PositiveNumber);
  r->add_option("--alpha", rep.alpha, "Significance level")->check(CLI::Range(0.0, 1.0));
  r->add_option("--seed", rep.seed, "Master seed");
  r->add_flag("--smoothed", rep.smoothed, "Smoothed p-values");
  r->add_flag("--biased", rep.biased, "Biased covariance estimator");
  r->add_option("--samples", rep.samples, "Max feature samples per side");
  r->add_option("--jobs", rep.jobs, "Worker threads")->check(CLI::PositiveNumber);
  r->add_option("--histogram-dir", rep.histogram_dir, "Write histogram CSVs here");
  r->add_option("--bins", rep.bins, "Histogram bins")->check(CLI::PositiveNumber);
  r->add_option("--output", rep.output, "Report file (default stdout)");

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("coeval");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto & arg : argv_storage) {
    argv.push_back(arg.c_str());
  }

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp &) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::CallForAllHelp &) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitSuccess;
  } catch (const CLI::CallForVersion &) {
    out << kToolVersion << '\n';
    return kExitSuccess;
  } catch (const CLI::ParseError & e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (v->parsed()) {
      return cmd_validate(validate, out);
    }
    if (a->parsed()) {
      return cmd_ade(ade_args, out);
    }
    if (b->parsed()) {
      return cmd_bpt(bpt_args, out);
    }
    if (f->parsed()) {
      return cmd_frechet(frechet_args, out);
    }
    if (s->parsed()) {
      return cmd_sunpos(sun_args, out);
    }
    if (fz->parsed()) {
      return cmd_featurize(feat_args, out);
    }
    if (sm->parsed()) {
      return cmd_simulate(sim_args, out);
    }
    if (r->parsed()) {
      return cmd_report(rep, out, err);
    }
  } catch (const ValidationError & e) {
    err << "error: " << to_string(e.kind()) << ", " << e.diagnostics().size() << " offending record(s)\n";
    for (const auto & d : e.diagnostics()) {
      err << "  " << format(d) << '\n';
    }
    return exit_code_for(e.kind());
  } catch (const Error & e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::exception & e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
  err << app.help();
  return kExitUsage;
}

}  // namespace coeval::cli
