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

#include "coeval/cli/pipeline.hpp"

#include "coeval/streams.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <set>
#include <tuple>
#include <unordered_map>

namespace coeval::cli
{

std::string horizon_key(double horizon)
{
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.15g", horizon);
  return buffer;
}

std::vector<Diagnostic> check_references(std::span<const std::string> known_ids,
                                         const std::string & file,
                                         std::span<const std::string> scene_ids,
                                         std::span<const std::size_t> lines)
{
  const std::set<std::string> known(known_ids.begin(), known_ids.end());
  std::vector<Diagnostic> out;
  for (std::size_t i = 0; i < scene_ids.size(); ++i) {
    if (!known.contains(scene_ids[i])) {
      out.push_back({file, i < lines.size() ? lines[i] : 0, scene_ids[i], "unknown scene id"});
    }
  }
  return out;
}

AdeTable evaluate_ade(std::span<const Scene> scenes, std::span<const PredictionRecord> predictions,
                      std::span<const double> horizons, AdeMode mode)
{
  if (horizons.empty()) {
    throw Error(ErrorKind::kInvalidParameter, "at least one horizon is required");
  }
  std::unordered_map<std::string, const Scene *> by_id;
  for (const auto & s : scenes) {
    by_id.emplace(s.id, &s);
  }
  std::vector<Diagnostic> missing;
  for (const auto & p : predictions) {
    if (!by_id.contains(p.scene_id)) {
      missing.push_back({"predictions", 0, p.scene_id, "prediction references unknown scene id"});
    }
  }
  if (!missing.empty()) {
    throw ValidationError(ErrorKind::kReferentialIntegrity, std::move(missing));
  }

  AdeTable table;
  table.horizons.assign(horizons.begin(), horizons.end());
  table.mode = mode;
  for (const auto & p : predictions) {
    const auto & gt = by_id.at(p.scene_id)->ground_truth_future;
    AdeRow row{p.scene_id, p.variant, {}};
    for (const double h : horizons) {
      double sum = 0.0;
      for (const auto & t : p.trajectories) {
        sum += ade(t, gt, h, mode);
      }
      row.values.push_back(sum / static_cast<double>(p.trajectories.size()));
    }
    table.rows.push_back(std::move(row));
  }
  std::stable_sort(table.rows.begin(), table.rows.end(), [](const AdeRow & a, const AdeRow & b) {
    return std::tie(a.scene_id, a.variant) < std::tie(b.scene_id, b.variant);
  });
  for (const auto & row : table.rows) {
    auto & sums = table.means[row.variant];
    sums.resize(horizons.size(), 0.0);
    for (std::size_t h = 0; h < horizons.size(); ++h) {
      sums[h] += row.values[h];
    }
    ++table.counts[row.variant];
  }
  for (auto & [variant, sums] : table.means) {
    for (auto & v : sums) {
      v /= static_cast<double>(table.counts[variant]);
    }
  }
  return table;
}

json to_json(const AdeTable & table, bool per_scene)
{
  json means = json::object();
  for (const auto & [variant, values] : table.means) {
    json row = json::object();
    for (std::size_t h = 0; h < table.horizons.size(); ++h) {
      row[horizon_key(table.horizons[h])] = values[h];
    }
    means[variant] = std::move(row);
  }
  json out = {{"horizons", table.horizons},
              {"mode", table.mode == AdeMode::kPrefixMean ? "prefix" : "final"},
              {"means", std::move(means)},
              {"counts", table.counts}};
  if (per_scene) {
    json rows = json::array();
    for (const auto & r : table.rows) {
      rows.push_back({{"scene_id", r.scene_id}, {"variant", r.variant}, {"values", r.values}});
    }
    out["per_scene"] = std::move(rows);
  }
  return out;
}

std::vector<PermutationTestResult> evaluate_bpt(std::span<const SetRecord> real,
                                                std::span<const SetRecord> gen,
                                                const BptRunOptions & options)
{
  std::map<std::string, const SetRecord *> real_by_id;
  std::map<std::string, const SetRecord *> gen_by_id;
  std::vector<Diagnostic> problems;
  for (const auto & r : real) {
    if (!real_by_id.emplace(r.scene_id, &r).second) {
      problems.push_back({"real", 0, r.scene_id, "scene appears more than once"});
    }
  }
  for (const auto & g : gen) {
    if (!gen_by_id.emplace(g.scene_id, &g).second) {
      problems.push_back({"gen", 0, g.scene_id, "scene appears more than once"});
    }
  }
  for (const auto & [id, record] : real_by_id) {
    if (!gen_by_id.contains(id)) {
      problems.push_back({"real", 0, id, "scene has no generated counterpart"});
    }
  }
  for (const auto & [id, record] : gen_by_id) {
    if (!real_by_id.contains(id)) {
      problems.push_back({"gen", 0, id, "scene has no real counterpart"});
    }
  }
  if (!problems.empty()) {
    throw ValidationError(ErrorKind::kPairing, std::move(problems));
  }
  if (real_by_id.empty()) {
    throw Error(ErrorKind::kEmptySet, "no scenes to test");
  }

  std::vector<std::pair<const SetRecord *, const SetRecord *>> pairs;
  for (const auto & [id, record] : real_by_id) {
    pairs.emplace_back(record, gen_by_id.at(id));
  }
  std::vector<PermutationTestResult> results(pairs.size());
  parallel_for(pairs.size(), options.jobs, [&](std::size_t i) {
    const auto & [r, g] = pairs[i];
    PermutationTestOptions o;
    o.permutations = options.permutations;
    o.alpha = options.alpha;
    o.rule = options.rule;
    o.keep_statistics = options.keep_statistics;
    o.seed = scene_stream_seed(options.seed, r->scene_id);
    results[i] = permutation_test(r->set, g->set, o);
    results[i].scene_id = r->scene_id;
  });
  return results;
}

namespace
{

Eigen::MatrixXd subsample(const Eigen::MatrixXd & rows, std::size_t max_samples, std::uint64_t seed)
{
  const auto n = static_cast<std::size_t>(rows.rows());
  if (max_samples == 0 || n <= max_samples) {
    return rows;
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  Rng rng(seed);
  std::shuffle(order.begin(), order.end(), rng);
  order.resize(max_samples);
  std::sort(order.begin(), order.end());
  Eigen::MatrixXd out(static_cast<Eigen::Index>(max_samples), rows.cols());
  for (std::size_t i = 0; i < max_samples; ++i) {
    out.row(static_cast<Eigen::Index>(i)) = rows.row(static_cast<Eigen::Index>(order[i]));
  }
  return out;
}

}  // namespace

FrechetOutcome evaluate_frechet(const Eigen::MatrixXd & real, const Eigen::MatrixXd & gen,
                                CovarianceEstimator estimator, std::size_t max_samples,
                                std::uint64_t seed)
{
  if (real.cols() != gen.cols()) {
    throw Error(ErrorKind::kShapeMismatch,
                "feature dimension differs: real " + std::to_string(real.cols()) + ", generated " +
                  std::to_string(gen.cols()));
  }
  FrechetOutcome out;
  out.real = fit_gaussian(subsample(real, max_samples, derive_seed(seed, "real")), estimator);
  out.gen = fit_gaussian(subsample(gen, max_samples, derive_seed(seed, "gen")), estimator);
  out.distance = frechet_distance(out.real, out.gen);
  return out;
}

}  // namespace coeval::cli
