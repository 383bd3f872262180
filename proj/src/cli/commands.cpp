// Copyright 2026 The rsd Authors
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

#include "rsd/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <sstream>

#include "rsd/cli/output_writer.hpp"
#include "rsd/predict/neighbors.hpp"
#include "rsd/version.hpp"

namespace rsd::cli {
namespace {

using analysis::Json;
namespace fs = std::filesystem;

struct LoadedInput {
  ingest::TrajectoryDataset dataset;
  std::string sha256;
  std::string name;
};

LoadedInput load_input(const RunConfig& config, const fs::path& input) {
  const std::string bytes = read_file(input);
  std::istringstream stream(bytes);
  const auto raw = ingest::parse_trajectories(stream, config.parse);
  return {ingest::smooth_dataset(raw, config.smoothing), sha256_hex(bytes),
          input.filename().string()};
}

Json manifest(const LoadedInput& in, const char* command) {
  Json j;
  j["tool"] = "rsd";
  j["version"] = kVersion;
  j["command"] = command;
  j["input_file"] = in.name;
  j["input_sha256"] = in.sha256;
  return j;
}

Json warnings_json(const ingest::TrajectoryDataset& d) {
  Json j;
  j["vehicles"] = d.vehicles().size();
  j["samples"] = d.sample_count();
  j["dropped_short_vehicles"] = d.warnings().dropped_short;
  j["dropped_gapped_vehicles"] = d.warnings().dropped_gaps;
  return j;
}

double ratio(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : static_cast<double>(num) / static_cast<double>(den);
}

struct RunData {
  fs::path dir;
  Json binning;
  std::array<std::vector<analysis::EventKey>, analysis::kBinCount> members;
  analysis::CriticalityMap map;
};

Json parse_json_file(const fs::path& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kSchema,
                path.string() + " is not valid JSON: " + e.what());
  }
}

RunData load_run(const fs::path& dir) {
  RunData r;
  r.dir = dir;
  r.binning = parse_json_file(dir / "binning.json");
  std::istringstream events(read_file(dir / "binned_events.csv"));
  r.members = analysis::read_binned_events_csv(events);
  r.map = analysis::map_from_json(parse_json_file(dir / "map.json"));
  return r;
}

struct Extent {
  std::int64_t east_min, east_max, north_min, north_max;
};

std::optional<Extent> extent_of(const analysis::CriticalityMap& map) {
  if (map.cells.empty()) {
    return std::nullopt;
  }
  Extent e{INT64_MAX, INT64_MIN, INT64_MAX, INT64_MIN};
  for (const auto& [idx, cell] : map.cells) {
    e.east_min = std::min(e.east_min, idx.east);
    e.east_max = std::max(e.east_max, idx.east);
    e.north_min = std::min(e.north_min, idx.north);
    e.north_max = std::max(e.north_max, idx.north);
  }
  return e;
}

void check_compatible(const RunData& a, const RunData& b) {
  if (a.map.cell_size != b.map.cell_size || a.map.origin != b.map.origin) {
    throw Error(ErrorKind::kIncompatible,
                "runs " + a.dir.string() + " and " + b.dir.string() +
                    " use different map grids");
  }
  const auto ea = extent_of(a.map);
  const auto eb = extent_of(b.map);
  if (ea && eb &&
      (ea->east_max < eb->east_min || eb->east_max < ea->east_min ||
       ea->north_max < eb->north_min || eb->north_max < ea->north_min)) {
    throw Error(ErrorKind::kIncompatible,
                "runs " + a.dir.string() + " and " + b.dir.string() +
                    " have disjoint map extents");
  }
}

Json compare_pair(const RunData& a, const RunData& b) {
  Json pair;
  pair["a"] = a.dir.filename().string();
  pair["b"] = b.dir.filename().string();
  Json overlap = Json::array();
  for (std::size_t i = 0; i < analysis::kBinCount; ++i) {
    std::vector<analysis::EventKey> common;
    std::set_intersection(a.members[i].begin(), a.members[i].end(),
                          b.members[i].begin(), b.members[i].end(),
                          std::back_inserter(common));
    const std::size_t uni =
        a.members[i].size() + b.members[i].size() - common.size();
    Json o;
    o["index"] = i + 1;
    o["label"] = analysis::kBinLabels[i];
    o["count_a"] = a.members[i].size();
    o["count_b"] = b.members[i].size();
    o["intersection"] = common.size();
    o["jaccard"] = uni == 0 ? 1.0 : ratio(common.size(), uni);
    overlap.push_back(std::move(o));
  }
  pair["bin_overlap"] = std::move(overlap);

  Json cells = Json::array();
  std::size_t agree = 0;
  auto ia = a.map.cells.begin();
  auto ib = b.map.cells.begin();
  auto emit = [&](const analysis::CellIndex& idx,
                  std::optional<std::size_t> bin_a,
                  std::optional<std::size_t> bin_b) {
    if (bin_a && bin_b && *bin_a == *bin_b) {
      ++agree;
      return;
    }
    Json c;
    c["east_cell"] = idx.east;
    c["north_cell"] = idx.north;
    c["bin_a"] = bin_a ? Json(*bin_a + 1) : Json(nullptr);
    c["bin_b"] = bin_b ? Json(*bin_b + 1) : Json(nullptr);
    cells.push_back(std::move(c));
  };
  while (ia != a.map.cells.end() || ib != b.map.cells.end()) {
    if (ib == b.map.cells.end() ||
        (ia != a.map.cells.end() && ia->first < ib->first)) {
      emit(ia->first, ia->second.min_bin, std::nullopt);
      ++ia;
    } else if (ia == a.map.cells.end() || ib->first < ia->first) {
      emit(ib->first, std::nullopt, ib->second.min_bin);
      ++ib;
    } else {
      emit(ia->first, ia->second.min_bin, ib->second.min_bin);
      ++ia;
      ++ib;
    }
  }
  pair["agreeing_cell_count"] = agree;
  pair["disagreeing_cell_count"] = cells.size();
  pair["disagreeing_cells"] = std::move(cells);
  return pair;
}

}  // namespace

void run_stats(const RunConfig& config, const fs::path& input,
               const fs::path& out) {
  const LoadedInput in = load_input(config, input);
  const auto pairs = predict::collect_front_pairs(
      in.dataset, config.analysis.sensor_range_m,
      config.analysis.lane_threshold_m);
  const auto stats =
      ingest::kinematics_statistics(in.dataset, pairs, config.statistics_bins);

  const OutputWriter w(out);
  w.write_json("config.json", config_to_json(config));
  w.write_json("manifest.json", manifest(in, "stats"));
  w.write_text("statistics.csv", analysis::statistics_csv(stats));
  Json j;
  j["dataset"] = warnings_json(in.dataset);
  j["front_pairs"] = pairs.size();
  j["histograms"] = analysis::statistics_json(stats);
  w.write_json("statistics.json", j);
}

void run_analyze(const RunConfig& config, const fs::path& input,
                 analysis::Metric metric, const fs::path& out) {
  using analysis::Metric;
  if (metric != Metric::kTimeHeadway && !config.reference_counts) {
    throw Error(ErrorKind::kConfig,
                "metric " + analysis::to_string(metric) +
                    " uses count-matched bins and needs reference counts: run "
                    "the TH metric first and pass its counts.json with "
                    "--counts, or set reference_counts in the config");
  }
  const LoadedInput in = load_input(config, input);
  const auto eval = analysis::evaluate_dataset(in.dataset, metric, config.analysis);

  const analysis::CriticalityBinning binning =
      metric == Metric::kTimeHeadway
          ? analysis::bin_fixed(eval.events, config.th_bins)
          : analysis::bin_matched(eval.events, *config.reference_counts,
                                  analysis::ShortfallPolicy::kFillAvailable);
  const auto map = analysis::build_map(binning, config.cell_size_m);
  const auto hists =
      analysis::velocity_histograms(binning, config.statistics_bins.velocity);

  RunConfig resolved = config;
  resolved.metric = metric;
  const OutputWriter w(out);
  w.write_json("config.json", config_to_json(resolved));
  w.write_json("manifest.json", manifest(in, "analyze"));
  w.write_text("events.csv", analysis::events_csv(eval.events));
  Json bj = analysis::binning_json(binning, metric);
  if (metric != Metric::kTimeHeadway) {
    bj["reference_counts"] = *config.reference_counts;
  }
  w.write_json("binning.json", bj);
  w.write_text("binned_events.csv", analysis::binned_events_csv(binning));
  w.write_text("map.csv", analysis::map_csv(map));
  w.write_json("map.json", analysis::map_json(map));
  w.write_text("histograms.csv", analysis::histograms_csv(hists));
  if (metric == Metric::kTimeHeadway) {
    w.write_json("counts.json",
                 analysis::counts_json(analysis::member_counts(binning)));
  }

  const std::size_t binned = binning.binned_count();
  Json s;
  s["metric"] = analysis::to_string(metric);
  s["dataset"] = warnings_json(in.dataset);
  s["evaluated_steps"] = eval.evaluated_steps;
  s["defined_events"] = eval.events.size();
  s["binned_events"] = binned;
  s["unbinned_events"] = binning.unbinned_count;
  s["shortfall"] = binning.shortfall;
  s["binned_fraction_of_steps"] = ratio(binned, eval.evaluated_steps);
  s["binned_fraction_of_defined"] = ratio(binned, eval.events.size());
  s["map_cells"] = map.cells.size();
  w.write_json("summary.json", s);
}

Json run_compare(const std::vector<fs::path>& runs) {
  if (runs.size() < 2) {
    throw Error(ErrorKind::kConfig, "compare needs at least two run directories");
  }
  std::vector<RunData> data;
  data.reserve(runs.size());
  for (const auto& dir : runs) {
    data.push_back(load_run(dir));
  }
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t j = i + 1; j < data.size(); ++j) {
      check_compatible(data[i], data[j]);
    }
  }

  Json report;
  Json run_list = Json::array();
  for (const auto& r : data) {
    Json entry;
    entry["run"] = r.dir.filename().string();
    entry["metric"] = r.binning.value("metric", "");
    entry["mode"] = r.binning.value("mode", "");
    entry["bins"] = r.binning.value("bins", Json::array());
    run_list.push_back(std::move(entry));
  }
  report["runs"] = std::move(run_list);
  Json pairs = Json::array();
  for (std::size_t i = 0; i < data.size(); ++i) {
    for (std::size_t j = i + 1; j < data.size(); ++j) {
      pairs.push_back(compare_pair(data[i], data[j]));
    }
  }
  report["pairs"] = std::move(pairs);
  return report;
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kConfig:
    case ErrorKind::kSchema:
    case ErrorKind::kParameter:
      return 2;
    default:
      return 1;
  }
}

}  // namespace rsd::cli
