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

#include "rsd/analysis/export.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "rsd/error.hpp"

namespace rsd::analysis {
namespace {

const char* mode_name(BinningMode mode) {
  return mode == BinningMode::kFixed ? "fixed" : "matched";
}

Json optional_number(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    out.push_back(cell);
  }
  return out;
}

template <typename T>
T parse_int(const std::string& text, const char* what) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(ErrorKind::kSchema,
                std::string("cannot parse ") + what + " '" + text + "'");
  }
  return value;
}

}  // namespace

std::string format_number(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

std::string events_csv(std::span<const RiskEvent> events) {
  std::string out =
      "ego_id,frame,t_s,x_m,y_m,ego_velocity_mps,metric_value,natural_value\n";
  for (const auto& e : events) {
    out += std::to_string(e.ego_id) + ',' + std::to_string(e.frame) + ',' +
           format_number(e.t) + ',' + format_number(e.position.x()) + ',' +
           format_number(e.position.y()) + ',' +
           format_number(e.ego_velocity) + ',' +
           format_number(e.metric_value) + ',' +
           format_number(e.natural_value) + '\n';
  }
  return out;
}

std::string binned_events_csv(const CriticalityBinning& binning) {
  std::string out = "ego_id,frame,bin_index\n";
  for (std::size_t b = 0; b < kBinCount; ++b) {
    for (const auto& e : binning.bins[b].members) {
      out += std::to_string(e.ego_id) + ',' + std::to_string(e.frame) + ',' +
             std::to_string(b + 1) + '\n';
    }
  }
  return out;
}

Json binning_json(const CriticalityBinning& binning, Metric metric) {
  Json j;
  j["metric"] = to_string(metric);
  j["mode"] = mode_name(binning.mode);
  j["units"] = is_rsd(metric) ? "risk" : "s";
  Json bins = Json::array();
  for (std::size_t b = 0; b < kBinCount; ++b) {
    const auto& bin = binning.bins[b];
    Json e;
    e["index"] = b + 1;
    e["label"] = bin.label;
    e["boundary_low"] = optional_number(bin.boundary_low);
    e["boundary_high"] = optional_number(bin.boundary_high);
    e["count"] = bin.members.size();
    bins.push_back(std::move(e));
  }
  j["bins"] = std::move(bins);
  j["binned_count"] = binning.binned_count();
  j["unbinned_count"] = binning.unbinned_count;
  j["shortfall"] = binning.shortfall;
  return j;
}

std::string map_csv(const CriticalityMap& map) {
  std::string out =
      "east_cell,north_cell,bin_index,count_b1,count_b2,count_b3,count_b4\n";
  for (const auto& [idx, cell] : map.cells) {
    out += std::to_string(idx.east) + ',' + std::to_string(idx.north) + ',' +
           std::to_string(cell.min_bin + 1);
    for (const std::size_t c : cell.counts) {
      out += ',' + std::to_string(c);
    }
    out += '\n';
  }
  return out;
}

Json map_json(const CriticalityMap& map) {
  Json j;
  j["origin_m"] = {map.origin.x(), map.origin.y()};
  j["cell_size_m"] = map.cell_size;
  Json cells = Json::array();
  for (const auto& [idx, cell] : map.cells) {
    Json c;
    c["east_cell"] = idx.east;
    c["north_cell"] = idx.north;
    c["bin_index"] = cell.min_bin + 1;
    c["counts"] = cell.counts;
    cells.push_back(std::move(c));
  }
  j["cells"] = std::move(cells);
  return j;
}

CriticalityMap map_from_json(const Json& json) {
  try {
    CriticalityMap map;
    const auto& origin = json.at("origin_m");
    map.origin = core::Vec2(origin.at(0).get<double>(),
                            origin.at(1).get<double>());
    map.cell_size = json.at("cell_size_m").get<double>();
    for (const auto& c : json.at("cells")) {
      MapCell cell;
      const auto bin = c.at("bin_index").get<std::size_t>();
      if (bin < 1 || bin > kBinCount) {
        throw Error(ErrorKind::kSchema, "map bin_index out of range");
      }
      cell.min_bin = bin - 1;
      cell.counts = c.at("counts").get<BinCounts>();
      map.cells[{c.at("east_cell").get<std::int64_t>(),
                 c.at("north_cell").get<std::int64_t>()}] = cell;
    }
    return map;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kSchema, std::string("malformed map: ") + e.what());
  }
}

std::string histograms_csv(const std::vector<ingest::HistogramStats>& hists) {
  std::string out =
      "criticality_bin,velocity_bin_low,velocity_bin_high,pmf,cdf\n";
  for (std::size_t b = 0; b < hists.size(); ++b) {
    const auto& h = hists[b];
    for (std::size_t i = 0; i < h.pmf.size(); ++i) {
      out += std::to_string(b + 1) + ',' + format_number(h.bin_edges[i]) + ',' +
             format_number(h.bin_edges[i + 1]) + ',' + format_number(h.pmf[i]) +
             ',' + format_number(h.cdf[i]) + '\n';
    }
  }
  return out;
}

std::string statistics_csv(const std::vector<ingest::HistogramStats>& hists) {
  std::string out = "variable,bin_low,bin_high,pmf,cdf\n";
  for (const auto& h : hists) {
    for (std::size_t i = 0; i < h.pmf.size(); ++i) {
      out += ingest::to_string(h.variable) + ',' +
             format_number(h.bin_edges[i]) + ',' +
             format_number(h.bin_edges[i + 1]) + ',' +
             format_number(h.pmf[i]) + ',' + format_number(h.cdf[i]) + '\n';
    }
  }
  return out;
}

Json statistics_json(const std::vector<ingest::HistogramStats>& hists) {
  Json arr = Json::array();
  for (const auto& h : hists) {
    Json j;
    j["variable"] = ingest::to_string(h.variable);
    j["bin_width"] = h.bin_width;
    j["sample_count"] = h.sample_count;
    j["mean"] = h.mean;
    j["stddev"] = h.stddev;
    j["bin_edges"] = h.bin_edges;
    j["pmf"] = h.pmf;
    j["cdf"] = h.cdf;
    arr.push_back(std::move(j));
  }
  return arr;
}

Json counts_json(const BinCounts& counts) {
  Json j;
  j["reference_counts"] = counts;
  return j;
}

BinCounts counts_from_json(const Json& json) {
  const Json& arr = json.is_object() && json.contains("reference_counts")
                        ? json.at("reference_counts")
                        : json;
  if (!arr.is_array() || arr.size() != kBinCount) {
    throw Error(ErrorKind::kSchema,
                "reference counts must be an array of four non-negative "
                "integers");
  }
  BinCounts counts{};
  for (std::size_t i = 0; i < kBinCount; ++i) {
    if (!arr[i].is_number_unsigned()) {
      throw Error(ErrorKind::kSchema,
                  "reference count " + std::to_string(i + 1) +
                      " is not a non-negative integer");
    }
    counts[i] = arr[i].get<std::size_t>();
  }
  return counts;
}

std::array<std::vector<EventKey>, kBinCount> read_binned_events_csv(
    std::istream& in) {
  std::array<std::vector<EventKey>, kBinCount> bins;
  std::string line;
  if (!std::getline(in, line) || line != "ego_id,frame,bin_index") {
    throw Error(ErrorKind::kSchema, "unexpected binned events header");
  }
  while (std::getline(in, line)) {
    if (line.empty()) {
      continue;
    }
    const auto cells = split(line);
    if (cells.size() != 3) {
      throw Error(ErrorKind::kSchema, "malformed binned events row: " + line);
    }
    const auto bin = parse_int<std::size_t>(cells[2], "bin index");
    if (bin < 1 || bin > kBinCount) {
      throw Error(ErrorKind::kSchema, "bin index out of range: " + line);
    }
    bins[bin - 1].emplace_back(parse_int<VehicleId>(cells[0], "ego id"),
                               parse_int<Frame>(cells[1], "frame"));
  }
  for (auto& b : bins) {
    std::sort(b.begin(), b.end());
  }
  return bins;
}

}  // namespace rsd::analysis
