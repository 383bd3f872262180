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

#pragma once

#include <array>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "rsd/analysis/criticality_map.hpp"

namespace rsd::analysis {

using Json = nlohmann::ordered_json;

/// Shortest decimal text that round-trips to the same double.
std::string format_number(double value);

std::string events_csv(std::span<const RiskEvent> events);

/// ego_id,frame,bin_index with bin_index in 1..4.
std::string binned_events_csv(const CriticalityBinning& binning);

Json binning_json(const CriticalityBinning& binning, Metric metric);

/// east_cell,north_cell,bin_index,count_b1..count_b4 with bin_index in 1..4.
std::string map_csv(const CriticalityMap& map);
Json map_json(const CriticalityMap& map);
/// Throws Error(kSchema) on a malformed document.
CriticalityMap map_from_json(const Json& json);

/// Per-criticality-bin velocity histograms.
std::string histograms_csv(const std::vector<ingest::HistogramStats>& hists);

/// variable,bin_low,bin_high,pmf,cdf
std::string statistics_csv(const std::vector<ingest::HistogramStats>& hists);
Json statistics_json(const std::vector<ingest::HistogramStats>& hists);

Json counts_json(const BinCounts& counts);
/// Accepts {"reference_counts": [n1, n2, n3, n4]} or a bare array. Throws
/// Error(kSchema) otherwise.
BinCounts counts_from_json(const Json& json);

using EventKey = std::pair<VehicleId, Frame>;
/// Sorted members per bin, as written by binned_events_csv. Throws
/// Error(kSchema) on a malformed file.
std::array<std::vector<EventKey>, kBinCount> read_binned_events_csv(
    std::istream& in);

}  // namespace rsd::analysis
