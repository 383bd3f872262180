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

#include <optional>
#include <string>

#include "rsd/analysis/binning.hpp"
#include "rsd/analysis/export.hpp"
#include "rsd/ingest/statistics.hpp"

namespace rsd::cli {

/// Every tunable of a run. Key names in the JSON form carry their units.
struct RunConfig {
  ingest::ParseOptions parse;
  ingest::SmoothingWidths smoothing;
  ingest::StatisticsBinWidths statistics_bins;
  analysis::AnalysisConfig analysis;

  /// "time_constant_s": eta = 1 / value; "rate_per_s": eta = value;
  /// "none": no escape.
  std::string escape_reading = "time_constant_s";
  double escape_parameter = 3.0;

  analysis::BinIntervals th_bins = analysis::default_th_bins();
  std::optional<analysis::BinCounts> reference_counts;
  double cell_size_m = 2.0;
  std::optional<analysis::Metric> metric;
};

/// Overlays `json` on the defaults. Throws Error(kConfig) on an unknown key,
/// a wrongly typed value or an invalid setting.
RunConfig config_from_json(const analysis::Json& json);

/// Reads and parses a config file. Throws Error(kIo) or Error(kConfig).
RunConfig load_config_file(const std::string& path);

/// All keys with their resolved values.
analysis::Json config_to_json(const RunConfig& config);

/// Applies the escape reading to `config.analysis` and validates every
/// module's parameters. Throws Error(kConfig).
void finalize_config(RunConfig& config);

}  // namespace rsd::cli
