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

#include <filesystem>
#include <vector>

#include "rsd/cli/run_config.hpp"
#include "rsd/error.hpp"

namespace rsd::cli {

/// Ingests `input`, writes statistics.csv, statistics.json, config.json and
/// manifest.json into `out`.
void run_stats(const RunConfig& config, const std::filesystem::path& input,
               const std::filesystem::path& out);

/// Full metric pipeline. TH uses the configured fixed bins and additionally
/// writes counts.json; the other metrics need `config.reference_counts` and
/// otherwise fail with Error(kConfig).
void run_analyze(const RunConfig& config, const std::filesystem::path& input,
                 analysis::Metric metric, const std::filesystem::path& out);

/// Compares analyze outputs pairwise. Throws Error(kIncompatible) when map
/// grids differ or the map extents are disjoint.
analysis::Json run_compare(const std::vector<std::filesystem::path>& runs);

/// 0 for success, 2 for usage, config, schema and parameter errors, 1 for
/// all other failures.
int exit_code_for(ErrorKind kind);

}  // namespace rsd::cli
