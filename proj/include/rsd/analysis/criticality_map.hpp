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

#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "rsd/analysis/binning.hpp"
#include "rsd/ingest/statistics.hpp"

namespace rsd::analysis {

struct CellIndex {
  std::int64_t east = 0;
  std::int64_t north = 0;
  auto operator<=>(const CellIndex&) const = default;
};

struct MapCell {
  std::size_t min_bin = 0;  ///< 0 is the most critical bin
  BinCounts counts{};
};

/// Sparse grid; cell (i, j) covers [origin + i * size, origin + (i+1) * size)
/// in each axis. Only cells with at least one binned event are stored.
struct CriticalityMap {
  core::Vec2 origin = core::Vec2::Zero();
  double cell_size = 2.0;
  std::map<CellIndex, MapCell> cells;
};

CellIndex cell_of(const core::Vec2& position, const core::Vec2& origin,
                  double cell_size);

/// Throws Error(kParameter) unless cell_size > 0.
CriticalityMap build_map(const CriticalityBinning& binning, double cell_size,
                         const core::Vec2& origin = core::Vec2::Zero());

/// One ego-velocity histogram per criticality bin, in bin order.
std::vector<ingest::HistogramStats> velocity_histograms(
    const CriticalityBinning& binning, double bin_width = 1.0);

}  // namespace rsd::analysis
