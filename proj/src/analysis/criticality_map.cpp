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

#include "rsd/analysis/criticality_map.hpp"

#include <algorithm>
#include <cmath>

#include "rsd/error.hpp"

namespace rsd::analysis {

CellIndex cell_of(const core::Vec2& position, const core::Vec2& origin,
                  double cell_size) {
  return {static_cast<std::int64_t>(
              std::floor((position.x() - origin.x()) / cell_size)),
          static_cast<std::int64_t>(
              std::floor((position.y() - origin.y()) / cell_size))};
}

CriticalityMap build_map(const CriticalityBinning& binning, double cell_size,
                         const core::Vec2& origin) {
  if (!(cell_size > 0.0)) {
    throw Error(ErrorKind::kParameter, "map cell size must be positive");
  }
  CriticalityMap map;
  map.origin = origin;
  map.cell_size = cell_size;
  for (std::size_t b = 0; b < kBinCount; ++b) {
    for (const auto& e : binning.bins[b].members) {
      const CellIndex idx = cell_of(e.position, origin, cell_size);
      auto [it, inserted] = map.cells.try_emplace(idx);
      if (inserted) {
        it->second.min_bin = b;
      }
      it->second.min_bin = std::min(it->second.min_bin, b);
      it->second.counts[b]++;
    }
  }
  return map;
}

std::vector<ingest::HistogramStats> velocity_histograms(
    const CriticalityBinning& binning, double bin_width) {
  std::vector<ingest::HistogramStats> out;
  out.reserve(kBinCount);
  for (const auto& bin : binning.bins) {
    std::vector<double> v;
    v.reserve(bin.members.size());
    for (const auto& e : bin.members) {
      v.push_back(e.ego_velocity);
    }
    out.push_back(
        ingest::make_histogram(ingest::StatVariable::kVelocity, v, bin_width));
  }
  return out;
}

}  // namespace rsd::analysis
