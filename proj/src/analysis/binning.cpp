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

#include "rsd/analysis/binning.hpp"

#include <algorithm>
#include <numeric>

#include "rsd/error.hpp"

namespace rsd::analysis {
namespace {

CriticalityBinning labelled(BinningMode mode) {
  CriticalityBinning b;
  b.mode = mode;
  for (std::size_t i = 0; i < kBinCount; ++i) {
    b.bins[i].label = kBinLabels[i];
  }
  return b;
}

void validate_intervals(const BinIntervals& intervals) {
  for (std::size_t i = 0; i < kBinCount; ++i) {
    if (!(intervals[i].low < intervals[i].high)) {
      throw Error(ErrorKind::kConfig, "bin interval " + std::to_string(i + 1) +
                                          " is empty or inverted");
    }
  }
  std::array<Interval, kBinCount> sorted = intervals;
  std::sort(sorted.begin(), sorted.end(),
            [](const Interval& a, const Interval& b) { return a.low < b.low; });
  for (std::size_t i = 1; i < kBinCount; ++i) {
    if (sorted[i].low < sorted[i - 1].high) {
      throw Error(ErrorKind::kConfig, "bin intervals overlap");
    }
  }
}

}  // namespace

std::size_t CriticalityBinning::binned_count() const {
  std::size_t n = 0;
  for (const auto& b : bins) {
    n += b.members.size();
  }
  return n;
}

BinIntervals default_th_bins() {
  return {Interval{0.0, 0.5}, Interval{0.5, 1.0}, Interval{1.0, 2.0},
          Interval{2.0, 4.0}};
}

void sort_by_criticality(std::vector<RiskEvent>& events) {
  std::sort(events.begin(), events.end(),
            [](const RiskEvent& a, const RiskEvent& b) {
              if (a.metric_value != b.metric_value) {
                return a.metric_value > b.metric_value;
              }
              if (a.t != b.t) {
                return a.t < b.t;
              }
              return a.ego_id < b.ego_id;
            });
}

CriticalityBinning bin_fixed(std::span<const RiskEvent> events,
                             const BinIntervals& intervals) {
  validate_intervals(intervals);
  CriticalityBinning b = labelled(BinningMode::kFixed);
  for (std::size_t i = 0; i < kBinCount; ++i) {
    b.bins[i].boundary_low = intervals[i].low;
    b.bins[i].boundary_high = intervals[i].high;
  }
  std::vector<RiskEvent> sorted(events.begin(), events.end());
  sort_by_criticality(sorted);
  for (const auto& e : sorted) {
    bool placed = false;
    for (std::size_t i = 0; i < kBinCount && !placed; ++i) {
      if (e.natural_value >= intervals[i].low &&
          e.natural_value < intervals[i].high) {
        b.bins[i].members.push_back(e);
        placed = true;
      }
    }
    if (!placed) {
      ++b.unbinned_count;
    }
  }
  return b;
}

CriticalityBinning bin_matched(std::span<const RiskEvent> events,
                               const BinCounts& reference_counts,
                               ShortfallPolicy policy) {
  const std::size_t wanted = std::accumulate(
      reference_counts.begin(), reference_counts.end(), std::size_t{0});
  CriticalityBinning b = labelled(BinningMode::kMatched);
  if (wanted > events.size()) {
    b.shortfall = wanted - events.size();
    if (policy == ShortfallPolicy::kError) {
      throw Error(ErrorKind::kCount,
                  "matched binning needs " + std::to_string(wanted) +
                      " events but only " + std::to_string(events.size()) +
                      " are defined (short by " + std::to_string(b.shortfall) +
                      ")");
    }
  }

  std::vector<RiskEvent> sorted(events.begin(), events.end());
  sort_by_criticality(sorted);
  std::size_t pos = 0;
  for (std::size_t i = 0; i < kBinCount; ++i) {
    auto& bin = b.bins[i];
    const std::size_t take = std::min(reference_counts[i], sorted.size() - pos);
    bin.members.assign(sorted.begin() + static_cast<std::ptrdiff_t>(pos),
                       sorted.begin() + static_cast<std::ptrdiff_t>(pos + take));
    pos += take;
    if (!bin.members.empty()) {
      const double first = bin.members.front().natural_value;
      const double last = bin.members.back().natural_value;
      bin.boundary_low = std::min(first, last);
      bin.boundary_high = std::max(first, last);
    }
  }
  b.unbinned_count = sorted.size() - pos;
  return b;
}

BinCounts member_counts(const CriticalityBinning& binning) {
  BinCounts c{};
  for (std::size_t i = 0; i < kBinCount; ++i) {
    c[i] = binning.bins[i].members.size();
  }
  return c;
}

}  // namespace rsd::analysis
