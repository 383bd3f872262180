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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rsd/analysis/evaluate.hpp"

namespace rsd::analysis {

inline constexpr std::size_t kBinCount = 4;
inline constexpr std::array<const char*, kBinCount> kBinLabels = {
    "dangerous", "offensive", "uncomfortable", "noticeable"};

/// Half-open interval [low, high) in natural units.
struct Interval {
  double low = 0.0;
  double high = 0.0;
};

using BinIntervals = std::array<Interval, kBinCount>;
using BinCounts = std::array<std::size_t, kBinCount>;

/// [0, 0.5), [0.5, 1), [1, 2), [2, 4) seconds.
BinIntervals default_th_bins();

struct CriticalityBin {
  std::string label;
  /// Natural-unit boundaries; unset for an empty matched bin.
  std::optional<double> boundary_low;
  std::optional<double> boundary_high;
  std::vector<RiskEvent> members;
};

enum class BinningMode { kFixed, kMatched };

/// Bins ordered from most to least critical.
struct CriticalityBinning {
  BinningMode mode = BinningMode::kFixed;
  std::array<CriticalityBin, kBinCount> bins;
  std::size_t unbinned_count = 0;
  /// Events missing to reach the reference counts (matched mode only).
  std::size_t shortfall = 0;

  std::size_t binned_count() const;
};

/// Sorts by metric value descending, then t and ego id ascending.
void sort_by_criticality(std::vector<RiskEvent>& events);

/// Assigns each event to the interval containing its natural value. Throws
/// Error(kConfig) on an empty or inverted interval, or on overlapping ones.
CriticalityBinning bin_fixed(std::span<const RiskEvent> events,
                             const BinIntervals& intervals);

enum class ShortfallPolicy {
  kError,          ///< throw Error(kCount) naming the shortfall
  kFillAvailable,  ///< fill in order until events run out
};

/// Fills bins with the most critical events first until each holds its
/// reference count. Boundaries span the first and last member's natural
/// values.
CriticalityBinning bin_matched(std::span<const RiskEvent> events,
                               const BinCounts& reference_counts,
                               ShortfallPolicy policy = ShortfallPolicy::kError);

BinCounts member_counts(const CriticalityBinning& binning);

}  // namespace rsd::analysis
