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

#include <span>
#include <string>
#include <vector>

#include "rsd/ingest/trajectory_dataset.hpp"

namespace rsd::ingest {

enum class StatVariable {
  kVelocity,          ///< v, m/s
  kAcceleration,      ///< a, m/s^2
  kGap,               ///< -dl to the front vehicle, m
  kRelativeVelocity,  ///< dv = v_ego - v_front, m/s
};

std::string to_string(StatVariable variable);

/// Fixed-width histogram with probability mass and cumulative distribution.
/// Bins are [k*w, (k+1)*w) for integer k; empty samples give empty vectors.
struct HistogramStats {
  StatVariable variable = StatVariable::kVelocity;
  double bin_width = 1.0;
  std::vector<double> bin_edges;  ///< size pmf.size() + 1
  std::vector<double> pmf;
  std::vector<double> cdf;
  std::size_t sample_count = 0;
  double mean = 0.0;
  double stddev = 0.0;

  bool empty() const { return pmf.empty(); }
};

HistogramStats make_histogram(StatVariable variable,
                              std::span<const double> samples,
                              double bin_width);

/// Relative kinematics of one ego vehicle to its front vehicle at one frame.
struct FrontPairSample {
  VehicleId ego_id = 0;
  Frame frame = 0;
  double delta_l = 0.0;  ///< l_ego - l_front, negative when the front is ahead
  double delta_v = 0.0;  ///< v_ego - v_front
};

struct StatisticsBinWidths {
  double velocity = 1.0;
  double acceleration = 0.1;
  double gap = 1.0;
  double relative_velocity = 0.5;
};

/// Four histograms in the order v, a, -dl, dv. Throws Error(kEmptyStatistics)
/// on an empty dataset.
std::vector<HistogramStats> kinematics_statistics(
    const TrajectoryDataset& dataset, std::span<const FrontPairSample> pairs,
    const StatisticsBinWidths& widths = {});

}  // namespace rsd::ingest
