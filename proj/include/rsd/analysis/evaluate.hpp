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

#include <string>
#include <vector>

#include "rsd/ingest/trajectory_dataset.hpp"
#include "rsd/survival/scene_risk.hpp"

namespace rsd::analysis {

using core::VehicleId;
using ingest::Frame;

enum class Metric { kRsdFront, kRsdAll, kTimeHeadway, kTimeToCollision };

/// "RSD_front", "RSD_all", "TH", "TTC".
std::string to_string(Metric metric);
/// Inverse of to_string. Throws Error(kConfig) on an unknown name.
Metric parse_metric(const std::string& name);
bool is_rsd(Metric metric);

/// One evaluated (ego, frame). `metric_value` grows with criticality (R,
/// 1/TH or 1/TTC); `natural_value` is R or the time in seconds.
struct RiskEvent {
  VehicleId ego_id = 0;
  Frame frame = 0;
  double t = 0.0;
  core::Vec2 position = core::Vec2::Zero();
  double ego_velocity = 0.0;
  double metric_value = 0.0;
  double natural_value = 0.0;
};

struct AnalysisConfig {
  survival::RiskConfig risk;
  double sensor_range_m = 50.0;
  double lane_threshold_m = 1.8;
  double size_correction_m = 4.0;
  double th_min_velocity_mps = 0.1;
  double ttc_min_closing_mps = 1e-6;
  unsigned threads = 0;  ///< 0 selects the hardware concurrency

  void validate() const;
};

struct EvaluationResult {
  Metric metric = Metric::kRsdFront;
  /// Ordered by frame, then ego id.
  std::vector<RiskEvent> events;
  /// Every (ego, frame) visited, defined or not.
  std::size_t evaluated_steps = 0;
};

/// Runs `metric` with every vehicle as ego at every frame it is present.
/// The result does not depend on the thread count.
EvaluationResult evaluate_dataset(const ingest::TrajectoryDataset& dataset,
                                  Metric metric, const AnalysisConfig& config);

}  // namespace rsd::analysis
