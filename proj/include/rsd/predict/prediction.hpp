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

#include <memory>
#include <vector>

#include "rsd/collision/uncertainty.hpp"
#include "rsd/core/scene.hpp"

namespace rsd::predict {

using core::VehicleId;

enum class BehaviorModel {
  kConstantVelocity,
  kSuddenStop,  ///< frozen at the current arclength for s > 0
};

struct PredictedSample {
  double arclength = 0.0;  ///< m, on the vehicle's path
  core::Vec2 position = core::Vec2::Zero();
  double heading = 0.0;
  double velocity = 0.0;   ///< m/s
  double sigma_lon = 0.0;  ///< m
};

/// Samples at s = 0, step, 2 step, ... up to the horizon.
struct PredictedTrajectory {
  VehicleId vehicle_id = 0;
  double step = 0.1;
  std::vector<PredictedSample> samples;
  std::shared_ptr<const core::Path> path;
};

struct PredictionConfig {
  double step_s = 0.1;
  double horizon_s = 12.0;
  BehaviorModel behavior = BehaviorModel::kConstantVelocity;

  /// Throws Error(kParameter) unless 0 < step <= horizon.
  void validate() const;
  /// floor(horizon / step) + 1, robust to representation error.
  std::size_t sample_count() const;
};

/// Extrapolates `state` along `path`. Throws Error(kInvalidPath) on a null
/// path and Error(kParameter) on a negative velocity.
PredictedTrajectory predict(VehicleId id, const core::KinematicState& state,
                            std::shared_ptr<const core::Path> path,
                            const PredictionConfig& config,
                            const collision::UncertaintyGrowth& growth);

PredictedTrajectory predict(const core::Participant& participant,
                            const PredictionConfig& config,
                            const collision::UncertaintyGrowth& growth);

}  // namespace rsd::predict
