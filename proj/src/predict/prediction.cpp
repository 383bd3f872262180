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

#include "rsd/predict/prediction.hpp"

#include <cmath>

#include "rsd/error.hpp"

namespace rsd::predict {

void PredictionConfig::validate() const {
  if (!(step_s > 0.0)) {
    throw Error(ErrorKind::kParameter, "prediction step must be positive");
  }
  if (!(horizon_s >= step_s) || !std::isfinite(horizon_s)) {
    throw Error(ErrorKind::kParameter,
                "prediction horizon must be finite and at least one step");
  }
}

std::size_t PredictionConfig::sample_count() const {
  return static_cast<std::size_t>(std::floor(horizon_s / step_s + 1e-9)) + 1;
}

PredictedTrajectory predict(VehicleId id, const core::KinematicState& state,
                            std::shared_ptr<const core::Path> path,
                            const PredictionConfig& config,
                            const collision::UncertaintyGrowth& growth) {
  config.validate();
  if (!path) {
    throw Error(ErrorKind::kInvalidPath,
                "vehicle " + std::to_string(id) + " has no path");
  }
  if (state.velocity < 0.0) {
    throw Error(ErrorKind::kParameter,
                "negative velocity for vehicle " + std::to_string(id));
  }
  const std::size_t n = config.sample_count();
  const bool stops = config.behavior == BehaviorModel::kSuddenStop;

  std::vector<double> velocity(n, stops ? 0.0 : state.velocity);
  velocity[0] = state.velocity;
  const std::vector<double> sigma =
      collision::sigma_growth(growth, velocity, config.step_s);

  PredictedTrajectory out;
  out.vehicle_id = id;
  out.step = config.step_s;
  out.path = path;
  out.samples.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    auto& s = out.samples[k];
    // Affine in k, computed directly so no error accumulates.
    s.arclength = stops ? state.arclength
                        : state.arclength + state.velocity *
                                                static_cast<double>(k) *
                                                config.step_s;
    const core::Pose pose = core::pose_at_arclength(*path, s.arclength);
    s.position = pose.position;
    s.heading = pose.heading;
    s.velocity = velocity[k];
    s.sigma_lon = sigma[k];
  }
  return out;
}

PredictedTrajectory predict(const core::Participant& participant,
                            const PredictionConfig& config,
                            const collision::UncertaintyGrowth& growth) {
  return predict(participant.id, participant.state, participant.path, config,
                 growth);
}

}  // namespace rsd::predict
