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
#include <vector>

#include "rsd/collision/footprint.hpp"
#include "rsd/predict/prediction.hpp"
#include "rsd/survival/survival.hpp"

namespace rsd::survival {

struct RiskConfig {
  predict::PredictionConfig prediction;
  collision::CollisionConfig collision;
  EscapeRate escape = EscapeRate::from_time_constant(3.0);
  double collision_interval_s = 0.1;  ///< dt dividing P_coll into a rate

  void validate() const;
};

struct RiskProfile {
  core::VehicleId ego_id = 0;
  double t = 0.0;
  double risk = 0.0;  ///< R in [0, 1]
  std::vector<double> survival;
  RateProfile rate;
};

/// Footprints at every sample of `trajectory`. A null layout, or a layout
/// with one component, yields plain footprints.
std::vector<collision::GaussianFootprint> footprints_along(
    const predict::PredictedTrajectory& trajectory, double sigma_lat,
    const collision::PmmLayout* layout);

struct PartnerFootprints {
  core::VehicleId id = 0;
  const std::vector<collision::GaussianFootprint>* footprints = nullptr;
};

/// Risk of the ego against precomputed partner footprints. Throws
/// Error(kAlignment) when a partner's sample count differs from the ego's.
RiskProfile risk_from_footprints(
    core::VehicleId ego_id, double t, double step,
    const std::vector<collision::GaussianFootprint>& ego,
    std::span<const PartnerFootprints> partners, const RiskConfig& config);

/// Predicted trajectories in, risk profile out. Throws Error(kAlignment) when
/// the partners' grids (step or sample count) differ from the ego's.
RiskProfile scene_risk(const predict::PredictedTrajectory& ego,
                       std::span<const predict::PredictedTrajectory> partners,
                       const RiskConfig& config, double t = 0.0);

}  // namespace rsd::survival
