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

#include <optional>
#include <vector>

#include "rsd/core/scene.hpp"
#include "rsd/ingest/statistics.hpp"
#include "rsd/ingest/trajectory_dataset.hpp"

namespace rsd::predict {

using core::VehicleId;

/// Other participants within Euclidean distance r of the ego, ordered by
/// distance and then id. Throws Error(kLookup) if the ego is absent and
/// Error(kParameter) unless r > 0.
std::vector<VehicleId> neighbors_in_range(const core::SceneSnapshot& scene,
                                          VehicleId ego_id, double r);

struct FrontVehicle {
  VehicleId id = 0;
  double delta_l = 0.0;  ///< l_ego - l_front, negative
  double delta_v = 0.0;  ///< v_ego - v_front
};

/// Nearest participant within r whose projection onto the ego's path lies
/// ahead of the ego with a lateral offset below `lane_threshold`. The ego path
/// is extended straight beyond its end.
std::optional<FrontVehicle> front_vehicle(const core::SceneSnapshot& scene,
                                          VehicleId ego_id, double r,
                                          double lane_threshold = 1.8);

/// Front-vehicle pairing for every (vehicle, frame) of the dataset, ordered by
/// frame and then ego id.
std::vector<ingest::FrontPairSample> collect_front_pairs(
    const ingest::TrajectoryDataset& dataset, double r,
    double lane_threshold = 1.8);

}  // namespace rsd::predict
