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

#include <cstdint>
#include <memory>
#include <vector>

#include "rsd/core/path.hpp"

namespace rsd::core {

using VehicleId = std::int64_t;

/// Kinematic state of one vehicle, expressed on its own path.
struct KinematicState {
  Vec2 position = Vec2::Zero();
  double heading = 0.0;       ///< rad, in (-pi, pi]
  double velocity = 0.0;      ///< longitudinal, m/s, >= 0
  double acceleration = 0.0;  ///< longitudinal, m/s^2
  double arclength = 0.0;     ///< position projected on the vehicle's path
};

struct Participant {
  VehicleId id = 0;
  KinematicState state;
  std::shared_ptr<const Path> path;
};

/// All participants present at one instant. Ids are unique.
struct SceneSnapshot {
  double time = 0.0;
  std::vector<Participant> participants;

  const Participant* find(VehicleId id) const;
  /// Throws Error(kLookup) when `id` is absent.
  const Participant& at(VehicleId id) const;
};

/// Throws Error(kData) if two participants share an id.
void validate_scene(const SceneSnapshot& scene);

}  // namespace rsd::core
