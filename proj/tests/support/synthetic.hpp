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

#include <functional>
#include <string>
#include <vector>

#include "rsd/core/path.hpp"
#include "rsd/ingest/trajectory_dataset.hpp"

namespace rsd::testing {

using core::Vec2;

/// Position of one synthetic vehicle as a function of time.
struct SyntheticVehicle {
  core::VehicleId id = 1;
  ingest::Frame first_frame = 0;
  int frames = 0;
  std::function<Vec2(double t)> position;  ///< t relative to first_frame
};

/// NGSIM-style CSV in meters (use feet_to_meters = false when parsing).
std::string to_csv(const std::vector<SyntheticVehicle>& vehicles,
                   double frame_step = 0.1);

/// Unsmoothed dataset built directly from exact positions.
ingest::TrajectoryDataset to_dataset(
    const std::vector<SyntheticVehicle>& vehicles, double frame_step = 0.1);

/// Follower (id 1) and leader (id 2) driving east on y = 0 at `speed`; the
/// leader's reference point is `gap_bumper + 4` m ahead.
std::vector<SyntheticVehicle> follower_pair(double gap_bumper, double speed,
                                            int frames);

/// Eastbound (id 1) and northbound (id 2) vehicles meeting at (60, 0) at
/// t = 6 s, plus a distant eastbound vehicle (id 3) on y = 200.
std::vector<SyntheticVehicle> crossing_scenario(int frames = 150);

/// Busier scene with several crossing and following vehicles.
std::vector<SyntheticVehicle> grid_traffic(int frames);

/// Path through the given vertices.
core::Path polyline(std::initializer_list<Vec2> points);

/// Straight north to the origin, right-hand quarter arc of radius `radius`
/// centered at (radius, 0), then straight east.
core::Path right_turn_path(double radius, double approach, double exit_len,
                           int arc_segments = 90);

}  // namespace rsd::testing
