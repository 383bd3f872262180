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
#include <istream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rsd/core/scene.hpp"

namespace rsd::ingest {

using core::VehicleId;
using Frame = std::int64_t;

enum class VehicleClass { kCar, kTruckBus, kMotorbike };

struct RawTrajectoryRecord {
  VehicleId vehicle_id = 0;
  Frame frame = 0;
  double timestamp = 0.0;  ///< s
  double x = 0.0;          ///< m, East
  double y = 0.0;          ///< m, North
  VehicleClass vehicle_class = VehicleClass::kCar;
};

/// CSV header names for each field. Defaults follow the NGSIM layout.
struct ColumnMapping {
  std::string vehicle_id = "Vehicle_ID";
  std::string frame = "Frame_ID";
  std::string time = "Global_Time";  ///< optional, milliseconds
  std::string x = "Local_X";
  std::string y = "Local_Y";
  std::string vehicle_class = "v_Class";  ///< optional
};

struct ParseOptions {
  ColumnMapping columns;
  double frame_step_s = 0.1;
  bool feet_to_meters = true;
};

/// Gap-free state series of one vehicle, one entry per frame.
struct VehicleTrack {
  VehicleId id = 0;
  VehicleClass vehicle_class = VehicleClass::kCar;
  Frame first_frame = 0;
  std::vector<core::KinematicState> states;
  std::shared_ptr<const core::Path> path;

  Frame last_frame() const {
    return first_frame + static_cast<Frame>(states.size()) - 1;
  }
  bool covers(Frame f) const { return f >= first_frame && f <= last_frame(); }
  const core::KinematicState& state_at(Frame f) const {
    return states[static_cast<std::size_t>(f - first_frame)];
  }
};

struct IngestWarnings {
  std::size_t dropped_short = 0;  ///< vehicles with fewer than 2 frames
  std::size_t dropped_gaps = 0;   ///< vehicles whose frames are not contiguous
};

/// Per-vehicle tracks on a shared local frame whose origin is the bounding-box
/// minimum of all kept positions.
class TrajectoryDataset {
 public:
  TrajectoryDataset() = default;
  TrajectoryDataset(double frame_step_s, std::vector<VehicleTrack> vehicles,
                    core::Vec2 origin_offset = core::Vec2::Zero(),
                    IngestWarnings warnings = {});

  double frame_step() const { return frame_step_; }
  const std::vector<VehicleTrack>& vehicles() const { return vehicles_; }
  bool empty() const { return vehicles_.empty(); }
  Frame first_frame() const { return first_frame_; }
  Frame last_frame() const { return last_frame_; }
  double time_of(Frame f) const { return static_cast<double>(f) * frame_step_; }
  const core::Vec2& origin_offset() const { return origin_offset_; }
  const IngestWarnings& warnings() const { return warnings_; }
  std::size_t sample_count() const;

  const VehicleTrack* find(VehicleId id) const;

  /// Every vehicle present at frame `f`, ordered by id.
  core::SceneSnapshot scene_at(Frame f) const;

 private:
  double frame_step_ = 0.1;
  std::vector<VehicleTrack> vehicles_;
  core::Vec2 origin_offset_ = core::Vec2::Zero();
  IngestWarnings warnings_;
  Frame first_frame_ = 0;
  Frame last_frame_ = -1;
};

/// Reads CSV rows into records. Throws Error(kSchema) naming a missing
/// required column and Error(kData) on unparsable cells.
std::vector<RawTrajectoryRecord> read_records(std::istream& source,
                                              const ParseOptions& options);

/// Groups records per vehicle, shifts positions to the local origin and
/// derives unsmoothed kinematics. Throws Error(kData) naming the vehicle on a
/// duplicated frame.
TrajectoryDataset build_dataset(std::vector<RawTrajectoryRecord> records,
                                double frame_step_s);

TrajectoryDataset parse_trajectories(std::istream& source,
                                     const ParseOptions& options);

/// Builds one track from positions already in the local frame.
VehicleTrack make_track(VehicleId id, VehicleClass vehicle_class,
                        Frame first_frame,
                        const std::vector<core::Vec2>& positions,
                        double frame_step_s);

struct SmoothingWidths {
  double position_s = 10.0;
  double velocity_s = 20.0;
  double acceleration_s = 80.0;
};

/// Smooths positions, then derives and smooths velocity and acceleration.
TrajectoryDataset smooth_dataset(const TrajectoryDataset& dataset,
                                 const SmoothingWidths& widths = {});

}  // namespace rsd::ingest
