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

#include "rsd/ingest/trajectory_dataset.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <map>
#include <string_view>
#include <unordered_map>

#include "rsd/error.hpp"
#include "rsd/ingest/filters.hpp"

namespace rsd::ingest {
namespace {

constexpr double kFeetToMeters = 0.3048;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '"')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' ||
                        s.back() == '\r' || s.back() == '"')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split_csv(std::string_view line) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      cells.push_back(trim(line.substr(start)));
      break;
    }
    cells.push_back(trim(line.substr(start, comma - start)));
    start = comma + 1;
  }
  return cells;
}

template <typename T>
T parse_number(std::string_view cell, std::size_t line_no,
               const std::string& column) {
  T value{};
  const auto [ptr, ec] =
      std::from_chars(cell.data(), cell.data() + cell.size(), value);
  if (ec != std::errc() || ptr != cell.data() + cell.size()) {
    throw Error(ErrorKind::kData, "line " + std::to_string(line_no) +
                                      ": cannot parse '" + std::string(cell) +
                                      "' in column " + column);
  }
  return value;
}

std::int64_t parse_integer(std::string_view cell, std::size_t line_no,
                           const std::string& column) {
  // Some exports write integral ids as "12.0".
  if (cell.find_first_of(".eE") != std::string_view::npos) {
    const double d = parse_number<double>(cell, line_no, column);
    if (d != static_cast<double>(static_cast<std::int64_t>(d))) {
      throw Error(ErrorKind::kData, "line " + std::to_string(line_no) +
                                        ": non-integral value in column " +
                                        column);
    }
    return static_cast<std::int64_t>(d);
  }
  return parse_number<std::int64_t>(cell, line_no, column);
}

VehicleClass parse_class(std::string_view cell) {
  if (cell == "1" || cell == "motorbike" || cell == "motorcycle") {
    return VehicleClass::kMotorbike;
  }
  if (cell == "3" || cell == "truck_bus" || cell == "truck" || cell == "bus") {
    return VehicleClass::kTruckBus;
  }
  return VehicleClass::kCar;
}

}  // namespace

TrajectoryDataset::TrajectoryDataset(double frame_step_s,
                                     std::vector<VehicleTrack> vehicles,
                                     core::Vec2 origin_offset,
                                     IngestWarnings warnings)
    : frame_step_(frame_step_s),
      vehicles_(std::move(vehicles)),
      origin_offset_(origin_offset),
      warnings_(warnings) {
  std::sort(vehicles_.begin(), vehicles_.end(),
            [](const VehicleTrack& a, const VehicleTrack& b) {
              return a.id < b.id;
            });
  if (!vehicles_.empty()) {
    first_frame_ = std::numeric_limits<Frame>::max();
    last_frame_ = std::numeric_limits<Frame>::min();
    for (const auto& v : vehicles_) {
      first_frame_ = std::min(first_frame_, v.first_frame);
      last_frame_ = std::max(last_frame_, v.last_frame());
    }
  }
}

std::size_t TrajectoryDataset::sample_count() const {
  std::size_t n = 0;
  for (const auto& v : vehicles_) {
    n += v.states.size();
  }
  return n;
}

const VehicleTrack* TrajectoryDataset::find(VehicleId id) const {
  const auto it = std::lower_bound(
      vehicles_.begin(), vehicles_.end(), id,
      [](const VehicleTrack& v, VehicleId key) { return v.id < key; });
  return (it != vehicles_.end() && it->id == id) ? &*it : nullptr;
}

core::SceneSnapshot TrajectoryDataset::scene_at(Frame f) const {
  core::SceneSnapshot scene;
  scene.time = time_of(f);
  for (const auto& v : vehicles_) {
    if (v.covers(f)) {
      scene.participants.push_back({v.id, v.state_at(f), v.path});
    }
  }
  return scene;
}

std::vector<RawTrajectoryRecord> read_records(std::istream& source,
                                              const ParseOptions& options) {
  const ColumnMapping& cols = options.columns;
  std::string line;
  if (!std::getline(source, line)) {
    throw Error(ErrorKind::kSchema, "input is empty, expected a CSV header");
  }
  std::unordered_map<std::string, std::size_t> index;
  {
    const auto header = split_csv(line);
    for (std::size_t i = 0; i < header.size(); ++i) {
      index.emplace(std::string(header[i]), i);
    }
  }
  auto require = [&](const std::string& name) {
    const auto it = index.find(name);
    if (it == index.end()) {
      throw Error(ErrorKind::kSchema, "missing required column '" + name + "'");
    }
    return it->second;
  };
  auto optional = [&](const std::string& name) -> std::optional<std::size_t> {
    const auto it = index.find(name);
    if (it == index.end()) return std::nullopt;
    return it->second;
  };
  const std::size_t id_col = require(cols.vehicle_id);
  const std::size_t frame_col = require(cols.frame);
  const std::size_t x_col = require(cols.x);
  const std::size_t y_col = require(cols.y);
  const auto time_col = optional(cols.time);
  const auto class_col = optional(cols.vehicle_class);
  const double scale = options.feet_to_meters ? kFeetToMeters : 1.0;

  std::vector<RawTrajectoryRecord> records;
  std::size_t line_no = 1;
  while (std::getline(source, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    const auto cells = split_csv(line);
    auto cell = [&](std::size_t col, const std::string& name) {
      if (col >= cells.size()) {
        throw Error(ErrorKind::kData, "line " + std::to_string(line_no) +
                                          ": missing value for " + name);
      }
      return cells[col];
    };
    RawTrajectoryRecord r;
    r.vehicle_id = parse_integer(cell(id_col, cols.vehicle_id), line_no,
                                 cols.vehicle_id);
    r.frame = parse_integer(cell(frame_col, cols.frame), line_no, cols.frame);
    r.x = scale * parse_number<double>(cell(x_col, cols.x), line_no, cols.x);
    r.y = scale * parse_number<double>(cell(y_col, cols.y), line_no, cols.y);
    r.timestamp = time_col ? 1e-3 * parse_number<double>(
                                        cell(*time_col, cols.time), line_no,
                                        cols.time)
                           : static_cast<double>(r.frame) * options.frame_step_s;
    if (class_col) {
      r.vehicle_class = parse_class(cell(*class_col, cols.vehicle_class));
    }
    records.push_back(r);
  }
  return records;
}

namespace {

VehicleTrack assemble_track(VehicleId id, VehicleClass vehicle_class,
                            Frame first_frame, std::vector<core::Vec2> positions,
                            core::RecordedPath recorded,
                            const std::vector<double>& velocity,
                            const std::vector<double>& acceleration) {
  auto path = std::make_shared<const core::Path>(std::move(recorded.path));
  const auto& l = recorded.sample_arclength;
  VehicleTrack track;
  track.id = id;
  track.vehicle_class = vehicle_class;
  track.first_frame = first_frame;
  track.states.resize(positions.size());
  for (std::size_t i = 0; i < positions.size(); ++i) {
    auto& s = track.states[i];
    s.position = positions[i];
    s.arclength = l[i];
    s.velocity = std::max(0.0, velocity[i]);
    s.acceleration = acceleration[i];
    s.heading = core::pose_at_arclength(*path, l[i]).heading;
  }
  track.path = std::move(path);
  return track;
}

}  // namespace

VehicleTrack make_track(VehicleId id, VehicleClass vehicle_class,
                        Frame first_frame,
                        const std::vector<core::Vec2>& positions,
                        double frame_step_s) {
  auto recorded = core::path_from_samples(positions);
  const auto v = differentiate(recorded.sample_arclength, frame_step_s);
  const auto a = differentiate(v, frame_step_s);
  return assemble_track(id, vehicle_class, first_frame, positions,
                        std::move(recorded), v, a);
}

TrajectoryDataset build_dataset(std::vector<RawTrajectoryRecord> records,
                                double frame_step_s) {
  if (!(frame_step_s > 0.0)) {
    throw Error(ErrorKind::kParameter, "frame step must be positive");
  }
  std::map<VehicleId, std::vector<RawTrajectoryRecord>> by_vehicle;
  for (const auto& r : records) {
    by_vehicle[r.vehicle_id].push_back(r);
  }

  IngestWarnings warnings;
  std::vector<const std::vector<RawTrajectoryRecord>*> kept;
  for (auto& [id, rows] : by_vehicle) {
    std::stable_sort(rows.begin(), rows.end(),
                     [](const auto& a, const auto& b) { return a.frame < b.frame; });
    bool gap = false;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      if (rows[i].frame == rows[i - 1].frame) {
        throw Error(ErrorKind::kData,
                    "vehicle " + std::to_string(id) + " has frame " +
                        std::to_string(rows[i].frame) + " more than once");
      }
      gap = gap || rows[i].frame != rows[i - 1].frame + 1;
    }
    if (rows.size() < 2) {
      ++warnings.dropped_short;
    } else if (gap) {
      ++warnings.dropped_gaps;
    } else {
      kept.push_back(&rows);
    }
  }

  core::Vec2 origin(std::numeric_limits<double>::infinity(),
                    std::numeric_limits<double>::infinity());
  for (const auto* rows : kept) {
    for (const auto& r : *rows) {
      origin = origin.cwiseMin(core::Vec2(r.x, r.y));
    }
  }
  if (kept.empty()) {
    origin = core::Vec2::Zero();
  }

  std::vector<VehicleTrack> tracks;
  tracks.reserve(kept.size());
  for (const auto* rows : kept) {
    std::vector<core::Vec2> positions;
    positions.reserve(rows->size());
    for (const auto& r : *rows) {
      positions.emplace_back(r.x - origin.x(), r.y - origin.y());
    }
    const auto& first = rows->front();
    tracks.push_back(make_track(first.vehicle_id, first.vehicle_class,
                                first.frame, positions, frame_step_s));
  }
  return TrajectoryDataset(frame_step_s, std::move(tracks), origin, warnings);
}

TrajectoryDataset parse_trajectories(std::istream& source,
                                     const ParseOptions& options) {
  return build_dataset(read_records(source, options), options.frame_step_s);
}

TrajectoryDataset smooth_dataset(const TrajectoryDataset& dataset,
                                 const SmoothingWidths& widths) {
  const double dt = dataset.frame_step();
  std::vector<VehicleTrack> tracks;
  tracks.reserve(dataset.vehicles().size());
  for (const auto& track : dataset.vehicles()) {
    const std::size_t n = track.states.size();
    std::vector<double> xs(n), ys(n);
    for (std::size_t i = 0; i < n; ++i) {
      xs[i] = track.states[i].position.x();
      ys[i] = track.states[i].position.y();
    }
    xs = ema_smooth_bidirectional(xs, widths.position_s, dt);
    ys = ema_smooth_bidirectional(ys, widths.position_s, dt);
    std::vector<core::Vec2> positions(n);
    for (std::size_t i = 0; i < n; ++i) {
      positions[i] = core::Vec2(xs[i], ys[i]);
    }

    auto recorded = core::path_from_samples(positions);
    const auto v = ema_smooth_bidirectional(
        differentiate(recorded.sample_arclength, dt), widths.velocity_s, dt);
    const auto a = ema_smooth_bidirectional(differentiate(v, dt),
                                            widths.acceleration_s, dt);
    tracks.push_back(assemble_track(track.id, track.vehicle_class,
                                    track.first_frame, std::move(positions),
                                    std::move(recorded), v, a));
  }
  return TrajectoryDataset(dt, std::move(tracks), dataset.origin_offset(),
                           dataset.warnings());
}

}  // namespace rsd::ingest
