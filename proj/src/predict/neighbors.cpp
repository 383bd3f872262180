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

#include "rsd/predict/neighbors.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "rsd/error.hpp"

namespace rsd::predict {
namespace {

// Extra search length past r, so a leader near the range limit on a curved
// path is still found.
constexpr double kWindowMargin = 10.0;

struct PathOffset {
  double arclength;
  double lateral;
};

PathOffset locate_on_path(const core::Path& path, const core::Vec2& p,
                          double l_min, double l_max) {
  double l = core::project_to_path(path, p, l_min, l_max);
  if (l >= path.length()) {
    const auto& pts = path.points();
    const core::Vec2 end = pts.back();
    const core::Vec2 dir = (end - pts[pts.size() - 2]).normalized();
    l = path.length() + std::max(0.0, (p - end).dot(dir));
  }
  const core::Vec2 foot = core::pose_at_arclength(path, l).position;
  return {l, (p - foot).norm()};
}

}  // namespace

std::vector<VehicleId> neighbors_in_range(const core::SceneSnapshot& scene,
                                          VehicleId ego_id, double r) {
  if (!(r > 0.0)) {
    throw Error(ErrorKind::kParameter, "sensor range must be positive");
  }
  const core::Participant& ego = scene.at(ego_id);
  std::vector<std::pair<double, VehicleId>> found;
  for (const auto& p : scene.participants) {
    if (p.id == ego_id) {
      continue;
    }
    const double d = (p.state.position - ego.state.position).norm();
    if (d <= r) {
      found.emplace_back(d, p.id);
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<VehicleId> ids;
  ids.reserve(found.size());
  for (const auto& [d, id] : found) {
    ids.push_back(id);
  }
  return ids;
}

std::optional<FrontVehicle> front_vehicle(const core::SceneSnapshot& scene,
                                          VehicleId ego_id, double r,
                                          double lane_threshold) {
  const core::Participant* ego = scene.find(ego_id);
  if (ego == nullptr || !ego->path || !(r > 0.0)) {
    return std::nullopt;
  }
  const core::Path& path = *ego->path;
  const double l_ego = ego->state.arclength;
  std::optional<FrontVehicle> best;
  double best_l = 0.0;
  for (const VehicleId id : neighbors_in_range(scene, ego_id, r)) {
    const core::Participant& other = scene.at(id);
    const PathOffset off =
        locate_on_path(path, other.state.position, l_ego,
                       l_ego + r + kWindowMargin);
    if (!(off.arclength > l_ego) || !(off.lateral < lane_threshold)) {
      continue;
    }
    if (!best || off.arclength < best_l) {
      best_l = off.arclength;
      best = FrontVehicle{id, l_ego - off.arclength,
                          ego->state.velocity - other.state.velocity};
    }
  }
  return best;
}

std::vector<ingest::FrontPairSample> collect_front_pairs(
    const ingest::TrajectoryDataset& dataset, double r, double lane_threshold) {
  std::vector<ingest::FrontPairSample> pairs;
  for (ingest::Frame f = dataset.first_frame(); f <= dataset.last_frame(); ++f) {
    const core::SceneSnapshot scene = dataset.scene_at(f);
    for (const auto& p : scene.participants) {
      if (const auto front = front_vehicle(scene, p.id, r, lane_threshold)) {
        pairs.push_back({p.id, f, front->delta_l, front->delta_v});
      }
    }
  }
  return pairs;
}

}  // namespace rsd::predict
