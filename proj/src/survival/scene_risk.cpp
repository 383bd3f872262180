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

#include "rsd/survival/scene_risk.hpp"

#include <cmath>
#include <optional>
#include <string>

#include "rsd/error.hpp"

namespace rsd::survival {

void RiskConfig::validate() const {
  prediction.validate();
  collision.validate();
  if (!(collision_interval_s > 0.0)) {
    throw Error(ErrorKind::kParameter, "collision interval must be positive");
  }
}

std::vector<collision::GaussianFootprint> footprints_along(
    const predict::PredictedTrajectory& trajectory, double sigma_lat,
    const collision::PmmLayout* layout) {
  std::vector<collision::GaussianFootprint> out;
  out.reserve(trajectory.samples.size());
  const bool mixture = layout != nullptr && layout->offsets.size() > 1 &&
                       trajectory.path != nullptr;
  for (const auto& s : trajectory.samples) {
    if (mixture) {
      out.push_back(collision::build_pmm(s.position, s.sigma_lon, sigma_lat,
                                         s.heading, *trajectory.path,
                                         s.arclength, *layout));
    } else {
      out.push_back(collision::make_footprint(s.position, s.sigma_lon,
                                              sigma_lat, s.heading));
    }
  }
  return out;
}

RiskProfile risk_from_footprints(
    core::VehicleId ego_id, double t, double step,
    const std::vector<collision::GaussianFootprint>& ego,
    std::span<const PartnerFootprints> partners, const RiskConfig& config) {
  RiskProfile profile;
  profile.ego_id = ego_id;
  profile.t = t;
  profile.rate = empty_profile(ego.size(), step);
  std::vector<double> probability(ego.size());
  for (const auto& partner : partners) {
    if (partner.footprints == nullptr ||
        partner.footprints->size() != ego.size()) {
      throw Error(ErrorKind::kAlignment,
                  "partner " + std::to_string(partner.id) +
                      " is not on the ego's prediction grid");
    }
    for (std::size_t k = 0; k < ego.size(); ++k) {
      probability[k] = collision::collision_probability(
          ego[k], (*partner.footprints)[k], config.collision.cross_section);
    }
    add_partner(profile.rate, partner.id,
                collision_rate(probability, config.collision_interval_s));
  }
  profile.survival = survival_function(profile.rate, config.escape);
  profile.risk = integrated_risk(profile.rate, config.escape);
  return profile;
}

RiskProfile scene_risk(const predict::PredictedTrajectory& ego,
                       std::span<const predict::PredictedTrajectory> partners,
                       const RiskConfig& config, double t) {
  std::optional<collision::PmmLayout> layout;
  if (config.collision.pmm.enabled) {
    layout = collision::pmm_layout(config.collision.pmm);
  }
  const double sigma_lat = config.collision.sigma_lat;
  const auto ego_fp =
      footprints_along(ego, sigma_lat, layout ? &*layout : nullptr);

  std::vector<std::vector<collision::GaussianFootprint>> partner_fp;
  partner_fp.reserve(partners.size());
  std::vector<PartnerFootprints> refs;
  for (const auto& p : partners) {
    if (std::abs(p.step - ego.step) > 1e-12 ||
        p.samples.size() != ego.samples.size()) {
      throw Error(ErrorKind::kAlignment,
                  "partner " + std::to_string(p.vehicle_id) +
                      " uses a different prediction grid than ego " +
                      std::to_string(ego.vehicle_id));
    }
    partner_fp.push_back(
        footprints_along(p, sigma_lat, layout ? &*layout : nullptr));
  }
  for (std::size_t i = 0; i < partners.size(); ++i) {
    refs.push_back({partners[i].vehicle_id, &partner_fp[i]});
  }
  return risk_from_footprints(ego.vehicle_id, t, ego.step, ego_fp, refs,
                              config);
}

}  // namespace rsd::survival
