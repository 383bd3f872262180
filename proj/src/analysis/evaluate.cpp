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

#include "rsd/analysis/evaluate.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_map>

#include "rsd/baselines/baselines.hpp"
#include "rsd/error.hpp"
#include "rsd/predict/neighbors.hpp"

namespace rsd::analysis {
namespace {

using collision::GaussianFootprint;

struct FrameResult {
  std::vector<RiskEvent> events;
  std::size_t steps = 0;
};

// Footprints are built on first use; an ego without partners never needs its
// own.
class FrameContext {
 public:
  FrameContext(core::SceneSnapshot scene, const AnalysisConfig& config,
               const collision::PmmLayout* layout)
      : scene_(std::move(scene)), config_(config), layout_(layout) {
    cache_.resize(scene_.participants.size());
    for (std::size_t i = 0; i < scene_.participants.size(); ++i) {
      index_.emplace(scene_.participants[i].id, i);
    }
  }

  const core::SceneSnapshot& scene() const { return scene_; }

  const std::vector<GaussianFootprint>& footprints(VehicleId id) {
    const std::size_t i = index_.at(id);
    if (!cache_[i]) {
      const auto traj =
          predict::predict(scene_.participants[i], config_.risk.prediction,
                           config_.risk.collision.growth);
      cache_[i] = survival::footprints_along(
          traj, config_.risk.collision.sigma_lat, layout_);
    }
    return *cache_[i];
  }

 private:
  core::SceneSnapshot scene_;
  const AnalysisConfig& config_;
  const collision::PmmLayout* layout_;
  std::unordered_map<VehicleId, std::size_t> index_;
  std::vector<std::optional<std::vector<GaussianFootprint>>> cache_;
};

RiskEvent make_event(const core::Participant& ego, Frame frame, double t) {
  RiskEvent e;
  e.ego_id = ego.id;
  e.frame = frame;
  e.t = t;
  e.position = ego.state.position;
  e.ego_velocity = ego.state.velocity;
  return e;
}

FrameResult evaluate_frame(const ingest::TrajectoryDataset& dataset, Frame f,
                           Metric metric, const AnalysisConfig& config,
                           const collision::PmmLayout* layout) {
  FrameContext ctx(dataset.scene_at(f), config, layout);
  const core::SceneSnapshot& scene = ctx.scene();
  const double t = dataset.time_of(f);
  const double step = config.risk.prediction.step_s;
  FrameResult out;
  for (const auto& ego : scene.participants) {
    ++out.steps;
    RiskEvent event = make_event(ego, f, t);
    if (is_rsd(metric)) {
      std::vector<VehicleId> partners;
      if (metric == Metric::kRsdAll) {
        partners = predict::neighbors_in_range(scene, ego.id,
                                               config.sensor_range_m);
      } else if (const auto front = predict::front_vehicle(
                     scene, ego.id, config.sensor_range_m,
                     config.lane_threshold_m)) {
        partners.push_back(front->id);
      }
      double risk = 0.0;
      if (!partners.empty()) {
        std::vector<survival::PartnerFootprints> refs;
        refs.reserve(partners.size());
        for (const VehicleId id : partners) {
          refs.push_back({id, &ctx.footprints(id)});
        }
        risk = survival::risk_from_footprints(ego.id, t, step,
                                              ctx.footprints(ego.id), refs,
                                              config.risk)
                   .risk;
      }
      event.metric_value = risk;
      event.natural_value = risk;
      out.events.push_back(event);
      continue;
    }

    const auto front = predict::front_vehicle(
        scene, ego.id, config.sensor_range_m, config.lane_threshold_m);
    if (!front) {
      continue;
    }
    const baselines::BaselineResult r =
        metric == Metric::kTimeHeadway
            ? baselines::time_headway(front->delta_l, ego.state.velocity,
                                      config.size_correction_m,
                                      config.th_min_velocity_mps)
            : baselines::time_to_collision(front->delta_l, front->delta_v,
                                           config.size_correction_m,
                                           config.ttc_min_closing_mps);
    if (r.defined()) {
      event.metric_value = r.inverse();
      event.natural_value = *r.value;
      out.events.push_back(event);
    }
  }
  return out;
}

}  // namespace

std::string to_string(Metric metric) {
  switch (metric) {
    case Metric::kRsdFront: return "RSD_front";
    case Metric::kRsdAll: return "RSD_all";
    case Metric::kTimeHeadway: return "TH";
    case Metric::kTimeToCollision: return "TTC";
  }
  return "?";
}

Metric parse_metric(const std::string& name) {
  for (const Metric m : {Metric::kRsdFront, Metric::kRsdAll,
                         Metric::kTimeHeadway, Metric::kTimeToCollision}) {
    if (to_string(m) == name) {
      return m;
    }
  }
  throw Error(ErrorKind::kConfig,
              "unknown metric '" + name +
                  "' (expected RSD_front, RSD_all, TH or TTC)");
}

bool is_rsd(Metric metric) {
  return metric == Metric::kRsdFront || metric == Metric::kRsdAll;
}

void AnalysisConfig::validate() const {
  risk.validate();
  if (!(sensor_range_m > 0.0)) {
    throw Error(ErrorKind::kParameter, "sensor range must be positive");
  }
  if (!(lane_threshold_m > 0.0)) {
    throw Error(ErrorKind::kParameter, "lane threshold must be positive");
  }
  if (!(size_correction_m >= 0.0)) {
    throw Error(ErrorKind::kParameter, "size correction must be non-negative");
  }
  if (!(ttc_min_closing_mps >= 0.0)) {
    throw Error(ErrorKind::kParameter,
                "minimum TTC closing speed must be non-negative");
  }
  if (!(th_min_velocity_mps >= 0.0)) {
    throw Error(ErrorKind::kParameter,
                "minimum TH velocity must be non-negative");
  }
}

EvaluationResult evaluate_dataset(const ingest::TrajectoryDataset& dataset,
                                  Metric metric, const AnalysisConfig& config) {
  config.validate();
  EvaluationResult result;
  result.metric = metric;
  if (dataset.empty()) {
    return result;
  }

  std::optional<collision::PmmLayout> layout;
  if (config.risk.collision.pmm.enabled) {
    layout = collision::pmm_layout(config.risk.collision.pmm);
  }
  const collision::PmmLayout* layout_ptr = layout ? &*layout : nullptr;

  const Frame first = dataset.first_frame();
  const auto frame_count =
      static_cast<std::size_t>(dataset.last_frame() - first + 1);
  std::vector<FrameResult> slots(frame_count);

  unsigned threads = config.threads;
  if (threads == 0) {
    threads = std::max(1u, std::thread::hardware_concurrency());
  }
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, frame_count));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&]() {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= frame_count) {
        return;
      }
      try {
        slots[i] = evaluate_frame(dataset, first + static_cast<Frame>(i),
                                  metric, config, layout_ptr);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) {
          failure = std::current_exception();
        }
        next.store(frame_count);
        return;
      }
    }
  };

  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned i = 0; i < threads; ++i) {
      pool.emplace_back(worker);
    }
    for (auto& th : pool) {
      th.join();
    }
  }
  if (failure) {
    std::rethrow_exception(failure);
  }

  for (auto& slot : slots) {
    result.evaluated_steps += slot.steps;
    result.events.insert(result.events.end(), slot.events.begin(),
                         slot.events.end());
  }
  return result;
}

}  // namespace rsd::analysis
