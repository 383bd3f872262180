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

#include "rsd/cli/run_config.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "rsd/error.hpp"

namespace rsd::cli {
namespace {

using analysis::Json;

struct Binding {
  const char* key;
  std::function<void(RunConfig&, const Json&)> set;
  std::function<Json(const RunConfig&)> get;
};

[[noreturn]] void bad_type(const std::string& key, const char* expected) {
  throw Error(ErrorKind::kConfig,
              "config key '" + key + "' must be " + expected);
}

double as_number(const std::string& key, const Json& j) {
  if (!j.is_number()) {
    bad_type(key, "a number");
  }
  return j.get<double>();
}

bool as_bool(const std::string& key, const Json& j) {
  if (!j.is_boolean()) {
    bad_type(key, "a boolean");
  }
  return j.get<bool>();
}

std::string as_string(const std::string& key, const Json& j) {
  if (!j.is_string()) {
    bad_type(key, "a string");
  }
  return j.get<std::string>();
}

std::int64_t as_integer(const std::string& key, const Json& j) {
  if (!j.is_number_integer()) {
    bad_type(key, "an integer");
  }
  return j.get<std::int64_t>();
}

Binding number(const char* key, double RunConfig::*member) {
  return {key,
          [key, member](RunConfig& c, const Json& j) {
            c.*member = as_number(key, j);
          },
          [member](const RunConfig& c) { return Json(c.*member); }};
}

// Binds a double nested inside the config through an accessor.
template <typename Access>
Binding nested_number(const char* key, Access access) {
  return {key,
          [key, access](RunConfig& c, const Json& j) {
            access(c) = as_number(key, j);
          },
          [access](const RunConfig& c) {
            return Json(access(const_cast<RunConfig&>(c)));
          }};
}

template <typename Access>
Binding nested_string(const char* key, Access access) {
  return {key,
          [key, access](RunConfig& c, const Json& j) {
            access(c) = as_string(key, j);
          },
          [access](const RunConfig& c) {
            return Json(access(const_cast<RunConfig&>(c)));
          }};
}

const char* behavior_name(predict::BehaviorModel b) {
  return b == predict::BehaviorModel::kSuddenStop ? "sudden_stop"
                                                  : "constant_velocity";
}

const char* growth_name(collision::GrowthKind g) {
  return g == collision::GrowthKind::kBrownian ? "brownian" : "velocity";
}

const std::vector<Binding>& bindings() {
  static const std::vector<Binding> table = {
      nested_number("frame_step_s",
                    [](RunConfig& c) -> double& { return c.parse.frame_step_s; }),
      {"feet_to_meters",
       [](RunConfig& c, const Json& j) {
         c.parse.feet_to_meters = as_bool("feet_to_meters", j);
       },
       [](const RunConfig& c) { return Json(c.parse.feet_to_meters); }},
      nested_string("column_vehicle_id",
                    [](RunConfig& c) -> std::string& {
                      return c.parse.columns.vehicle_id;
                    }),
      nested_string("column_frame",
                    [](RunConfig& c) -> std::string& {
                      return c.parse.columns.frame;
                    }),
      nested_string("column_time",
                    [](RunConfig& c) -> std::string& {
                      return c.parse.columns.time;
                    }),
      nested_string("column_x",
                    [](RunConfig& c) -> std::string& { return c.parse.columns.x; }),
      nested_string("column_y",
                    [](RunConfig& c) -> std::string& { return c.parse.columns.y; }),
      nested_string("column_class",
                    [](RunConfig& c) -> std::string& {
                      return c.parse.columns.vehicle_class;
                    }),
      nested_number("smoothing_position_s",
                    [](RunConfig& c) -> double& { return c.smoothing.position_s; }),
      nested_number("smoothing_velocity_s",
                    [](RunConfig& c) -> double& { return c.smoothing.velocity_s; }),
      nested_number("smoothing_acceleration_s",
                    [](RunConfig& c) -> double& {
                      return c.smoothing.acceleration_s;
                    }),
      nested_number("prediction_step_s",
                    [](RunConfig& c) -> double& {
                      return c.analysis.risk.prediction.step_s;
                    }),
      nested_number("horizon_s",
                    [](RunConfig& c) -> double& {
                      return c.analysis.risk.prediction.horizon_s;
                    }),
      {"behavior",
       [](RunConfig& c, const Json& j) {
         const std::string v = as_string("behavior", j);
         if (v == "constant_velocity") {
           c.analysis.risk.prediction.behavior =
               predict::BehaviorModel::kConstantVelocity;
         } else if (v == "sudden_stop") {
           c.analysis.risk.prediction.behavior =
               predict::BehaviorModel::kSuddenStop;
         } else {
           bad_type("behavior", "\"constant_velocity\" or \"sudden_stop\"");
         }
       },
       [](const RunConfig& c) {
         return Json(behavior_name(c.analysis.risk.prediction.behavior));
       }},
      nested_number("collision_interval_s",
                    [](RunConfig& c) -> double& {
                      return c.analysis.risk.collision_interval_s;
                    }),
      number("escape_parameter", &RunConfig::escape_parameter),
      {"escape_reading",
       [](RunConfig& c, const Json& j) {
         const std::string v = as_string("escape_reading", j);
         if (v != "time_constant_s" && v != "rate_per_s" && v != "none") {
           bad_type("escape_reading",
                    "\"time_constant_s\", \"rate_per_s\" or \"none\"");
         }
         c.escape_reading = v;
       },
       [](const RunConfig& c) { return Json(c.escape_reading); }},
      nested_number("sigma0_m",
                    [](RunConfig& c) -> double& {
                      return c.analysis.risk.collision.growth.sigma0;
                    }),
      nested_number("sigma_lat_m",
                    [](RunConfig& c) -> double& {
                      return c.analysis.risk.collision.sigma_lat;
                    }),
      nested_number("velocity_factor",
                    [](RunConfig& c) -> double& {
                      return c.analysis.risk.collision.growth.velocity_factor;
                    }),
      nested_number("diffusion_m2_per_s",
                    [](RunConfig& c) -> double& {
                      return c.analysis.risk.collision.growth.diffusion;
                    }),
      {"growth_model",
       [](RunConfig& c, const Json& j) {
         const std::string v = as_string("growth_model", j);
         if (v == "velocity") {
           c.analysis.risk.collision.growth.kind = collision::GrowthKind::kVelocity;
         } else if (v == "brownian") {
           c.analysis.risk.collision.growth.kind = collision::GrowthKind::kBrownian;
         } else {
           bad_type("growth_model", "\"velocity\" or \"brownian\"");
         }
       },
       [](const RunConfig& c) {
         return Json(growth_name(c.analysis.risk.collision.growth.kind));
       }},
      nested_number("cross_section_m2",
                    [](RunConfig& c) -> double& {
                      return c.analysis.risk.collision.cross_section;
                    }),
      {"pmm_enabled",
       [](RunConfig& c, const Json& j) {
         c.analysis.risk.collision.pmm.enabled = as_bool("pmm_enabled", j);
       },
       [](const RunConfig& c) {
         return Json(c.analysis.risk.collision.pmm.enabled);
       }},
      {"pmm_components",
       [](RunConfig& c, const Json& j) {
         c.analysis.risk.collision.pmm.components =
             static_cast<int>(as_integer("pmm_components", j));
       },
       [](const RunConfig& c) {
         return Json(c.analysis.risk.collision.pmm.components);
       }},
      nested_number("pmm_width_factor",
                    [](RunConfig& c) -> double& {
                      return c.analysis.risk.collision.pmm.width_factor;
                    }),
      nested_number("pmm_spacing_sigma",
                    [](RunConfig& c) -> double& {
                      return c.analysis.risk.collision.pmm.spacing_sigma;
                    }),
      nested_number("sensor_range_m",
                    [](RunConfig& c) -> double& { return c.analysis.sensor_range_m; }),
      nested_number("lane_threshold_m",
                    [](RunConfig& c) -> double& {
                      return c.analysis.lane_threshold_m;
                    }),
      nested_number("size_correction_m",
                    [](RunConfig& c) -> double& {
                      return c.analysis.size_correction_m;
                    }),
      nested_number("th_min_velocity_mps",
                    [](RunConfig& c) -> double& {
                      return c.analysis.th_min_velocity_mps;
                    }),
      nested_number("ttc_min_closing_mps",
                    [](RunConfig& c) -> double& {
                      return c.analysis.ttc_min_closing_mps;
                    }),
      {"th_bins_s",
       [](RunConfig& c, const Json& j) {
         if (!j.is_array() || j.size() != analysis::kBinCount) {
           bad_type("th_bins_s", "an array of four [low, high] pairs");
         }
         for (std::size_t i = 0; i < analysis::kBinCount; ++i) {
           const Json& pair = j[i];
           if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
               !pair[1].is_number()) {
             bad_type("th_bins_s", "an array of four [low, high] pairs");
           }
           c.th_bins[i] = {pair[0].get<double>(), pair[1].get<double>()};
         }
       },
       [](const RunConfig& c) {
         Json arr = Json::array();
         for (const auto& iv : c.th_bins) {
           arr.push_back({iv.low, iv.high});
         }
         return arr;
       }},
      {"reference_counts",
       [](RunConfig& c, const Json& j) {
         if (j.is_null()) {
           c.reference_counts.reset();
           return;
         }
         try {
           c.reference_counts = analysis::counts_from_json(j);
         } catch (const Error& e) {
           throw Error(ErrorKind::kConfig, e.what());
         }
       },
       [](const RunConfig& c) {
         return c.reference_counts ? Json(*c.reference_counts) : Json(nullptr);
       }},
      number("cell_size_m", &RunConfig::cell_size_m),
      nested_number("velocity_bin_mps",
                    [](RunConfig& c) -> double& {
                      return c.statistics_bins.velocity;
                    }),
      nested_number("acceleration_bin_mps2",
                    [](RunConfig& c) -> double& {
                      return c.statistics_bins.acceleration;
                    }),
      nested_number("gap_bin_m",
                    [](RunConfig& c) -> double& { return c.statistics_bins.gap; }),
      nested_number("relative_velocity_bin_mps",
                    [](RunConfig& c) -> double& {
                      return c.statistics_bins.relative_velocity;
                    }),
      {"metric",
       [](RunConfig& c, const Json& j) {
         if (j.is_null()) {
           c.metric.reset();
           return;
         }
         c.metric = analysis::parse_metric(as_string("metric", j));
       },
       [](const RunConfig& c) {
         return c.metric ? Json(analysis::to_string(*c.metric)) : Json(nullptr);
       }},
      {"threads",
       [](RunConfig& c, const Json& j) {
         const std::int64_t n = as_integer("threads", j);
         if (n < 0) {
           bad_type("threads", "a non-negative integer");
         }
         c.analysis.threads = static_cast<unsigned>(n);
       },
       [](const RunConfig& c) { return Json(c.analysis.threads); }},
  };
  return table;
}

void require_positive(double v, const char* key) {
  if (!(v > 0.0)) {
    throw Error(ErrorKind::kConfig,
                std::string("config key '") + key + "' must be positive");
  }
}

}  // namespace

RunConfig config_from_json(const Json& json) {
  if (!json.is_object()) {
    throw Error(ErrorKind::kConfig, "config must be a JSON object");
  }
  RunConfig config;
  for (const auto& [key, value] : json.items()) {
    const auto& table = bindings();
    const auto it = std::find_if(table.begin(), table.end(),
                                 [&](const Binding& b) { return key == b.key; });
    if (it == table.end()) {
      throw Error(ErrorKind::kConfig, "unknown config key '" + key + "'");
    }
    it->set(config, value);
  }
  finalize_config(config);
  return config;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorKind::kIo, "cannot open config file " + path);
  }
  Json json;
  try {
    json = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kConfig,
                "config file " + path + " is not valid JSON: " + e.what());
  }
  return config_from_json(json);
}

analysis::Json config_to_json(const RunConfig& config) {
  Json j = Json::object();
  for (const auto& b : bindings()) {
    j[b.key] = b.get(config);
  }
  return j;
}

void finalize_config(RunConfig& config) {
  try {
    auto& escape = config.analysis.risk.escape;
    if (config.escape_reading == "time_constant_s") {
      escape = survival::EscapeRate::from_time_constant(config.escape_parameter);
    } else if (config.escape_reading == "rate_per_s") {
      escape = survival::EscapeRate::from_rate(config.escape_parameter);
    } else {
      escape = survival::EscapeRate::none();
    }
    require_positive(config.parse.frame_step_s, "frame_step_s");
    require_positive(config.smoothing.position_s, "smoothing_position_s");
    require_positive(config.smoothing.velocity_s, "smoothing_velocity_s");
    require_positive(config.smoothing.acceleration_s, "smoothing_acceleration_s");
    require_positive(config.cell_size_m, "cell_size_m");
    require_positive(config.statistics_bins.velocity, "velocity_bin_mps");
    require_positive(config.statistics_bins.acceleration, "acceleration_bin_mps2");
    require_positive(config.statistics_bins.gap, "gap_bin_m");
    require_positive(config.statistics_bins.relative_velocity,
                     "relative_velocity_bin_mps");
    config.analysis.validate();
    analysis::bin_fixed({}, config.th_bins);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::kConfig) {
      throw;
    }
    throw Error(ErrorKind::kConfig, std::string("invalid config: ") + e.what());
  }
}

}  // namespace rsd::cli
