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

#include "rsd/survival/survival.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rsd/error.hpp"

namespace rsd::survival {
namespace {

void require_step(double step) {
  if (!(step > 0.0) || !std::isfinite(step)) {
    throw Error(ErrorKind::kParameter, "integration step must be positive");
  }
}

// Each grid interval holds the mean of its two end samples; within it the
// survival decays exactly, so constant profiles integrate without error.
double interval_rate(std::span<const double> critical, std::size_t k) {
  return 0.5 * (critical[k] + critical[k + 1]);
}

}  // namespace

EscapeRate EscapeRate::from_time_constant(double tau0_s) {
  if (!(tau0_s > 0.0)) {
    throw Error(ErrorKind::kParameter, "escape time constant must be positive");
  }
  return EscapeRate(std::isinf(tau0_s) ? 0.0 : 1.0 / tau0_s);
}

EscapeRate EscapeRate::from_rate(double rate_per_s) {
  if (!(rate_per_s >= 0.0) || !std::isfinite(rate_per_s)) {
    throw Error(ErrorKind::kParameter,
                "escape rate must be finite and non-negative");
  }
  return EscapeRate(rate_per_s);
}

RateProfile empty_profile(std::size_t n, double step) {
  require_step(step);
  RateProfile p;
  p.step = step;
  p.critical.assign(n, 0.0);
  p.curvature.assign(n, 0.0);
  return p;
}

std::vector<double> collision_rate(std::span<const double> probability,
                                   double dt) {
  if (!(dt > 0.0)) {
    throw Error(ErrorKind::kParameter, "collision interval must be positive");
  }
  std::vector<double> rate(probability.size());
  for (std::size_t k = 0; k < probability.size(); ++k) {
    const double p = probability[k];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorKind::kParameter,
                  "collision probability outside [0, 1] at sample " +
                      std::to_string(k));
    }
    rate[k] = p / dt;
  }
  return rate;
}

void add_partner(RateProfile& profile, core::VehicleId id,
                 std::vector<double> rate) {
  if (rate.size() != profile.critical.size()) {
    throw Error(ErrorKind::kAlignment,
                "partner " + std::to_string(id) + " rate has " +
                    std::to_string(rate.size()) + " samples, expected " +
                    std::to_string(profile.critical.size()));
  }
  for (std::size_t k = 0; k < rate.size(); ++k) {
    if (!(rate[k] >= 0.0)) {
      throw Error(ErrorKind::kParameter, "negative collision rate");
    }
    profile.critical[k] += rate[k];
  }
  profile.partner_ids.push_back(id);
  profile.partner_rates.push_back(std::move(rate));
}

std::vector<double> survival_function(std::span<const double> critical,
                                      double step, EscapeRate escape) {
  require_step(step);
  std::vector<double> s(critical.size());
  double exponent = 0.0;
  for (std::size_t k = 0; k < critical.size(); ++k) {
    s[k] = std::exp(-exponent);
    if (k + 1 < critical.size()) {
      exponent += (escape.rate() + interval_rate(critical, k)) * step;
    }
  }
  return s;
}

std::vector<double> survival_function(const RateProfile& rate,
                                      EscapeRate escape) {
  return survival_function(rate.critical, rate.step, escape);
}

double integrated_risk(std::span<const double> critical, double step,
                       EscapeRate escape) {
  require_step(step);
  for (const double rho : critical) {
    if (!(rho >= 0.0)) {
      throw Error(ErrorKind::kParameter, "negative critical rate");
    }
  }
  double risk = 0.0;
  double exponent = 0.0;
  for (std::size_t k = 0; k + 1 < critical.size(); ++k) {
    const double rho = interval_rate(critical, k);
    const double lambda = escape.rate() + rho;
    if (rho > 0.0) {
      risk += std::exp(-exponent) * (rho / lambda) *
              -std::expm1(-lambda * step);
    }
    exponent += lambda * step;
  }
  return std::clamp(risk, 0.0, 1.0);
}

double integrated_risk(const RateProfile& rate, EscapeRate escape) {
  return integrated_risk(rate.critical, rate.step, escape);
}

}  // namespace rsd::survival
