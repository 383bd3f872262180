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

#include <span>
#include <vector>

#include "rsd/core/scene.hpp"

namespace rsd::survival {

/// Constant escape rate eta (1/s). Zero disables escape.
class EscapeRate {
 public:
  /// eta = 1 / tau0. tau0 = +inf disables escape. Throws Error(kParameter)
  /// unless tau0 > 0.
  static EscapeRate from_time_constant(double tau0_s);
  /// Throws Error(kParameter) unless rate >= 0 and finite.
  static EscapeRate from_rate(double rate_per_s);
  static EscapeRate none() { return EscapeRate(0.0); }

  double rate() const { return rate_; }

 private:
  explicit EscapeRate(double rate) : rate_(rate) {}
  double rate_;
};

/// Critical event rates on the prediction grid s_k = k * step.
struct RateProfile {
  double step = 0.1;
  std::vector<double> critical;  ///< sum over partners plus `curvature`, 1/s
  std::vector<core::VehicleId> partner_ids;
  std::vector<std::vector<double>> partner_rates;
  /// Structural slot for path-curvature risk; always zero here.
  std::vector<double> curvature;

  std::size_t size() const { return critical.size(); }
};

/// Zero-rate profile with n samples.
RateProfile empty_profile(std::size_t n, double step);

/// P / dt per sample. Throws Error(kParameter) unless dt > 0 and every
/// probability lies in [0, 1].
std::vector<double> collision_rate(std::span<const double> probability,
                                   double dt);

/// Adds one partner's rate curve. Throws Error(kAlignment) on a length
/// mismatch and Error(kParameter) on a negative rate.
void add_partner(RateProfile& profile, core::VehicleId id,
                 std::vector<double> rate);

/// S(s_k) = exp(-sum_{j<k} (eta + rbar_j) step); S(0) = 1, where
/// rbar_j = (rate_j + rate_{j+1}) / 2 is the mean rate on step j.
std::vector<double> survival_function(std::span<const double> critical,
                                      double step, EscapeRate escape);
std::vector<double> survival_function(const RateProfile& rate,
                                      EscapeRate escape);

/// Integral of rate * S over [0, s_max] where s_max = (n - 1) * step, with
/// each step holding its mean rate rbar_k. Each step contributes
/// S_k * rbar_k / lambda_k * (1 - exp(-lambda_k step)), lambda_k = eta +
/// rbar_k, which is exact for constant rates. The result lies in [0, 1].
double integrated_risk(std::span<const double> critical, double step,
                       EscapeRate escape);
double integrated_risk(const RateProfile& rate, EscapeRate escape);

}  // namespace rsd::survival
