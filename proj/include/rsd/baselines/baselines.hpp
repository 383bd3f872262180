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

#include <optional>

namespace rsd::baselines {

enum class BaselineKind { kTimeHeadway, kTimeToCollision };

/// A defined result has a finite positive value; an undefined one has none
/// and an inverse of zero.
struct BaselineResult {
  BaselineKind kind = BaselineKind::kTimeHeadway;
  std::optional<double> value;  ///< s

  bool defined() const { return value.has_value(); }
  double inverse() const { return value ? 1.0 / *value : 0.0; }
};

inline constexpr double kDefaultSizeCorrection = 4.0;  ///< m
inline constexpr double kDefaultMinVelocity = 0.1;     ///< m/s
inline constexpr double kDefaultMinClosingSpeed = 1e-6;  ///< m/s

/// -(dl + size_corr) / v1, defined iff the corrected gap is positive and
/// v1 > v_min.
BaselineResult time_headway(double delta_l, double v1,
                            double size_corr = kDefaultSizeCorrection,
                            double v_min = kDefaultMinVelocity);

/// -(dl + size_corr) / dv, defined iff the corrected gap is positive and
/// dv > 0.
BaselineResult time_to_collision(double delta_l, double delta_v,
                                 double size_corr = kDefaultSizeCorrection,
                                 double min_closing = kDefaultMinClosingSpeed);

}  // namespace rsd::baselines
