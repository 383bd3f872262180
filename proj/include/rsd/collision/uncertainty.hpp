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

namespace rsd::collision {

enum class GrowthKind {
  kBrownian,  ///< sigma(s)^2 = sigma0^2 + D s
  kVelocity,  ///< sigma(s + ds) = sigma(s) + c v(s) ds
};

/// Longitudinal position uncertainty over prediction time.
struct UncertaintyGrowth {
  GrowthKind kind = GrowthKind::kVelocity;
  double sigma0 = 2.0 / 3.0;      ///< m; 6 sigma0 spans a 4 m car
  double diffusion = 0.25;        ///< D, m^2/s (Brownian only)
  double velocity_factor = 0.1;   ///< c, dimensionless (velocity only)

  /// Throws Error(kParameter) on sigma0 <= 0, D < 0 or c < 0.
  void validate() const;
};

/// sigma_l at every sample of `velocity`, which is spaced `ds` apart.
/// The result is non-decreasing and starts at sigma0. Throws
/// Error(kParameter) on a negative velocity.
std::vector<double> sigma_growth(const UncertaintyGrowth& growth,
                                 std::span<const double> velocity, double ds);

}  // namespace rsd::collision
