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

#include "rsd/collision/uncertainty.hpp"

#include <cmath>
#include <string>

#include "rsd/error.hpp"

namespace rsd::collision {

void UncertaintyGrowth::validate() const {
  if (!(sigma0 > 0.0)) {
    throw Error(ErrorKind::kParameter, "sigma0 must be positive");
  }
  if (!(diffusion >= 0.0)) {
    throw Error(ErrorKind::kParameter, "diffusion D must be non-negative");
  }
  if (!(velocity_factor >= 0.0)) {
    throw Error(ErrorKind::kParameter, "velocity factor c must be non-negative");
  }
}

std::vector<double> sigma_growth(const UncertaintyGrowth& growth,
                                 std::span<const double> velocity, double ds) {
  growth.validate();
  if (!(ds > 0.0)) {
    throw Error(ErrorKind::kParameter, "prediction step must be positive");
  }
  for (std::size_t k = 0; k < velocity.size(); ++k) {
    if (velocity[k] < 0.0) {
      throw Error(ErrorKind::kParameter,
                  "negative velocity at sample " + std::to_string(k));
    }
  }

  std::vector<double> sigma(velocity.size());
  if (sigma.empty()) {
    return sigma;
  }
  switch (growth.kind) {
    case GrowthKind::kBrownian: {
      const double var0 = growth.sigma0 * growth.sigma0;
      for (std::size_t k = 0; k < sigma.size(); ++k) {
        sigma[k] = std::sqrt(var0 + growth.diffusion * static_cast<double>(k) * ds);
      }
      break;
    }
    case GrowthKind::kVelocity: {
      sigma[0] = growth.sigma0;
      for (std::size_t k = 1; k < sigma.size(); ++k) {
        sigma[k] = sigma[k - 1] + growth.velocity_factor * velocity[k - 1] * ds;
      }
      break;
    }
  }
  return sigma;
}

}  // namespace rsd::collision
