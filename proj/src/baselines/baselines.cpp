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

#include "rsd/baselines/baselines.hpp"

#include <cmath>

namespace rsd::baselines {

BaselineResult time_headway(double delta_l, double v1, double size_corr,
                            double v_min) {
  BaselineResult r{BaselineKind::kTimeHeadway, std::nullopt};
  const double gap = -(delta_l + size_corr);
  if (gap > 0.0 && v1 > v_min) {
    const double th = gap / v1;
    if (std::isfinite(th)) {
      r.value = th;
    }
  }
  return r;
}

BaselineResult time_to_collision(double delta_l, double delta_v,
                                 double size_corr, double min_closing) {
  BaselineResult r{BaselineKind::kTimeToCollision, std::nullopt};
  const double gap = -(delta_l + size_corr);
  if (gap > 0.0 && delta_v > min_closing) {
    const double ttc = gap / delta_v;
    if (std::isfinite(ttc)) {
      r.value = ttc;
    }
  }
  return r;
}

}  // namespace rsd::baselines
