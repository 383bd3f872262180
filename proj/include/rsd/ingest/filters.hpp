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

namespace rsd::ingest {

/// Zero-phase exponential moving average.
///
/// A causal EMA with factor lambda = clamp(dt / width, (0, 1]) runs left to
/// right, then a second EMA runs right to left over the forward result. Each
/// pass is seeded with the first sample it sees.
std::vector<double> ema_smooth_bidirectional(std::span<const double> series,
                                             double width_s, double dt_s);

/// Central differences in the interior, one-sided at both ends.
std::vector<double> differentiate(std::span<const double> series, double dt_s);

}  // namespace rsd::ingest
