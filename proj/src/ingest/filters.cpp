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

#include "rsd/ingest/filters.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "rsd/error.hpp"

namespace rsd::ingest {

std::vector<double> ema_smooth_bidirectional(std::span<const double> series,
                                             double width_s, double dt_s) {
  if (!(width_s > 0.0) || !(dt_s > 0.0)) {
    throw Error(ErrorKind::kParameter,
                "EMA needs positive width and step, got T=" +
                    std::to_string(width_s) + " dt=" + std::to_string(dt_s));
  }
  if (series.empty()) {
    throw Error(ErrorKind::kParameter, "EMA needs at least one sample");
  }
  const double lambda = std::min(1.0, dt_s / width_s);

  // The forward pass runs on past the end over a tail holding the last
  // sample, until its transient is below rounding, so the backward pass
  // starts from a settled state and the response is mirror symmetric.
  const std::size_t n = series.size();
  std::size_t tail = 0;
  if (lambda < 1.0) {
    tail = static_cast<std::size_t>(
        std::ceil(std::log(1e-18) / std::log1p(-lambda)));
  }
  std::vector<double> out(series.begin(), series.end());
  out.resize(n + tail, series.back());
  for (std::size_t i = 1; i < out.size(); ++i) {
    out[i] = out[i - 1] + lambda * (out[i] - out[i - 1]);
  }
  for (std::size_t i = out.size() - 1; i-- > 0;) {
    out[i] = out[i + 1] + lambda * (out[i] - out[i + 1]);
  }
  out.resize(n);
  return out;
}

std::vector<double> differentiate(std::span<const double> series, double dt_s) {
  if (series.size() < 2) {
    throw Error(ErrorKind::kParameter,
                "differentiation needs at least 2 samples, got " +
                    std::to_string(series.size()));
  }
  if (!(dt_s > 0.0)) {
    throw Error(ErrorKind::kParameter, "differentiation step must be positive");
  }
  const std::size_t n = series.size();
  std::vector<double> out(n);
  out.front() = (series[1] - series[0]) / dt_s;
  out.back() = (series[n - 1] - series[n - 2]) / dt_s;
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out[i] = (series[i + 1] - series[i - 1]) / (2.0 * dt_s);
  }
  return out;
}

}  // namespace rsd::ingest
