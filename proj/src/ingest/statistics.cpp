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

#include "rsd/ingest/statistics.hpp"

#include <cmath>
#include <map>

#include "rsd/error.hpp"

namespace rsd::ingest {

std::string to_string(StatVariable variable) {
  switch (variable) {
    case StatVariable::kVelocity: return "v";
    case StatVariable::kAcceleration: return "a";
    case StatVariable::kGap: return "-dl";
    case StatVariable::kRelativeVelocity: return "dv";
  }
  return "?";
}

HistogramStats make_histogram(StatVariable variable,
                              std::span<const double> samples,
                              double bin_width) {
  if (!(bin_width > 0.0)) {
    throw Error(ErrorKind::kParameter, "histogram bin width must be positive");
  }
  HistogramStats h;
  h.variable = variable;
  h.bin_width = bin_width;
  h.sample_count = samples.size();
  if (samples.empty()) {
    return h;
  }

  // The small offset keeps exact multiples such as 0.3 / 0.1 in their own bin.
  std::map<long long, std::size_t> counts;
  double sum = 0.0;
  for (const double x : samples) {
    counts[static_cast<long long>(std::floor(x / bin_width + 1e-9))]++;
    sum += x;
  }
  h.mean = sum / static_cast<double>(samples.size());
  double sq = 0.0;
  for (const double x : samples) {
    sq += (x - h.mean) * (x - h.mean);
  }
  h.stddev = std::sqrt(sq / static_cast<double>(samples.size()));

  const long long k_lo = counts.begin()->first;
  const long long k_hi = counts.rbegin()->first;
  const double total = static_cast<double>(samples.size());
  double running = 0.0;
  for (long long k = k_lo; k <= k_hi; ++k) {
    const auto it = counts.find(k);
    const double mass =
        it == counts.end() ? 0.0 : static_cast<double>(it->second) / total;
    h.bin_edges.push_back(static_cast<double>(k) * bin_width);
    h.pmf.push_back(mass);
    running += mass;
    h.cdf.push_back(running);
  }
  h.bin_edges.push_back(static_cast<double>(k_hi + 1) * bin_width);
  return h;
}

std::vector<HistogramStats> kinematics_statistics(
    const TrajectoryDataset& dataset, std::span<const FrontPairSample> pairs,
    const StatisticsBinWidths& widths) {
  if (dataset.empty() || dataset.sample_count() == 0) {
    throw Error(ErrorKind::kEmptyStatistics,
                "dataset has no samples to compute statistics on");
  }
  std::vector<double> v, a, gap, dv;
  v.reserve(dataset.sample_count());
  a.reserve(dataset.sample_count());
  for (const auto& track : dataset.vehicles()) {
    for (const auto& s : track.states) {
      v.push_back(s.velocity);
      a.push_back(s.acceleration);
    }
  }
  for (const auto& p : pairs) {
    gap.push_back(-p.delta_l);
    dv.push_back(p.delta_v);
  }
  return {
      make_histogram(StatVariable::kVelocity, v, widths.velocity),
      make_histogram(StatVariable::kAcceleration, a, widths.acceleration),
      make_histogram(StatVariable::kGap, gap, widths.gap),
      make_histogram(StatVariable::kRelativeVelocity, dv,
                     widths.relative_velocity),
  };
}

}  // namespace rsd::ingest
