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

#include "rsd/collision/footprint.hpp"

#include <algorithm>
#include <cmath>

#include "rsd/error.hpp"

namespace rsd::collision {
namespace {

// Beyond this many combined standard deviations the overlap is below 1e-31
// of its peak and is treated as zero.
constexpr double kGateSigmas = 12.0;

template <typename Fn>
void for_each_component(const GaussianFootprint& fp, Fn&& fn) {
  if (fp.components.empty()) {
    fn(1.0, fp.mean, fp.covariance);
    return;
  }
  for (const auto& c : fp.components) {
    fn(c.weight, c.mean, c.covariance);
  }
}

}  // namespace

double GaussianFootprint::density(const Vec2& x) const {
  double sum = 0.0;
  for_each_component(*this, [&](double w, const Vec2& m, const Mat2& cov) {
    sum += w * gaussian_2d_density(x, m, cov);
  });
  return sum;
}

GaussianFootprint make_footprint(const Vec2& mean, double sigma_lon,
                                 double sigma_lat, double heading) {
  GaussianFootprint fp;
  fp.mean = mean;
  fp.covariance =
      rotate_covariance(sigma_lon * sigma_lon, sigma_lat * sigma_lat, heading);
  fp.max_variance = max_eigenvalue(fp.covariance);
  return fp;
}

void CollisionConfig::validate() const {
  if (!(sigma_lat > 0.0)) {
    throw Error(ErrorKind::kParameter, "sigma_lat must be positive");
  }
  if (!(cross_section > 0.0)) {
    throw Error(ErrorKind::kParameter, "cross section A_c must be positive");
  }
  growth.validate();
  pmm.validate();
  if (pmm.enabled) {
    verify_pmm_unimodal(pmm);
  }
}

double collision_probability(const GaussianFootprint& f1,
                             const GaussianFootprint& f2,
                             double cross_section) {
  const double gap = (f2.mean - f1.mean).norm() - f1.extent - f2.extent;
  if (gap > kGateSigmas * std::sqrt(f1.max_variance + f2.max_variance)) {
    return 0.0;
  }
  double overlap = 0.0;
  for_each_component(f1, [&](double w1, const Vec2& m1, const Mat2& c1) {
    for_each_component(f2, [&](double w2, const Vec2& m2, const Mat2& c2) {
      overlap += w1 * w2 * gaussian_2d_overlap(m1, c1, m2, c2);
    });
  });
  return std::clamp(cross_section * overlap, 0.0, 1.0);
}

}  // namespace rsd::collision
