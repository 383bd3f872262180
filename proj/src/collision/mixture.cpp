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

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "rsd/collision/footprint.hpp"
#include "rsd/error.hpp"

namespace rsd::collision {
namespace {

const double kFwhm = 2.0 * std::sqrt(2.0 * std::numbers::ln2);

// Unimodality scan: the profile is evaluated on [-kScanHalfWidth, +] sigma.
constexpr double kScanHalfWidth = 8.0;
constexpr double kScanStep = 5e-4;

}  // namespace

void PmmConfig::validate() const {
  if (components < 1 || components % 2 == 0) {
    throw Error(ErrorKind::kParameter,
                "PMM component count must be odd and positive, got " +
                    std::to_string(components));
  }
  if (!(width_factor > 1.0)) {
    throw Error(ErrorKind::kParameter, "PMM width factor m_f must exceed 1");
  }
  if (!(spacing_sigma > 0.0)) {
    throw Error(ErrorKind::kParameter, "PMM spacing must be positive");
  }
}

PmmLayout pmm_layout(const PmmConfig& config) {
  config.validate();
  const int n = config.components;
  const int half = (n - 1) / 2;
  PmmLayout layout;
  layout.component_sigma =
      config.width_factor * kFwhm / static_cast<double>(n);
  const double delta = config.spacing_sigma * layout.component_sigma;
  for (int k = -half; k <= half; ++k) {
    layout.offsets.push_back(static_cast<double>(k) * delta);
  }

  // w_k = f(mu_k) f(mu) / sum_j f(mu_j) f_j(mu), so the mixture equals the
  // plain profile at its center.
  const double peak = gaussian_1d_density(0.0, 0.0, 1.0);
  double denom = 0.0;
  for (const double o : layout.offsets) {
    denom += gaussian_1d_density(o, 0.0, 1.0) *
             gaussian_1d_density(0.0, o, layout.component_sigma);
  }
  for (const double o : layout.offsets) {
    layout.weights.push_back(gaussian_1d_density(o, 0.0, 1.0) * peak / denom);
  }
  return layout;
}

double pmm_profile(const PmmLayout& layout, double x) {
  double sum = 0.0;
  for (std::size_t k = 0; k < layout.offsets.size(); ++k) {
    sum += layout.weights[k] *
           gaussian_1d_density(x, layout.offsets[k], layout.component_sigma);
  }
  return sum;
}

bool pmm_is_unimodal(const PmmLayout& layout) {
  const auto steps = static_cast<long>(2.0 * kScanHalfWidth / kScanStep);
  int maxima = 0;
  double prev2 = pmm_profile(layout, -kScanHalfWidth);
  double prev1 = pmm_profile(layout, -kScanHalfWidth + kScanStep);
  for (long i = 2; i <= steps; ++i) {
    const double x = -kScanHalfWidth + static_cast<double>(i) * kScanStep;
    const double cur = pmm_profile(layout, x);
    if (prev1 > prev2 && prev1 > cur) {
      ++maxima;
    }
    prev2 = prev1;
    prev1 = cur;
  }
  return maxima == 1;
}

void verify_pmm_unimodal(const PmmConfig& config) {
  if (!pmm_is_unimodal(pmm_layout(config))) {
    throw Error(ErrorKind::kParameter,
                "PMM profile has more than one local maximum; increase m_f "
                "or reduce the spacing");
  }
}

GaussianFootprint build_pmm(const Vec2& mean, double sigma_lon,
                            double sigma_lat, double heading,
                            const core::Path& path, double center_arclength,
                            const PmmLayout& layout) {
  GaussianFootprint fp = make_footprint(mean, sigma_lon, sigma_lat, heading);
  if (layout.offsets.size() <= 1) {
    return fp;
  }
  const core::Vec2 center = core::pose_at_arclength(path, center_arclength).position;
  const double sigma_k = layout.component_sigma * sigma_lon;
  const double var_k = sigma_k * sigma_k;
  const double var_lat = sigma_lat * sigma_lat;
  fp.components.reserve(layout.offsets.size());
  fp.max_variance = 0.0;
  for (std::size_t k = 0; k < layout.offsets.size(); ++k) {
    MixtureComponent c;
    c.weight = layout.weights[k];
    if (layout.offsets[k] == 0.0) {
      c.mean = mean;
      c.covariance = rotate_covariance(var_k, var_lat, heading);
    } else {
      const core::Pose pose = core::pose_at_arclength(
          path, center_arclength + layout.offsets[k] * sigma_lon);
      c.mean = mean + (pose.position - center);
      c.covariance = rotate_covariance(var_k, var_lat, pose.heading);
    }
    fp.extent = std::max(fp.extent, (c.mean - mean).norm());
    fp.max_variance = std::max(fp.max_variance, max_eigenvalue(c.covariance));
    fp.components.push_back(std::move(c));
  }
  return fp;
}

GaussianFootprint build_pmm(const Vec2& mean, double sigma_lon,
                            double sigma_lat, double heading,
                            const core::Path& path, double center_arclength,
                            const PmmConfig& config) {
  return build_pmm(mean, sigma_lon, sigma_lat, heading, path, center_arclength,
                   pmm_layout(config));
}

}  // namespace rsd::collision
