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

#include "rsd/collision/gaussian.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "rsd/error.hpp"

namespace rsd::collision {
namespace {

constexpr double kMaxCondition = 1e12;

void require_positive_sigma(double sigma, const char* name) {
  if (!(sigma > 0.0)) {
    throw Error(ErrorKind::kParameter,
                std::string(name) + " must be positive, got " +
                    std::to_string(sigma));
  }
}

struct SymmetricEigen {
  double min;
  double max;
};

SymmetricEigen eigenvalues(double a, double b, double d) {
  const double half_trace = 0.5 * (a + d);
  const double half_diff = 0.5 * (a - d);
  const double root = std::sqrt(half_diff * half_diff + b * b);
  return {half_trace - root, half_trace + root};
}

}  // namespace

double gaussian_1d_density(double x, double mean, double sigma) {
  const double z = (x - mean) / sigma;
  return std::exp(-0.5 * z * z) / (std::sqrt(2.0 * std::numbers::pi) * sigma);
}

double gaussian_1d_overlap(double mu1, double sigma1, double mu2,
                           double sigma2) {
  require_positive_sigma(sigma1, "sigma1");
  require_positive_sigma(sigma2, "sigma2");
  const double var = sigma1 * sigma1 + sigma2 * sigma2;
  const double d = mu2 - mu1;
  return std::exp(-d * d / (2.0 * var)) /
         std::sqrt(2.0 * std::numbers::pi * var);
}

Mat2 rotate_covariance(double var_lon, double var_lat, double heading) {
  if (!(var_lon > 0.0) || !(var_lat > 0.0)) {
    throw Error(ErrorKind::kParameter, "covariance variances must be positive");
  }
  const double c = std::cos(heading);
  const double s = std::sin(heading);
  Mat2 cov;
  cov(0, 0) = c * c * var_lon + s * s * var_lat;
  cov(1, 1) = s * s * var_lon + c * c * var_lat;
  cov(0, 1) = cov(1, 0) = c * s * (var_lon - var_lat);
  return cov;
}

double gaussian_2d_density(const Vec2& x, const Vec2& mean, const Mat2& cov) {
  const double det = cov(0, 0) * cov(1, 1) - cov(0, 1) * cov(1, 0);
  const Vec2 d = x - mean;
  const double q = (cov(1, 1) * d.x() * d.x() - 2.0 * cov(0, 1) * d.x() * d.y() +
                    cov(0, 0) * d.y() * d.y()) /
                   det;
  return std::exp(-0.5 * q) / (2.0 * std::numbers::pi * std::sqrt(det));
}

double gaussian_2d_overlap(const Vec2& mu1, const Mat2& cov1, const Vec2& mu2,
                           const Mat2& cov2) {
  const double a = cov1(0, 0) + cov2(0, 0);
  const double b = cov1(0, 1) + cov2(0, 1);
  const double d = cov1(1, 1) + cov2(1, 1);
  const auto eig = eigenvalues(a, b, d);
  if (!(eig.min > 0.0) || eig.max / eig.min > kMaxCondition) {
    throw Error(ErrorKind::kNumericalDegeneracy,
                "combined covariance is singular or ill-conditioned");
  }
  const double det = a * d - b * b;
  const double dx = mu2.x() - mu1.x();
  const double dy = mu2.y() - mu1.y();
  const double q = (d * dx * dx - 2.0 * b * dx * dy + a * dy * dy) / det;
  return std::exp(-0.5 * q) / (2.0 * std::numbers::pi * std::sqrt(det));
}

double max_eigenvalue(const Mat2& m) {
  return eigenvalues(m(0, 0), m(0, 1), m(1, 1)).max;
}

}  // namespace rsd::collision
