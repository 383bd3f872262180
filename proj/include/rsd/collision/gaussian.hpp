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

#include <Eigen/Core>

#include "rsd/core/path.hpp"

namespace rsd::collision {

using core::Vec2;
using Mat2 = Eigen::Matrix2d;

double gaussian_1d_density(double x, double mean, double sigma);

/// Integral of the product of two 1D normal densities over the real line,
/// i.e. N(mu2; mu1, sigma1^2 + sigma2^2). Unit 1/m.
double gaussian_1d_overlap(double mu1, double sigma1, double mu2,
                           double sigma2);

/// R(heading) * diag(var_lon, var_lat) * R(heading)^T.
Mat2 rotate_covariance(double var_lon, double var_lat, double heading);

double gaussian_2d_density(const Vec2& x, const Vec2& mean, const Mat2& cov);

/// Integral of the product of two bivariate normal densities,
/// |2 pi (S1 + S2)|^-1/2 exp(-1/2 d^T (S1 + S2)^-1 d) with d = mu2 - mu1.
/// Unit 1/m^2. Exactly symmetric in its two arguments.
///
/// Throws Error(kNumericalDegeneracy) when S1 + S2 is not positive definite
/// or its condition number exceeds 1e12.
double gaussian_2d_overlap(const Vec2& mu1, const Mat2& cov1, const Vec2& mu2,
                           const Mat2& cov2);

/// Largest eigenvalue of a symmetric 2x2 matrix.
double max_eigenvalue(const Mat2& m);

}  // namespace rsd::collision
