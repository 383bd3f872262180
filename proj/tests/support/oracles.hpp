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

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <vector>

#include "rsd/core/path.hpp"

// Reference computations that share no code with the library.
namespace rsd::testing {

using core::Vec2;

/// Bivariate normal density from the raw formula with an explicit inverse.
inline double normal_pdf_2d(double x, double y, double mx, double my,
                            double sxx, double sxy, double syy) {
  const double det = sxx * syy - sxy * sxy;
  const double dx = x - mx;
  const double dy = y - my;
  const double q = (syy * dx * dx - 2.0 * sxy * dx * dy + sxx * dy * dy) / det;
  return std::exp(-0.5 * q) / (2.0 * std::numbers::pi * std::sqrt(det));
}

inline double normal_pdf_1d(double x, double m, double s) {
  const double z = (x - m) / s;
  return std::exp(-0.5 * z * z) / (s * std::sqrt(2.0 * std::numbers::pi));
}

/// Trapezoid rule over [lo, hi] with a fixed step.
inline double trapezoid_1d(const std::function<double(double)>& f, double lo,
                           double hi, double step) {
  const auto n = static_cast<long>(std::llround((hi - lo) / step));
  double sum = 0.5 * (f(lo) + f(hi));
  for (long i = 1; i < n; ++i) {
    sum += f(lo + static_cast<double>(i) * step);
  }
  return sum * step;
}

/// Tensor trapezoid rule over [x0, x1] x [y0, y1]. For integrands that are
/// negligible on the boundary this equals the midpoint sum.
inline double grid_2d(const std::function<double(double, double)>& f,
                      double x0, double x1, double y0, double y1,
                      double step) {
  const auto nx = static_cast<long>(std::llround((x1 - x0) / step));
  const auto ny = static_cast<long>(std::llround((y1 - y0) / step));
  long double sum = 0.0L;
  for (long i = 0; i <= nx; ++i) {
    const double wx = (i == 0 || i == nx) ? 0.5 : 1.0;
    const double x = x0 + static_cast<double>(i) * step;
    long double row = 0.0L;
    for (long j = 0; j <= ny; ++j) {
      const double wy = (j == 0 || j == ny) ? 0.5 : 1.0;
      row += wy * f(x, y0 + static_cast<double>(j) * step);
    }
    sum += wx * row;
  }
  return static_cast<double>(sum) * step * step;
}

/// Walks a polyline by hand to the point at arclength l (clamped to the
/// path; no extrapolation).
inline Vec2 walk_polyline(const std::vector<Vec2>& pts, double l) {
  double remaining = std::max(0.0, l);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double len = (pts[i + 1] - pts[i]).norm();
    if (remaining <= len) {
      return pts[i] + (pts[i + 1] - pts[i]) * (remaining / len);
    }
    remaining -= len;
  }
  return pts.back();
}

/// Brute-force closest point: dense sampling of every segment.
inline double brute_project(const std::vector<Vec2>& pts, const Vec2& p,
                            int samples_per_segment = 20000) {
  double best_d = 1e300;
  double best_l = 0.0;
  double base = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double len = (pts[i + 1] - pts[i]).norm();
    for (int k = 0; k <= samples_per_segment; ++k) {
      const double t = static_cast<double>(k) / samples_per_segment;
      const double d = (pts[i] + t * (pts[i + 1] - pts[i]) - p).norm();
      if (d < best_d - 1e-15) {
        best_d = d;
        best_l = base + t * len;
      }
    }
    base += len;
  }
  return best_l;
}

}  // namespace rsd::testing
