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

#include <vector>

#include "rsd/collision/gaussian.hpp"
#include "rsd/collision/uncertainty.hpp"
#include "rsd/core/path.hpp"

namespace rsd::collision {

struct MixtureComponent {
  double weight = 1.0;
  Vec2 mean = Vec2::Zero();
  Mat2 covariance = Mat2::Identity();
};

/// Position uncertainty of one vehicle at one predicted instant. A plain
/// footprint carries no components; a mixture carries N weighted ones whose
/// weights need not sum to one.
struct GaussianFootprint {
  Vec2 mean = Vec2::Zero();
  Mat2 covariance = Mat2::Identity();
  std::vector<MixtureComponent> components;
  /// Largest distance of a component mean from `mean` (0 when plain).
  double extent = 0.0;
  /// Largest covariance eigenvalue over all components (or the plain one).
  double max_variance = 0.0;

  bool is_mixture() const { return !components.empty(); }
  double density(const Vec2& x) const;
};

/// Plain footprint with covariance rotated to `heading`.
GaussianFootprint make_footprint(const Vec2& mean, double sigma_lon,
                                 double sigma_lat, double heading);

struct PmmConfig {
  bool enabled = true;
  int components = 15;         ///< N, odd
  double width_factor = 1.2;   ///< m_f > 1
  /// Center spacing in units of the component width sigma_k.
  double spacing_sigma = 1.85;

  /// Throws Error(kParameter) on even or non-positive N, m_f <= 1 or
  /// spacing <= 0.
  void validate() const;
};

/// Mixture layout in units of the plain longitudinal sigma. Offsets are
/// symmetric about zero with the middle entry exactly zero.
struct PmmLayout {
  std::vector<double> offsets;
  std::vector<double> weights;
  double component_sigma = 1.0;
};

PmmLayout pmm_layout(const PmmConfig& config);

/// Value of the layout's 1D mixture at x (both in units of sigma), for a
/// plain profile with unit sigma.
double pmm_profile(const PmmLayout& layout, double x);

/// True when the 1D mixture profile on a straight path has exactly one local
/// maximum.
bool pmm_is_unimodal(const PmmLayout& layout);

/// Throws Error(kParameter) when the configured mixture is not unimodal.
void verify_pmm_unimodal(const PmmConfig& config);

/// Replaces the plain footprint at (mean, heading) by a mixture bent along
/// `path`. Component k sits at arclength center_arclength + offset_k *
/// sigma_lon and is rotated to the local path heading; a mixture with N = 1
/// returns the plain footprint.
GaussianFootprint build_pmm(const Vec2& mean, double sigma_lon,
                            double sigma_lat, double heading,
                            const core::Path& path, double center_arclength,
                            const PmmLayout& layout);

GaussianFootprint build_pmm(const Vec2& mean, double sigma_lon,
                            double sigma_lat, double heading,
                            const core::Path& path, double center_arclength,
                            const PmmConfig& config);

struct CollisionConfig {
  double sigma_lat = 1.0 / 3.0;  ///< m, constant over prediction time
  double cross_section = 8.0;    ///< A_c, m^2
  PmmConfig pmm;
  UncertaintyGrowth growth;

  /// Validates every field, including the mixture's unimodality.
  void validate() const;
};

/// A_c times the overlap integral of the two footprint densities, clamped to
/// [0, 1]. Pairs separated by more than 12 combined standard deviations
/// beyond their extents return exactly 0.
double collision_probability(const GaussianFootprint& f1,
                             const GaussianFootprint& f2,
                             double cross_section);

}  // namespace rsd::collision
