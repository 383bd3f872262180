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

#include <Eigen/Core>

namespace rsd::core {

using Vec2 = Eigen::Vector2d;

struct Pose {
  Vec2 position;
  double heading = 0.0;
};

/// Maps an angle to (-pi, pi].
double normalize_angle(double angle);

/// Piecewise-linear polyline with cumulative arclength.
///
/// Invariants: at least two points, consecutive points distinct, arclength
/// strictly increasing from zero.
class Path {
 public:
  /// Throws Error(kInvalidPath) if fewer than two points are given or two
  /// consecutive points coincide.
  explicit Path(std::vector<Vec2> points);

  const std::vector<Vec2>& points() const { return points_; }
  const std::vector<double>& cumulative_arclength() const { return arclength_; }
  double length() const { return arclength_.back(); }
  std::size_t segment_count() const { return points_.size() - 1; }

  /// Index of the segment containing arclength l. A vertex belongs to its
  /// outgoing segment; values outside [0, length] map to the first/last one.
  std::size_t segment_at(double l) const;

 private:
  std::vector<Vec2> points_;
  std::vector<double> arclength_;
};

/// Position and heading at arclength l. Beyond either end the pose is
/// extrapolated along the first/last segment.
Pose pose_at_arclength(const Path& path, double l);

/// Arclength of the closest point on the polyline; ties go to the smaller
/// arclength.
double project_to_path(const Path& path, const Vec2& point);

/// Same as project_to_path but only searches segments overlapping
/// [l_min, l_max].
double project_to_path(const Path& path, const Vec2& point, double l_min,
                       double l_max);

/// Result of building a path from a recorded position sequence.
struct RecordedPath {
  Path path;
  /// Arclength of every input sample on `path`, non-decreasing.
  std::vector<double> sample_arclength;
};

/// Builds a path from recorded samples, merging samples closer than
/// `min_spacing` to the previous kept vertex. A sequence without two distinct
/// vertices yields a unit-length path starting at the first sample and
/// pointing along `fallback_heading`.
RecordedPath path_from_samples(std::span<const Vec2> samples,
                               double min_spacing = 0.01,
                               double fallback_heading = 0.0);

}  // namespace rsd::core
