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

#include "rsd/core/path.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "rsd/error.hpp"

namespace rsd {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidPath: return "invalid-path";
    case ErrorKind::kParameter: return "parameter";
    case ErrorKind::kSchema: return "schema";
    case ErrorKind::kData: return "data";
    case ErrorKind::kNumericalDegeneracy: return "numerical-degeneracy";
    case ErrorKind::kLookup: return "lookup";
    case ErrorKind::kAlignment: return "alignment";
    case ErrorKind::kCount: return "count";
    case ErrorKind::kConfig: return "config";
    case ErrorKind::kEmptyStatistics: return "empty-statistics";
    case ErrorKind::kIncompatible: return "incompatible";
    case ErrorKind::kIo: return "io";
  }
  return "unknown";
}

}  // namespace rsd

namespace rsd::core {

double normalize_angle(double angle) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  double a = std::fmod(angle, kTwoPi);
  if (a <= -std::numbers::pi) {
    a += kTwoPi;
  } else if (a > std::numbers::pi) {
    a -= kTwoPi;
  }
  return a;
}

Path::Path(std::vector<Vec2> points) : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw Error(ErrorKind::kInvalidPath,
                "path needs at least 2 points, got " +
                    std::to_string(points_.size()));
  }
  arclength_.reserve(points_.size());
  arclength_.push_back(0.0);
  for (std::size_t i = 1; i < points_.size(); ++i) {
    const double len = (points_[i] - points_[i - 1]).norm();
    if (!(len > 0.0)) {
      throw Error(ErrorKind::kInvalidPath,
                  "path points " + std::to_string(i - 1) + " and " +
                      std::to_string(i) + " coincide");
    }
    arclength_.push_back(arclength_.back() + len);
  }
}

std::size_t Path::segment_at(double l) const {
  // upper_bound gives the first vertex strictly beyond l, so a vertex maps to
  // its outgoing segment.
  const auto it = std::upper_bound(arclength_.begin(), arclength_.end(), l);
  if (it == arclength_.begin()) {
    return 0;
  }
  const auto vertex = static_cast<std::size_t>(it - arclength_.begin()) - 1;
  return std::min(vertex, segment_count() - 1);
}

Pose pose_at_arclength(const Path& path, double l) {
  const std::size_t seg = path.segment_at(l);
  const Vec2& a = path.points()[seg];
  const Vec2& b = path.points()[seg + 1];
  const double seg_len =
      path.cumulative_arclength()[seg + 1] - path.cumulative_arclength()[seg];
  const Vec2 dir = (b - a) / seg_len;
  const double along = l - path.cumulative_arclength()[seg];
  return Pose{a + along * dir, normalize_angle(std::atan2(dir.y(), dir.x()))};
}

namespace {

double project_range(const Path& path, const Vec2& point, std::size_t first,
                     std::size_t last) {
  double best_dist2 = std::numeric_limits<double>::infinity();
  double best_l = path.cumulative_arclength()[first];
  for (std::size_t seg = first; seg <= last; ++seg) {
    const Vec2& a = path.points()[seg];
    const Vec2 ab = path.points()[seg + 1] - a;
    const double t =
        std::clamp((point - a).dot(ab) / ab.squaredNorm(), 0.0, 1.0);
    const double dist2 = (a + t * ab - point).squaredNorm();
    if (dist2 < best_dist2) {
      best_dist2 = dist2;
      const double seg_len = path.cumulative_arclength()[seg + 1] -
                             path.cumulative_arclength()[seg];
      best_l = path.cumulative_arclength()[seg] + t * seg_len;
    }
  }
  return best_l;
}

}  // namespace

double project_to_path(const Path& path, const Vec2& point) {
  return project_range(path, point, 0, path.segment_count() - 1);
}

double project_to_path(const Path& path, const Vec2& point, double l_min,
                       double l_max) {
  if (l_max < l_min) {
    std::swap(l_min, l_max);
  }
  return project_range(path, point, path.segment_at(l_min),
                       path.segment_at(l_max));
}

RecordedPath path_from_samples(std::span<const Vec2> samples,
                               double min_spacing, double fallback_heading) {
  if (samples.empty()) {
    throw Error(ErrorKind::kInvalidPath, "no samples to build a path from");
  }
  std::vector<Vec2> vertices{samples.front()};
  std::vector<double> vertex_l{0.0};
  std::vector<double> sample_l;
  sample_l.reserve(samples.size());
  sample_l.push_back(0.0);
  for (std::size_t i = 1; i < samples.size(); ++i) {
    const double d = (samples[i] - vertices.back()).norm();
    double l = vertex_l.back() + d;
    if (d >= min_spacing) {
      vertices.push_back(samples[i]);
      vertex_l.push_back(l);
    }
    sample_l.push_back(std::max(l, sample_l.back()));
  }
  if (vertices.size() < 2) {
    const Vec2 dir(std::cos(fallback_heading), std::sin(fallback_heading));
    vertices.push_back(vertices.front() + dir);
  }
  return RecordedPath{Path(std::move(vertices)), std::move(sample_l)};
}

}  // namespace rsd::core
