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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "rsd/core/path.hpp"
#include "rsd/core/scene.hpp"
#include "rsd/error.hpp"
#include "synthetic.hpp"

namespace rsd {
namespace {

using core::Path;
using core::Vec2;
using testing::polyline;

constexpr double kPi = std::numbers::pi;

TEST(Path, RejectsTooFewOrCoincidentPoints) {
  EXPECT_THROW(Path({Vec2(0, 0)}), Error);
  EXPECT_THROW(Path({Vec2(0, 0), Vec2(0, 0)}), Error);
  try {
    Path({Vec2(1, 1)});
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidPath);
  }
}

TEST(Path, CumulativeArclengthStartsAtZeroAndIncreases) {
  const Path p = polyline({Vec2(0, 0), Vec2(3, 4), Vec2(3, 10)});
  ASSERT_EQ(p.cumulative_arclength().size(), 3u);
  EXPECT_EQ(p.cumulative_arclength()[0], 0.0);
  EXPECT_DOUBLE_EQ(p.cumulative_arclength()[1], 5.0);
  EXPECT_DOUBLE_EQ(p.length(), 11.0);
}

TEST(PoseAtArclength, StraightInterpolation) {
  const Path p = polyline({Vec2(0, 0), Vec2(10, 0)});
  const auto pose = core::pose_at_arclength(p, 5.0);
  EXPECT_NEAR(pose.position.x(), 5.0, 1e-12);
  EXPECT_NEAR(pose.position.y(), 0.0, 1e-12);
  EXPECT_NEAR(pose.heading, 0.0, 1e-12);
}

TEST(PoseAtArclength, ExtrapolatesBeyondEnd) {
  const Path p = polyline({Vec2(0, 0), Vec2(10, 0)});
  const auto pose = core::pose_at_arclength(p, 12.0);
  EXPECT_NEAR(pose.position.x(), 12.0, 1e-12);
  EXPECT_NEAR(pose.position.y(), 0.0, 1e-12);
  EXPECT_NEAR(pose.heading, 0.0, 1e-12);
}

TEST(PoseAtArclength, LShapedMatchesHandWalk) {
  const std::vector<Vec2> pts{Vec2(0, 0), Vec2(10, 0), Vec2(10, 10)};
  const Path p(pts);
  const auto pose = core::pose_at_arclength(p, 15.0);
  const Vec2 expected = testing::walk_polyline(pts, 15.0);
  EXPECT_NEAR(pose.position.x(), expected.x(), 1e-12);
  EXPECT_NEAR(pose.position.y(), expected.y(), 1e-12);
  EXPECT_NEAR(pose.position.x(), 10.0, 1e-12);
  EXPECT_NEAR(pose.position.y(), 5.0, 1e-12);
  EXPECT_NEAR(pose.heading, kPi / 2, 1e-12);
}

TEST(PoseAtArclength, VertexUsesOutgoingSegment) {
  const Path p = polyline({Vec2(0, 0), Vec2(10, 0), Vec2(10, 10)});
  EXPECT_NEAR(core::pose_at_arclength(p, 10.0).heading, kPi / 2, 1e-12);
}

TEST(PoseAtArclength, HeadingNormalized) {
  const Path p = polyline({Vec2(0, 0), Vec2(-10, 0)});
  EXPECT_NEAR(core::pose_at_arclength(p, 3.0).heading, kPi, 1e-12);
  EXPECT_NEAR(core::normalize_angle(-kPi), kPi, 1e-12);
  EXPECT_NEAR(core::normalize_angle(3 * kPi), kPi, 1e-12);
  EXPECT_NEAR(core::normalize_angle(-kPi / 2 - 4 * kPi), -kPi / 2, 1e-12);
}

TEST(ProjectToPath, Examples) {
  const Path straight = polyline({Vec2(0, 0), Vec2(10, 0)});
  EXPECT_NEAR(core::project_to_path(straight, Vec2(3, 2)), 3.0, 1e-12);
  EXPECT_NEAR(core::project_to_path(straight, Vec2(-5, 0)), 0.0, 1e-12);
  const std::vector<Vec2> l_pts{Vec2(0, 0), Vec2(10, 0), Vec2(10, 10)};
  const Path l_path(l_pts);
  EXPECT_NEAR(core::project_to_path(l_path, Vec2(11, 11)), 20.0, 1e-12);
  EXPECT_NEAR(testing::brute_project(l_pts, Vec2(11, 11)), 20.0, 1e-9);
}

TEST(ProjectToPath, TieGoesToSmallerArclength) {
  // (5, 5) is 5 m from (5, 0) at l = 5 and from (10, 5) at l = 15.
  const Path p = polyline({Vec2(0, 0), Vec2(10, 0), Vec2(10, 10)});
  EXPECT_NEAR(core::project_to_path(p, Vec2(5, 5)), 5.0, 1e-12);
}

TEST(ProjectToPath, MatchesBruteForceOnRandomPoints) {
  const std::vector<Vec2> pts{Vec2(0, 0), Vec2(4, 1), Vec2(7, 6), Vec2(3, 9)};
  const Path p(pts);
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-3.0, 12.0);
  for (int i = 0; i < 50; ++i) {
    const Vec2 q(u(rng), u(rng));
    const double l = core::project_to_path(p, q);
    const Vec2 foot = core::pose_at_arclength(p, l).position;
    const Vec2 brute_foot =
        testing::walk_polyline(pts, testing::brute_project(pts, q, 4000));
    EXPECT_NEAR((foot - q).norm(), (brute_foot - q).norm(), 1e-3);
  }
}

TEST(PathProperties, RoundTripProjection) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ang(-0.6, 0.6);
  std::uniform_real_distribution<double> len(0.5, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    // Gently turning paths are never self-intersecting.
    std::vector<Vec2> pts{Vec2(0, 0)};
    double heading = 0.0;
    for (int i = 0; i < 8; ++i) {
      heading += ang(rng);
      pts.push_back(pts.back() + len(rng) * Vec2(std::cos(heading),
                                                 std::sin(heading)));
    }
    const Path p(pts);
    std::uniform_real_distribution<double> ul(0.0, p.length());
    for (int k = 0; k < 50; ++k) {
      const double l = ul(rng);
      const Vec2 pos = core::pose_at_arclength(p, l).position;
      EXPECT_NEAR(core::project_to_path(p, pos), l, 1e-9);
    }
  }
}

TEST(PathProperties, PoseIsContinuous) {
  const Path p = polyline({Vec2(0, 0), Vec2(10, 0), Vec2(10, 10), Vec2(0, 12)});
  const double eps = 1e-4;
  for (double l = -2.0; l < p.length() + 2.0; l += 0.01) {
    const Vec2 a = core::pose_at_arclength(p, l).position;
    const Vec2 b = core::pose_at_arclength(p, l + eps).position;
    EXPECT_LE((a - b).norm(), eps + 1e-12);
  }
}

TEST(WindowedProjection, RestrictsSearch) {
  // A U-turn: the windowed search must not jump to the other leg.
  const Path p = polyline({Vec2(0, 0), Vec2(20, 0), Vec2(20, 2), Vec2(0, 2)});
  EXPECT_NEAR(core::project_to_path(p, Vec2(5, 1.2)), 37.0, 1e-9);
  EXPECT_NEAR(core::project_to_path(p, Vec2(5, 1.2), 0.0, 15.0), 5.0, 1e-9);
}

TEST(PathFromSamples, MergesCloseSamplesAndKeepsArclengthMonotone) {
  const std::vector<Vec2> samples{Vec2(0, 0), Vec2(0.001, 0), Vec2(1, 0),
                                  Vec2(1, 0), Vec2(2, 0)};
  const auto rp = core::path_from_samples(samples);
  EXPECT_EQ(rp.path.points().size(), 3u);
  ASSERT_EQ(rp.sample_arclength.size(), samples.size());
  for (std::size_t i = 1; i < samples.size(); ++i) {
    EXPECT_GE(rp.sample_arclength[i], rp.sample_arclength[i - 1]);
  }
  EXPECT_NEAR(rp.sample_arclength.back(), 2.0, 1e-12);
}

TEST(PathFromSamples, StationaryFallback) {
  const std::vector<Vec2> samples(5, Vec2(3, 4));
  const auto rp = core::path_from_samples(samples, 0.01, kPi / 2);
  EXPECT_NEAR(rp.path.length(), 1.0, 1e-12);
  EXPECT_NEAR(core::pose_at_arclength(rp.path, 0.0).heading, kPi / 2, 1e-12);
  for (const double l : rp.sample_arclength) {
    EXPECT_EQ(l, 0.0);
  }
}

TEST(Scene, LookupAndValidation) {
  core::SceneSnapshot s;
  s.participants.push_back({4, {}, nullptr});
  s.participants.push_back({9, {}, nullptr});
  EXPECT_NE(s.find(9), nullptr);
  EXPECT_EQ(s.find(5), nullptr);
  EXPECT_THROW(s.at(5), Error);
  EXPECT_NO_THROW(core::validate_scene(s));
  s.participants.push_back({4, {}, nullptr});
  try {
    core::validate_scene(s);
    FAIL() << "duplicate id accepted";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kData);
  }
}

}  // namespace
}  // namespace rsd
