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
#include <sstream>

#include "rsd/error.hpp"
#include "rsd/ingest/filters.hpp"
#include "rsd/ingest/statistics.hpp"
#include "rsd/ingest/trajectory_dataset.hpp"
#include "synthetic.hpp"

namespace rsd {
namespace {

using core::Vec2;
using ingest::ParseOptions;

ParseOptions metric_options() {
  ParseOptions o;
  o.feet_to_meters = false;
  return o;
}

ingest::TrajectoryDataset parse(const std::string& csv,
                                const ParseOptions& o = metric_options()) {
  std::istringstream in(csv);
  return ingest::parse_trajectories(in, o);
}

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no rsd::Error thrown";
  return ErrorKind::kIo;
}

// --- parsing ---------------------------------------------------------------

TEST(Parse, TwoRowSingleVehicle) {
  const auto d = parse(
      "Vehicle_ID,Frame_ID,Local_X,Local_Y\n"
      "7,1,100,200\n"
      "7,2,101,200\n");
  ASSERT_EQ(d.vehicles().size(), 1u);
  const auto& t = d.vehicles()[0];
  ASSERT_EQ(t.states.size(), 2u);
  EXPECT_NEAR(t.states[0].position.x(), 0.0, 1e-12);
  EXPECT_NEAR(t.states[0].position.y(), 0.0, 1e-12);
  EXPECT_NEAR(t.states[1].position.x(), 1.0, 1e-12);
  EXPECT_NEAR(t.states[1].position.y(), 0.0, 1e-12);
  EXPECT_NEAR(t.states[0].velocity, 10.0, 1e-9);
  EXPECT_NEAR(t.states[1].velocity, 10.0, 1e-9);
  EXPECT_NEAR(d.origin_offset().x(), 100.0, 1e-12);
}

TEST(Parse, ColumnOrderDoesNotMatter) {
  const auto a = parse(
      "Vehicle_ID,Frame_ID,Local_X,Local_Y\n"
      "1,0,0,0\n1,1,1,0\n1,2,2,1\n2,0,5,5\n2,1,5,6\n");
  const auto b = parse(
      "Local_Y,Frame_ID,Local_X,Vehicle_ID\n"
      "0,0,0,1\n0,1,1,1\n1,2,2,1\n5,0,5,2\n6,1,5,2\n");
  ASSERT_EQ(a.vehicles().size(), b.vehicles().size());
  for (std::size_t i = 0; i < a.vehicles().size(); ++i) {
    const auto& ta = a.vehicles()[i];
    const auto& tb = b.vehicles()[i];
    EXPECT_EQ(ta.id, tb.id);
    ASSERT_EQ(ta.states.size(), tb.states.size());
    for (std::size_t k = 0; k < ta.states.size(); ++k) {
      EXPECT_EQ(ta.states[k].position, tb.states[k].position);
      EXPECT_EQ(ta.states[k].velocity, tb.states[k].velocity);
    }
  }
}

TEST(Parse, CustomColumnMapping) {
  ParseOptions o = metric_options();
  o.columns.vehicle_id = "id";
  o.columns.frame = "f";
  o.columns.x = "east";
  o.columns.y = "north";
  const auto d = parse("id,f,east,north\n3,0,0,0\n3,1,2,0\n", o);
  ASSERT_EQ(d.vehicles().size(), 1u);
  EXPECT_EQ(d.vehicles()[0].id, 3);
}

TEST(Parse, DuplicatedRowIsDataError) {
  EXPECT_EQ(kind_of([] {
              parse("Vehicle_ID,Frame_ID,Local_X,Local_Y\n1,0,0,0\n1,0,1,0\n");
            }),
            ErrorKind::kData);
}

TEST(Parse, MissingColumnNamesIt) {
  try {
    parse("Vehicle_ID,Frame_ID,Local_X\n1,0,0\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSchema);
    EXPECT_NE(std::string(e.what()).find("Local_Y"), std::string::npos);
  }
}

TEST(Parse, UnparsableCellIsDataError) {
  EXPECT_EQ(kind_of([] {
              parse("Vehicle_ID,Frame_ID,Local_X,Local_Y\n1,0,abc,0\n");
            }),
            ErrorKind::kData);
}

TEST(Parse, FeetConversionDefaultOn) {
  std::istringstream in("Vehicle_ID,Frame_ID,Local_X,Local_Y\n1,0,0,0\n1,1,10,0\n");
  const auto d = ingest::parse_trajectories(in, ParseOptions{});
  EXPECT_NEAR(d.vehicles()[0].states[1].position.x(), 3.048, 1e-12);
}

TEST(Parse, DropsShortAndGappedVehiclesAndSortsFrames) {
  const auto d = parse(
      "Vehicle_ID,Frame_ID,Local_X,Local_Y\n"
      "1,2,2,0\n1,0,0,0\n1,1,1,0\n"   // unsorted but contiguous
      "2,0,0,5\n"                     // single frame
      "3,0,0,9\n3,2,2,9\n");          // gap
  ASSERT_EQ(d.vehicles().size(), 1u);
  EXPECT_EQ(d.vehicles()[0].id, 1);
  EXPECT_EQ(d.vehicles()[0].first_frame, 0);
  EXPECT_NEAR(d.vehicles()[0].states[2].position.x(), 2.0, 1e-12);
  EXPECT_EQ(d.warnings().dropped_short, 1u);
  EXPECT_EQ(d.warnings().dropped_gaps, 1u);
}

TEST(Parse, SceneAtListsPresentVehiclesById) {
  const auto d = parse(
      "Vehicle_ID,Frame_ID,Local_X,Local_Y\n"
      "5,0,0,0\n5,1,1,0\n4,1,0,3\n4,2,1,3\n");
  EXPECT_EQ(d.first_frame(), 0);
  EXPECT_EQ(d.last_frame(), 2);
  const auto s = d.scene_at(1);
  ASSERT_EQ(s.participants.size(), 2u);
  EXPECT_EQ(s.participants[0].id, 4);
  EXPECT_EQ(s.participants[1].id, 5);
  EXPECT_NEAR(s.time, 0.1, 1e-12);
}

// --- filters ---------------------------------------------------------------

TEST(Ema, ConstantIsFixedPoint) {
  const std::vector<double> c(50, 3.25);
  for (const double v : ingest::ema_smooth_bidirectional(c, 10.0, 0.1)) {
    EXPECT_DOUBLE_EQ(v, 3.25);
  }
}

TEST(Ema, ImpulseResponseIsSymmetric) {
  std::vector<double> x(101, 0.0);
  x[50] = 1.0;
  const auto y = ingest::ema_smooth_bidirectional(x, 0.5, 0.1);
  for (int k = 1; k <= 50; ++k) {
    EXPECT_NEAR(y[50 - k], y[50 + k], 1e-12) << k;
  }
}

TEST(Ema, ReducesWhiteNoiseVariance) {
  for (unsigned seed = 1; seed <= 10; ++seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> n(0.0, 1.0);
    std::vector<double> x(2000);
    for (auto& v : x) v = n(rng);
    const auto y = ingest::ema_smooth_bidirectional(x, 10.0, 0.1);
    auto var = [](const std::vector<double>& s) {
      double m = 0.0, q = 0.0;
      for (const double v : s) m += v;
      m /= static_cast<double>(s.size());
      for (const double v : s) q += (v - m) * (v - m);
      return q / static_cast<double>(s.size());
    };
    EXPECT_LT(var(y), var(x)) << "seed " << seed;
  }
}

TEST(Ema, OrderPreservingOnMonotoneSeries) {
  std::vector<double> x(300);
  for (std::size_t i = 0; i < x.size(); ++i) x[i] = std::sqrt(double(i));
  const auto y = ingest::ema_smooth_bidirectional(x, 2.0, 0.1);
  for (std::size_t i = 1; i < y.size(); ++i) EXPECT_GE(y[i], y[i - 1]);
}

TEST(Ema, ParameterErrors) {
  const std::vector<double> x{1, 2};
  EXPECT_EQ(kind_of([&] { ingest::ema_smooth_bidirectional(x, 0.0, 0.1); }),
            ErrorKind::kParameter);
  EXPECT_EQ(kind_of([&] { ingest::ema_smooth_bidirectional(x, 1.0, -0.1); }),
            ErrorKind::kParameter);
}

TEST(Differentiate, LinearRampAndConstant) {
  std::vector<double> ramp(20), flat(20, 4.0);
  for (std::size_t i = 0; i < ramp.size(); ++i) ramp[i] = 3.0 * 0.1 * double(i);
  for (const double v : ingest::differentiate(ramp, 0.1)) EXPECT_NEAR(v, 3.0, 1e-12);
  for (const double v : ingest::differentiate(flat, 0.1)) EXPECT_EQ(v, 0.0);
}

TEST(Differentiate, QuadraticInteriorMatchesAnalyticDerivative) {
  std::vector<double> q(101);
  for (std::size_t i = 0; i < q.size(); ++i) {
    const double t = 0.1 * double(i);
    q[i] = 0.5 * 2.0 * t * t;
  }
  const auto d = ingest::differentiate(q, 0.1);
  for (std::size_t i = 1; i + 1 < q.size(); ++i) {
    EXPECT_NEAR(d[i], 2.0 * 0.1 * double(i), 1e-9);
  }
}

TEST(Differentiate, TooShortIsParameterError) {
  const std::vector<double> one{1.0};
  EXPECT_EQ(kind_of([&] { ingest::differentiate(one, 0.1); }),
            ErrorKind::kParameter);
}

// --- smoothing -------------------------------------------------------------

TEST(SmoothDataset, ConstantVelocityInteriorExact) {
  // Transients decay as exp(-t / 80 s); the middle of a 4000 s track is clean.
  const int frames = 40000;
  const auto raw = testing::to_dataset(
      {{1, 0, frames, [](double t) { return Vec2(8.0 * t, 0.0); }}});
  const auto d = ingest::smooth_dataset(raw);
  const auto& s = d.vehicles()[0].states;
  for (int i = 15000; i < 25000; i += 50) {
    EXPECT_NEAR(s[i].velocity, 8.0, 1e-6) << i;
    EXPECT_NEAR(s[i].acceleration, 0.0, 1e-6) << i;
    EXPECT_NEAR(s[i].heading, 0.0, 1e-12);
  }
}

TEST(SmoothDataset, StationaryVehicle) {
  const auto raw = testing::to_dataset(
      {{1, 0, 200, [](double) { return Vec2(4.0, 2.0); }}});
  const auto d = ingest::smooth_dataset(raw);
  for (const auto& s : d.vehicles()[0].states) {
    EXPECT_EQ(s.velocity, 0.0);
    EXPECT_EQ(s.acceleration, 0.0);
  }
}

TEST(SmoothDataset, ReducesVelocityErrorOnNoisySinusoid) {
  const int frames = 6000;
  const double w = 2.0 * std::numbers::pi / 60.0;
  auto truth_v = [w](double t) { return 12.0 + 5.0 * w * std::cos(w * t); };
  for (unsigned seed = 1; seed <= 10; ++seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> noise(0.0, 0.6);
    std::vector<Vec2> noisy(frames);
    for (int i = 0; i < frames; ++i) {
      const double t = 0.1 * i;
      noisy[i] = Vec2(12.0 * t + 5.0 * std::sin(w * t) + noise(rng), noise(rng));
    }
    std::vector<ingest::VehicleTrack> tracks{
        ingest::make_track(1, ingest::VehicleClass::kCar, 0, noisy, 0.1)};
    const ingest::TrajectoryDataset raw(0.1, std::move(tracks));
    const auto smooth = ingest::smooth_dataset(raw);
    double e_raw = 0.0, e_smooth = 0.0;
    int n = 0;
    for (int i = 1500; i < 4500; ++i) {
      const double v = truth_v(0.1 * i);
      e_raw += std::pow(raw.vehicles()[0].states[i].velocity - v, 2);
      e_smooth += std::pow(smooth.vehicles()[0].states[i].velocity - v, 2);
      ++n;
    }
    EXPECT_LT(std::sqrt(e_smooth / n), std::sqrt(e_raw / n)) << "seed " << seed;
  }
}

TEST(SmoothDataset, Deterministic) {
  const auto raw = testing::to_dataset(testing::grid_traffic(200));
  const auto a = ingest::smooth_dataset(raw);
  const auto b = ingest::smooth_dataset(raw);
  for (std::size_t v = 0; v < a.vehicles().size(); ++v) {
    for (std::size_t i = 0; i < a.vehicles()[v].states.size(); ++i) {
      EXPECT_EQ(a.vehicles()[v].states[i].velocity,
                b.vehicles()[v].states[i].velocity);
    }
  }
}

// --- statistics ------------------------------------------------------------

void expect_valid_histogram(const ingest::HistogramStats& h) {
  double sum = 0.0;
  for (std::size_t i = 0; i < h.pmf.size(); ++i) {
    sum += h.pmf[i];
    EXPECT_NEAR(h.cdf[i], sum, 1e-12);
    if (i > 0) {
      EXPECT_GE(h.cdf[i], h.cdf[i - 1]);
    }
  }
  if (!h.empty()) {
    EXPECT_NEAR(sum, 1.0, 1e-9);
    EXPECT_NEAR(h.cdf.back(), 1.0, 1e-9);
    EXPECT_EQ(h.bin_edges.size(), h.pmf.size() + 1);
  }
}

TEST(Statistics, StationaryMassInFirstBin) {
  const auto d = testing::to_dataset(
      {{1, 0, 50, [](double) { return Vec2(1.0, 1.0); }},
       {2, 0, 50, [](double) { return Vec2(9.0, 1.0); }}});
  const auto stats = ingest::kinematics_statistics(d, {});
  ASSERT_EQ(stats.size(), 4u);
  const auto& v = stats[0];
  ASSERT_EQ(v.pmf.size(), 1u);
  EXPECT_EQ(v.bin_edges[0], 0.0);
  EXPECT_EQ(v.bin_edges[1], 1.0);
  EXPECT_DOUBLE_EQ(v.pmf[0], 1.0);
  for (const auto& h : stats) expect_valid_histogram(h);
  EXPECT_TRUE(stats[2].empty());
}

TEST(Statistics, ConstantTwelveMetersPerSecond) {
  const auto d = testing::to_dataset(
      {{1, 0, 100, [](double t) { return Vec2(12.0 * t, 0.0); }},
       {2, 0, 100, [](double t) { return Vec2(12.0 * t + 30.0, 0.0); }}});
  const ingest::FrontPairSample pair{1, 0, -30.0, 0.0};
  const auto stats = ingest::kinematics_statistics(
      d, std::span<const ingest::FrontPairSample>(&pair, 1));
  const auto& v = stats[0];
  ASSERT_EQ(v.pmf.size(), 1u);
  EXPECT_EQ(v.bin_edges[0], 12.0);
  EXPECT_EQ(v.bin_edges[1], 13.0);
  EXPECT_DOUBLE_EQ(v.pmf[0], 1.0);
  EXPECT_EQ(stats[2].sample_count, 1u);
  EXPECT_EQ(ingest::to_string(stats[2].variable), "-dl");
  for (const auto& h : stats) expect_valid_histogram(h);
}

TEST(Statistics, RandomSamplesFormValidDistributions) {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n(0.0, 2.0);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<double> x(500);
    for (auto& v : x) v = n(rng);
    expect_valid_histogram(
        ingest::make_histogram(ingest::StatVariable::kAcceleration, x, 0.1));
  }
}

TEST(Statistics, EmptyDatasetIsError) {
  EXPECT_EQ(kind_of([] {
              ingest::kinematics_statistics(ingest::TrajectoryDataset{}, {});
            }),
            ErrorKind::kEmptyStatistics);
}

}  // namespace
}  // namespace rsd
