//
// Copyright 2026 The adalab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include <cmath>
#include <vector>

#include "adalab/common/counter_rng.h"
#include "adalab/common/discretized_distribution.h"
#include "adalab/mechanisms/mechanism.h"
#include "adalab/mechanisms/noise_spec.h"
#include "adalab/world/game_history.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace adalab::mechanisms {
namespace {

TEST(DefaultScheduleTest, SingleRoundHasNoNoise) {
  auto config = DefaultSchedule(1, 1.0);
  ASSERT_TRUE(config.ok());
  EXPECT_EQ(config->w_schedule, std::vector<double>{0.0});
}

TEST(DefaultScheduleTest, TwoRounds) {
  auto config = DefaultSchedule(2, 1.0);
  ASSERT_TRUE(config.ok());
  EXPECT_EQ(config->w_schedule, (std::vector<double>{1.0, 0.0}));
  EXPECT_EQ(config->kind, MechanismKind::kGaussianSchedule);
}

TEST(DefaultScheduleTest, FourthRootScaling) {
  auto config = DefaultSchedule(5, 2.0);
  ASSERT_TRUE(config.ok());
  ASSERT_EQ(config->w_schedule.size(), 5u);
  for (int i = 0; i < 4; ++i) {
    EXPECT_NEAR(config->w_schedule[i], std::sqrt(2.0) * 2.0, 1e-15);
  }
  EXPECT_EQ(config->w_schedule[4], 0.0);
  EXPECT_TRUE(config->Validate(5).ok());
}

TEST(DefaultScheduleTest, RejectsZeroRounds) {
  EXPECT_FALSE(DefaultSchedule(0, 1.0).ok());
}

TEST(MechanismConfigTest, ValidateChecksLengthAndSign) {
  auto config = ConstantSchedule(MechanismKind::kUniformSchedule, 3, 1.0, 0.0);
  ASSERT_TRUE(config.ok());
  EXPECT_TRUE(config->Validate(3).ok());
  EXPECT_FALSE(config->Validate(4).ok());
  config->w_schedule[1] = -1.0;
  EXPECT_FALSE(config->Validate(3).ok());
  MechanismConfig custom;
  custom.kind = MechanismKind::kCustom;
  custom.w_schedule = {1.0};
  EXPECT_FALSE(custom.Validate(1).ok());
}

TEST(MechanismConfigTest, KindNamesRoundTrip) {
  for (MechanismKind kind :
       {MechanismKind::kGaussianSchedule, MechanismKind::kZeroNoise,
        MechanismKind::kUniformSchedule, MechanismKind::kCustom}) {
    auto parsed = ParseMechanismKind(MechanismKindName(kind));
    ASSERT_TRUE(parsed.ok());
    EXPECT_EQ(*parsed, kind);
  }
  EXPECT_FALSE(ParseMechanismKind("laplace").ok());
}

TEST(DeclareNoiseTest, FamiliesFollowTheKind) {
  auto gaussian = DefaultSchedule(3, 1.0);
  ASSERT_TRUE(gaussian.ok());
  EXPECT_EQ(DeclareNoise(*gaussian, 1).family, NoiseFamily::kGaussian);
  EXPECT_EQ(DeclareNoise(*gaussian, 3).family, NoiseFamily::kPointMass);
  auto uniform =
      ConstantSchedule(MechanismKind::kUniformSchedule, 2, 2.0, 0.0);
  ASSERT_TRUE(uniform.ok());
  const NoiseSpec u = DeclareNoise(*uniform, 1);
  EXPECT_EQ(u.family, NoiseFamily::kUniform);
  EXPECT_DOUBLE_EQ(u.DeclaredVariance(), 4.0);
  auto zero = ConstantSchedule(MechanismKind::kZeroNoise, 2, 5.0, 5.0);
  ASSERT_TRUE(zero.ok());
  EXPECT_EQ(DeclareNoise(*zero, 1).family, NoiseFamily::kPointMass);
  EXPECT_EQ(DeclareNoise(*zero, 2).DeclaredVariance(), 0.0);
}

TEST(DeclareNoiseTest, CustomUsesTable) {
  auto table = DiscretizedDistribution::FromWeights(-1, 1, {1, 0, 1});
  ASSERT_TRUE(table.ok());
  MechanismConfig config;
  config.kind = MechanismKind::kCustom;
  config.w_schedule = {1.0, 0.0};
  config.table = std::make_shared<DiscretizedDistribution>(*table);
  auto policy = MakeNoisePolicy(config, 2);
  ASSERT_TRUE(policy.ok());
  world::GameHistory history;
  const NoiseSpec first = (*policy)(1, history);
  EXPECT_EQ(first.family, NoiseFamily::kTabulated);
  EXPECT_DOUBLE_EQ(first.DeclaredVariance(), 1.0);
  EXPECT_EQ((*policy)(2, history).family, NoiseFamily::kPointMass);
}

TEST(ReleaseTest, PointMassReleasesTheStatistic) {
  CounterRng rng(1, 1);
  const Released r = Release(3.7, NoiseSpec::PointMass(0.0), rng);
  EXPECT_EQ(r.release, 3.7);
  EXPECT_EQ(r.noise, 0.0);
}

TEST(ReleaseTest, ZeroNoiseMechanismReproducesStatistic) {
  auto config = ConstantSchedule(MechanismKind::kZeroNoise, 4, 0.0, 0.0);
  ASSERT_TRUE(config.ok());
  CounterRng rng(2, 2);
  for (int round = 1; round <= 4; ++round) {
    const double phi = 0.1 * round - 0.7;
    EXPECT_EQ(Release(phi, DeclareNoise(*config, round), rng).release, phi);
  }
}

TEST(ReleaseTest, GaussianReleaseIsCentered) {
  CounterRng rng(3, 0);
  const NoiseSpec noise = NoiseSpec::Gaussian(0.0, 1.0);
  const int n = 1000000;
  double sum = 0.0;
  for (int i = 0; i < n; ++i) {
    const Released r = Release(0.0, noise, rng);
    ASSERT_EQ(r.release, r.noise);
    sum += r.release;
  }
  EXPECT_NEAR(sum / n, 0.0, 4e-3);
}

TEST(ReleaseTest, UniformNoiseHasDeclaredVariance) {
  CounterRng rng(4, 0);
  const NoiseSpec noise = NoiseSpec::Uniform(0.0, 2.0);
  const int n = 1000000;
  std::vector<double> z(n);
  const double edge = 2.0 * std::sqrt(3.0);
  for (int i = 0; i < n; ++i) {
    z[i] = Release(0.0, noise, rng).noise;
    ASSERT_LE(std::abs(z[i]), edge);
  }
  EXPECT_NEAR(testing::SampleMoments(z).variance, 4.0, 0.04);
}

// Empirical moments of every family agree with the declared ones.
TEST(NoiseSpecTest, DeclaredMomentsMatchDraws) {
  auto table =
      DiscretizedDistribution::FromWeights(-2.0, 2.0, {0.1, 0.2, 0.3, 0.0, 0.4});
  ASSERT_TRUE(table.ok());
  const NoiseSpec specs[] = {
      NoiseSpec::Gaussian(0.5, 1.5), NoiseSpec::Uniform(-1.0, 0.7),
      NoiseSpec::PointMass(2.0), NoiseSpec::Tabulated(0.25, *table)};
  int stream = 0;
  for (const NoiseSpec& spec : specs) {
    ASSERT_TRUE(spec.Validate().ok());
    CounterRng rng(77, stream++);
    const int n = 1000000;
    std::vector<double> z(n);
    for (int i = 0; i < n; ++i) z[i] = spec.Sample(rng);
    const auto m = testing::SampleMoments(z);
    double m4 = 0.0;
    for (double v : z) m4 += std::pow(v - m.mean, 4);
    m4 /= n;
    const double var_se = std::sqrt(std::max(m4 - m.variance * m.variance, 0.0) / n);
    EXPECT_NEAR(m.mean, spec.DeclaredMean(), 4.0 * m.se + 1e-15)
        << NoiseFamilyName(spec.family);
    EXPECT_NEAR(m.variance, spec.DeclaredVariance(), 4.0 * var_se + 1e-15)
        << NoiseFamilyName(spec.family);
  }
}

TEST(NoiseSpecTest, ValidateRejectsBadParameters) {
  EXPECT_FALSE(NoiseSpec::Gaussian(0.0, -1.0).Validate().ok());
  EXPECT_FALSE(NoiseSpec::Uniform(NAN, 1.0).Validate().ok());
  NoiseSpec missing_table;
  missing_table.family = NoiseFamily::kTabulated;
  EXPECT_FALSE(missing_table.Validate().ok());
}

TEST(NoiseSpecTest, FamilyNamesRoundTrip) {
  for (NoiseFamily family : {NoiseFamily::kGaussian, NoiseFamily::kUniform,
                             NoiseFamily::kPointMass, NoiseFamily::kTabulated}) {
    auto parsed = ParseNoiseFamily(NoiseFamilyName(family));
    ASSERT_TRUE(parsed.ok());
    EXPECT_EQ(*parsed, family);
  }
  EXPECT_FALSE(ParseNoiseFamily("cauchy").ok());
}

}  // namespace
}  // namespace adalab::mechanisms
