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

#include "Eigen/Cholesky"
#include "Eigen/Core"
#include "Eigen/Eigenvalues"
#include "absl/status/status.h"
#include "adalab/mechanisms/noise_spec.h"
#include "adalab/world/game_history.h"
#include "adalab/world/gaussian_world.h"
#include "adalab/world/linear_query_world.h"
#include "adalab/world/query.h"
#include "gtest/gtest.h"
#include "test_util.h"

namespace adalab::world {
namespace {

using ::adalab::testing::OracleRng;

QuerySpec Query(double mean, double variance, std::vector<double> cov) {
  return QuerySpec{mean, variance, std::move(cov)};
}

TEST(GaussianWorldTest, UnconditionalDrawIsReproducible) {
  auto a = GaussianWorldState::Create(1.0, 42);
  auto b = GaussianWorldState::Create(1.0, 42);
  auto c = GaussianWorldState::Create(1.0, 43);
  ASSERT_TRUE(a.ok() && b.ok() && c.ok());
  ASSERT_TRUE(a->Extend(Query(0, 1, {})).ok());
  ASSERT_TRUE(b->Extend(Query(0, 1, {})).ok());
  ASSERT_TRUE(c->Extend(Query(0, 1, {})).ok());
  EXPECT_EQ(a->realized()[0], b->realized()[0]);
  EXPECT_NE(a->realized()[0], c->realized()[0]);
}

TEST(GaussianWorldTest, UncorrelatedQueryKeepsItsMean) {
  auto world = GaussianWorldState::Create(1.0, 1);
  ASSERT_TRUE(world.ok());
  ASSERT_TRUE(world->Extend(Query(0.3, 1, {})).ok());
  auto law = world->ConditionalLawOf(Query(-2.0, 0.5, {0.0}));
  ASSERT_TRUE(law.ok());
  EXPECT_EQ(law->mean, -2.0);
  EXPECT_DOUBLE_EQ(law->variance, 0.5);
}

TEST(GaussianWorldTest, BoundaryQueryIsDeterministicGivenHistory) {
  const double sigma = 1.5;
  auto world = GaussianWorldState::Create(sigma, 9);
  ASSERT_TRUE(world.ok());
  ASSERT_TRUE(world->Extend(Query(1.0, sigma * sigma, {})).ok());
  ASSERT_TRUE(world->Extend(Query(-1.0, sigma * sigma, {0.0})).ok());
  // v^T (sigma^2 I)^{-1} v = sigma^2.
  const double c = sigma * sigma / std::sqrt(2.0);
  const QuerySpec q = Query(0.25, sigma * sigma, {c, c});
  ASSERT_TRUE(world->Extend(q).ok());
  const auto& phi = world->realized();
  const double expected =
      0.25 + (c * (phi[0] - 1.0) + c * (phi[1] + 1.0)) / (sigma * sigma);
  // The diagonal jitter perturbs the solve at relative order 1e-10.
  EXPECT_NEAR(phi[2], expected, 1e-9 * (1.0 + std::abs(expected)));
}

TEST(GaussianWorldTest, RejectsInfeasibleQueries) {
  auto world = GaussianWorldState::Create(1.0, 2);
  ASSERT_TRUE(world.ok());
  EXPECT_FALSE(world->Extend(Query(0, 1.5, {})).ok());
  ASSERT_TRUE(world->Extend(Query(0, 1, {})).ok());
  EXPECT_FALSE(world->Extend(Query(0, 1, {})).ok());
  const absl::Status psd = world->Extend(Query(0, 1, {1.0 + 1e-6}));
  EXPECT_EQ(psd.code(), absl::StatusCode::kFailedPrecondition);
  EXPECT_NE(psd.message().find("positive semidefinite"), std::string::npos);
  // Within tolerance of the boundary is accepted.
  EXPECT_TRUE(world->Extend(Query(0, 1, {1.0 + 1e-12})).ok());
  EXPECT_EQ(world->dimension(), 2);
}

TEST(GaussianWorldTest, SingularHistoryRequiresCovarianceInRange) {
  auto world = GaussianWorldState::Create(1.0, 8);
  ASSERT_TRUE(world.ok());
  ASSERT_TRUE(world->Extend(Query(0, 1, {})).ok());
  // The second statistic repeats the first.
  ASSERT_TRUE(world->Extend(Query(0, 1, {1.0})).ok());
  EXPECT_NEAR(world->realized()[1], world->realized()[0], 1e-9);
  // Correlating differently with two copies of one statistic is infeasible
  // even though v^T Sigma^+ v is small.
  const absl::Status off = world->Extend(Query(0, 1, {0.5, -0.5}));
  EXPECT_EQ(off.code(), absl::StatusCode::kFailedPrecondition);
  ASSERT_TRUE(world->Extend(Query(0, 1, {0.5, 0.5 + 1e-9})).ok());
  const QuerySpec stored = world->StoredQuery(2);
  EXPECT_EQ(stored.cov_with_history[0], 0.5);
  EXPECT_NEAR(stored.cov_with_history[1], 0.5, 1e-9);
  EXPECT_EQ(world->StoredQuery(1), Query(0, 1, {1.0}));
}

TEST(GaussianWorldTest, ExtendWorldLeavesInputUntouched) {
  auto world = GaussianWorldState::Create(1.0, 2);
  ASSERT_TRUE(world.ok());
  auto next = ExtendWorld(*world, Query(0, 1, {}));
  ASSERT_TRUE(next.ok());
  EXPECT_EQ(world->dimension(), 0);
  EXPECT_EQ(next->dimension(), 1);
}

TEST(GaussianWorldTest, CovarianceIsSymmetricAndBounded) {
  auto world = GaussianWorldState::Create(2.0, 3);
  ASSERT_TRUE(world.ok());
  ASSERT_TRUE(world->Extend(Query(0, 4, {})).ok());
  ASSERT_TRUE(world->Extend(Query(0, 3, {1.0})).ok());
  ASSERT_TRUE(world->Extend(Query(0, 2, {0.5, -0.5})).ok());
  const Eigen::MatrixXd cov = world->Covariance();
  EXPECT_EQ((cov - cov.transpose()).norm(), 0.0);
  EXPECT_DOUBLE_EQ(cov(2, 1), -0.5);
  EXPECT_LE(cov.diagonal().maxCoeff(), 4.0);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(cov);
  EXPECT_GE(eig.eigenvalues().minCoeff(), -1e-12);
}

// Sequential conditional draws reproduce the joint law N(mu, Sigma).
TEST(GaussianWorldTest, SequentialSamplingMatchesJointLaw) {
  const Eigen::Matrix3d cov{{1.0, 0.6, -0.3}, {0.6, 0.8, 0.1}, {-0.3, 0.1, 0.5}};
  const Eigen::Vector3d mean(0.5, -1.0, 2.0);
  const int reps = 100000;
  std::vector<std::vector<double>> ours(4, std::vector<double>(reps));
  std::vector<std::vector<double>> direct(4, std::vector<double>(reps));
  const Eigen::Matrix3d l = cov.llt().matrixL();
  OracleRng rng(17);
  for (int r = 0; r < reps; ++r) {
    auto world = GaussianWorldState::Create(1.0, 1000 + r);
    ASSERT_TRUE(world.ok());
    for (int i = 0; i < 3; ++i) {
      std::vector<double> v(i);
      for (int j = 0; j < i; ++j) v[j] = cov(i, j);
      ASSERT_TRUE(world->Extend(Query(mean[i], cov(i, i), v)).ok());
    }
    const Eigen::Vector3d z(rng.Normal(), rng.Normal(), rng.Normal());
    const Eigen::Vector3d x = mean + l * z;
    for (int i = 0; i < 3; ++i) {
      ours[i][r] = world->realized()[i];
      direct[i][r] = x[i];
    }
    ours[3][r] = world->realized()[0] - world->realized()[1] +
                 2.0 * world->realized()[2];
    direct[3][r] = x[0] - x[1] + 2.0 * x[2];
  }
  for (int i = 0; i < 4; ++i) {
    EXPECT_GT(testing::KolmogorovSmirnovPValue(ours[i], direct[i]), 0.01)
        << "coordinate " << i;
  }
}

TEST(GameHistoryTest, EnforcesReconstructionIdentity) {
  GameHistory history;
  const SharedRound shared{Query(0, 1, {}), 1.75,
                           mechanisms::NoiseSpec::Gaussian(0, 1)};
  EXPECT_TRUE(history.Append(shared, PrivateRound{0.5, 1.25}).ok());
  EXPECT_FALSE(history.Append(shared, PrivateRound{0.5, 1.0}).ok());
  EXPECT_EQ(history.rounds(), 1);
  EXPECT_EQ(history.shared().size(), history.player_private().size());
  EXPECT_EQ(history.shared()[0].release - history.player_private()[0].noise,
            history.player_private()[0].realized);
}

TEST(LinearQueryWorldTest, ZeroQueryHasNoVariance) {
  auto world = LinearQueryWorld::Create(3, 50, 1.0, 5);
  ASSERT_TRUE(world.ok());
  auto answer = LinearQuery(*world, Eigen::VectorXd::Zero(3));
  ASSERT_TRUE(answer.ok());
  EXPECT_EQ(answer->second, 0.0);
  EXPECT_EQ(answer->first.variance, 0.0);
}

TEST(LinearQueryWorldTest, UnitQueryVarianceAndRealizedValue) {
  auto world = LinearQueryWorld::Create(2, 100, 1.0, 5);
  ASSERT_TRUE(world.ok());
  auto answer = LinearQuery(*world, Eigen::Vector2d(1.0, 0.0));
  ASSERT_TRUE(answer.ok());
  EXPECT_DOUBLE_EQ(answer->first.variance, 0.01);
  EXPECT_NEAR(answer->second, world->data().row(0).mean(), 1e-14);
}

TEST(LinearQueryWorldTest, CovarianceWithEarlierQueries) {
  auto world = LinearQueryWorld::Create(2, 100, 2.0, 5);
  ASSERT_TRUE(world.ok());
  ASSERT_TRUE(LinearQuery(*world, Eigen::Vector2d(1.0, 0.0)).ok());
  auto orthogonal = LinearQuery(*world, Eigen::Vector2d(0.0, 1.0));
  ASSERT_TRUE(orthogonal.ok());
  EXPECT_EQ(orthogonal->first.cov_with_history, std::vector<double>{0.0});
  const Eigen::Vector2d t(0.6, 0.8);
  auto third = LinearQuery(*world, t);
  ASSERT_TRUE(third.ok());
  EXPECT_NEAR(third->first.cov_with_history[0], 0.6 * 4.0 / 100, 1e-15);
  EXPECT_NEAR(third->first.cov_with_history[1], 0.8 * 4.0 / 100, 1e-15);
  EXPECT_NEAR(third->first.variance, 4.0 / 100, 1e-15);
}

TEST(LinearQueryWorldTest, RejectsLongQueries) {
  auto world = LinearQueryWorld::Create(2, 10, 1.0, 5);
  ASSERT_TRUE(world.ok());
  EXPECT_FALSE(LinearQuery(*world, Eigen::Vector2d(1.0, 1e-3)).ok());
  EXPECT_TRUE(LinearQuery(*world, Eigen::Vector2d(1.0 + 1e-10, 0.0)).ok());
  EXPECT_FALSE(LinearQuery(*world, Eigen::Vector3d(1.0, 0.0, 0.0)).ok());
}

// Orthonormal queries on independent features are uncorrelated across
// datasets.
TEST(LinearQueryWorldTest, OrthonormalQueriesAreUncorrelated) {
  const int reps = 20000;
  const int d = 3;
  Eigen::MatrixXd answers(reps, d);
  const double s = std::sqrt(0.5);
  const Eigen::Vector3d t[3] = {{s, s, 0.0}, {s, -s, 0.0}, {0.0, 0.0, 1.0}};
  for (int r = 0; r < reps; ++r) {
    auto world = LinearQueryWorld::Create(d, 20, 1.0, 7000 + r);
    ASSERT_TRUE(world.ok());
    for (int i = 0; i < d; ++i) {
      auto answer = LinearQuery(*world, t[i]);
      ASSERT_TRUE(answer.ok());
      answers(r, i) = answer->second;
    }
  }
  const Eigen::MatrixXd centered =
      answers.rowwise() - answers.colwise().mean();
  const Eigen::MatrixXd cov = centered.transpose() * centered / (reps - 1);
  for (int i = 0; i < d; ++i) {
    EXPECT_NEAR(cov(i, i), 1.0 / 20, 4.0 * std::sqrt(2.0 / reps) / 20);
    for (int j = 0; j < i; ++j) {
      const double rho = cov(i, j) / std::sqrt(cov(i, i) * cov(j, j));
      EXPECT_LT(std::abs(rho), 4.0 / std::sqrt(reps));
    }
  }
}

}  // namespace
}  // namespace adalab::world
