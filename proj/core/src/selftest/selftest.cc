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

#include "adalab/selftest/selftest.h"

#include <cmath>
#include <functional>
#include <utility>

#include "Eigen/Core"
#include "Eigen/LU"
#include "absl/strings/str_cat.h"
#include "adalab/bounds/bounds.h"
#include "adalab/common/counter_rng.h"
#include "adalab/common/discretized_distribution.h"
#include "adalab/common/normal.h"
#include "adalab/harness/game.h"
#include "adalab/harness/risk.h"
#include "adalab/signopt/dual_certificate.h"
#include "adalab/signopt/margin.h"
#include "adalab/signopt/optimal_noise.h"
#include "fmt/format.h"

namespace adalab::selftest {
namespace {

constexpr std::uint64_t kSeed = 20260101;

CheckResult OperatorIdentity(const std::string& name,
                             const SelftestOptions& options,
                             const std::function<double(double)>& f,
                             const std::function<double(double)>& expected) {
  const double sigma = 1.0;
  const signopt::UniformGrid grid{-20.0, 0.05, 801};
  std::vector<double> values(grid.n);
  for (int i = 0; i < grid.n; ++i) values[i] = f(grid.point(i));
  absl::StatusOr<std::vector<double>> applied =
      signopt::OperatorAApply(values, grid, sigma, options.quadrature);
  if (!applied.ok()) {
    return {name, false, std::string(applied.status().message())};
  }
  double worst = 0.0;
  for (int i : signopt::InteriorIndices(grid, sigma)) {
    worst = std::max(worst, std::abs((*applied)[i] - expected(grid.point(i))));
  }
  return {name, worst <= 1e-5, fmt::format("max error {:.3g} (tol 1e-05)", worst)};
}

Eigen::MatrixXd RandomPsd(CounterRng& rng, int n) {
  Eigen::MatrixXd b(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) b(i, j) = StandardNormal(rng);
  }
  return b * b.transpose() / n;
}

CheckResult RecursionOracle() {
  double worst = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    CounterRng rng(kSeed, trial, DrawPurpose::kData);
    const int n = 2 + trial % 5;
    const Eigen::MatrixXd full = RandomPsd(rng, n + 1);
    Eigen::VectorXd noise(n + 1);
    for (int i = 0; i <= n; ++i) noise[i] = 0.1 + 2.0 * rng.Uniform();
    Eigen::VectorXd r(n);
    for (int i = 0; i < n; ++i) r[i] = StandardNormal(rng);
    const Eigen::MatrixXd sigma = full.topLeftCorner(n, n);
    const Eigen::MatrixXd w = noise.head(n).asDiagonal();
    const Eigen::VectorXd v = full.col(n).head(n);
    const double lambda = full(n, n);
    const double w_sq = noise[n];
    const Eigen::MatrixXd p = (sigma + w).inverse();
    const double f_prev = r.dot(p * sigma * p * r);
    const Eigen::MatrixXd p_full =
        (full + Eigen::MatrixXd(noise.asDiagonal())).inverse();
    const Eigen::MatrixXd omega_full = p_full * full * p_full;
    Eigen::VectorXd mean(n + 1);
    mean.head(n) = r;
    mean[n] = v.dot(p * r);
    const double var = lambda + w_sq - v.dot(p * v);
    const double oracle = mean.dot(omega_full * mean) + omega_full(n, n) * var;
    absl::StatusOr<double> value =
        bounds::RecursiveFkUpdate(f_prev, sigma, w, v, lambda, w_sq);
    if (!value.ok()) return {"recursion_oracle", false,
                             std::string(value.status().message())};
    worst = std::max(worst, std::abs(*value - oracle) / (1.0 + std::abs(oracle)));
  }
  return {"recursion_oracle", worst <= 1e-10,
          fmt::format("200 instances, max relative error {:.3g}", worst)};
}

CheckResult BoundArithmetic() {
  struct Case {
    double got;
    double want;
  };
  const double schedule[] = {std::sqrt(3.0), std::sqrt(3.0), std::sqrt(3.0),
                             std::sqrt(3.0), std::sqrt(3.0), std::sqrt(3.0),
                             std::sqrt(3.0), std::sqrt(3.0), std::sqrt(3.0),
                             0.0};
  const double lambdas[] = {1.0, 4.0};
  const Case cases[] = {
      {bounds::OneStepBiasSqBound(2, 1, 1), 1.0},
      {bounds::OneStepBiasSqBound(5, 2, 2), 16.0},
      {bounds::OneStepMseBound(10, 1), 7.0},
      {bounds::SharpnessFloor(2, 1, 1), 0.5},
      {bounds::ExpectedSupBiasSq(lambdas, 1, std::sqrt(2.0)), 1.0},
      {bounds::KStepBiasSqBound(1, schedule), 4.0},
      {bounds::KStepMseBound(101, 1), 22.0},
      {bounds::MinimaxLowerBound(4, 1), 0.5},
      {signopt::MarginLowerBound(1, 2), 1 / (2 * kSqrt3) - 1 / (16 * kSqrt3)},
  };
  int failures = 0;
  for (const Case& c : cases) {
    if (std::abs(c.got - c.want) > 1e-12 * (1.0 + std::abs(c.want))) {
      ++failures;
    }
  }
  return {"bound_arithmetic", failures == 0,
          fmt::format("{} of {} cases match", std::size(cases) - failures,
                      std::size(cases))};
}

CheckResult DualCertificate() {
  const double sigma = 1.0;
  const double w = 2.0;
  absl::StatusOr<signopt::DualCertificate> cert =
      signopt::DualCertificateFor(sigma, w);
  signopt::GridConfig grid;
  grid.n_points = 201;
  absl::StatusOr<signopt::OptimalNoise> primal =
      signopt::SolveOptimalNoise(sigma, w, grid);
  if (!cert.ok() || !primal.ok()) {
    return {"dual_certificate", false, "solver failed"};
  }
  return {"dual_certificate",
          cert->objective_bound <= primal->primal_objective + 1e-4,
          fmt::format("bound {:.6f} <= primal {:.6f}", cert->objective_bound,
                      primal->primal_objective)};
}

CheckResult MarginPointMass() {
  absl::StatusOr<DiscretizedDistribution> p =
      DiscretizedDistribution::FromWeights(-1.0, 1.0, {0.0, 1.0, 0.0});
  absl::StatusOr<double> margin = signopt::MarginRisk(*p, 1.0);
  if (!margin.ok()) return {"margin_point_mass", false, "evaluation failed"};
  const double err = std::abs(*margin - kSqrtTwoOverPi);
  return {"margin_point_mass", err <= 1e-6,
          fmt::format("error {:.3g} against sqrt(2/pi)", err)};
}

CheckResult Determinism() {
  harness::ExperimentConfig config;
  config.k = 6;
  config.sigma = 1.0;
  config.mechanism = *mechanisms::DefaultSchedule(config.k, config.sigma);
  config.adversary.kind = adversaries::AdversaryKind::kKStepGreedy;
  config.adversary.sigma = config.sigma;
  config.replications = 600;
  config.seed = kSeed;
  absl::StatusOr<harness::RiskReport> one = harness::EstimateRisk(config, 1);
  absl::StatusOr<harness::RiskReport> two = harness::EstimateRisk(config, 3);
  absl::StatusOr<world::GameHistory> a = harness::RunGame(config, 17);
  absl::StatusOr<world::GameHistory> b = harness::RunGame(config, 17);
  if (!one.ok() || !two.ok() || !a.ok() || !b.ok()) {
    absl::Status s = !one.ok() ? one.status() : !two.ok() ? two.status()
                     : !a.ok()  ? a.status()
                                : b.status();
    return {"determinism", false, std::string(s.message())};
  }
  bool same = *a == *b;
  for (int i = 0; i < config.k; ++i) {
    same = same && one->per_round[i].mse_hat == two->per_round[i].mse_hat &&
           one->per_round[i].bias_hat == two->per_round[i].bias_hat;
  }
  return {"determinism", same, "replays and worker counts agree bitwise"};
}

CheckResult Reconstruction() {
  harness::ExperimentConfig config;
  config.k = 8;
  config.mechanism = *mechanisms::DefaultSchedule(config.k, config.sigma);
  config.adversary.kind = adversaries::AdversaryKind::kBayesSign;
  config.seed = kSeed;
  absl::StatusOr<world::GameHistory> game = harness::RunGame(config, 3);
  if (!game.ok()) return {"reconstruction", false, "game failed"};
  bool exact = true;
  for (int i = 0; i < game->rounds(); ++i) {
    exact = exact && game->shared()[i].release ==
                         game->player_private()[i].realized +
                             game->player_private()[i].noise;
  }
  return {"reconstruction", exact, "release = realized + noise in every round"};
}

}  // namespace

bool SelftestReport::ok() const {
  for (const CheckResult& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::string SelftestReport::Format() const {
  std::string out;
  for (const CheckResult& c : checks) {
    absl::StrAppend(&out, c.passed ? "PASS " : "FAIL ", c.name, ": ",
                    c.detail, "\n");
  }
  return out;
}

SelftestReport RunSelftest(const SelftestOptions& options) {
  const double s2 = 1.0;
  SelftestReport report;
  report.checks.push_back(OperatorIdentity(
      "operator_identity_A1", options, [](double) { return 1.0; },
      [](double) { return 0.0; }));
  report.checks.push_back(OperatorIdentity(
      "operator_identity_Ax", options, [](double x) { return x; },
      [&](double) { return 2.0 * s2; }));
  report.checks.push_back(OperatorIdentity(
      "operator_identity_Ax2", options, [](double x) { return x * x; },
      [&](double x) { return 4.0 * s2 * x; }));
  report.checks.push_back(OperatorIdentity(
      "operator_identity_Ax3", options, [](double x) { return x * x * x; },
      [&](double x) { return 6.0 * s2 * x * x + 6.0 * s2 * s2; }));
  report.checks.push_back(RecursionOracle());
  report.checks.push_back(BoundArithmetic());
  report.checks.push_back(MarginPointMass());
  report.checks.push_back(DualCertificate());
  report.checks.push_back(Reconstruction());
  report.checks.push_back(Determinism());
  return report;
}

}  // namespace adalab::selftest
