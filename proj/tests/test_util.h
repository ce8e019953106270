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

#ifndef ADALAB_TESTS_TEST_UTIL_H_
#define ADALAB_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "Eigen/Core"
#include "Eigen/LU"

namespace adalab::testing {

// Oracles draw from the standard library engine so that they share nothing
// with the generators under test.
class OracleRng {
 public:
  explicit OracleRng(std::uint64_t seed) : engine_(seed) {}
  double Normal() { return normal_(engine_); }
  double Uniform() { return uniform_(engine_); }
  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_;
  std::uniform_real_distribution<double> uniform_;
};

// Asymptotic two-sample Kolmogorov-Smirnov p-value.
inline double KolmogorovSmirnovPValue(std::vector<double> a,
                                      std::vector<double> b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  const double na = static_cast<double>(a.size());
  const double nb = static_cast<double>(b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  double d = 0.0;
  while (i < a.size() && j < b.size()) {
    const double x = std::min(a[i], b[j]);
    while (i < a.size() && a[i] <= x) ++i;
    while (j < b.size() && b[j] <= x) ++j;
    d = std::max(d, std::abs(i / na - j / nb));
  }
  const double ne = na * nb / (na + nb);
  const double lambda = (std::sqrt(ne) + 0.12 + 0.11 / std::sqrt(ne)) * d;
  if (lambda < 0.2) return 1.0;
  double p = 0.0;
  for (int k = 1; k <= 100; ++k) {
    p += 2.0 * ((k % 2 == 1) ? 1.0 : -1.0) * std::exp(-2.0 * k * k * lambda * lambda);
  }
  return std::clamp(p, 0.0, 1.0);
}

// Random symmetric positive semidefinite matrix A A^T / n.
inline Eigen::MatrixXd RandomPsd(OracleRng& rng, int n) {
  Eigen::MatrixXd a(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a(i, j) = rng.Normal();
  }
  return a * a.transpose() / n;
}

struct Moments {
  double mean = 0.0;
  double variance = 0.0;
  double se = 0.0;
};

inline Moments SampleMoments(const std::vector<double>& x) {
  Moments m;
  for (double v : x) m.mean += v;
  m.mean /= x.size();
  for (double v : x) m.variance += (v - m.mean) * (v - m.mean);
  m.variance /= x.size() - 1;
  m.se = std::sqrt(m.variance / x.size());
  return m;
}

// A random augmented covariance of size n + 1 and positive noise variances:
// the first n rows are the history, the last one the new query.
struct FkInstance {
  Eigen::MatrixXd full;
  Eigen::VectorXd noise;
  int n = 0;
};

inline FkInstance RandomFkInstance(OracleRng& rng, int n) {
  FkInstance inst{RandomPsd(rng, n + 1), Eigen::VectorXd(n + 1), n};
  for (int i = 0; i <= n; ++i) inst.noise[i] = 0.05 + 3.0 * rng.Uniform();
  return inst;
}

// f = r^T P Sigma P r for the observed residual r, with P = (Sigma + W)^-1.
// Its expectation after one more round is E[r'^T P' Sigma' P' r'] with the
// new residual Gaussian given r, evaluated with E[x^T M x] = tr(M C) + m^T M m.
inline double FkTraceOracle(const FkInstance& inst, const Eigen::VectorXd& r) {
  const int n = inst.n;
  const Eigen::MatrixXd s = inst.full.topLeftCorner(n, n);
  const Eigen::MatrixXd w = inst.noise.head(n).asDiagonal();
  const Eigen::VectorXd v = inst.full.col(n).head(n);
  const Eigen::MatrixXd p = (s + w).inverse();
  const Eigen::MatrixXd p_next =
      (inst.full + Eigen::MatrixXd(inst.noise.asDiagonal())).inverse();
  const Eigen::MatrixXd m = p_next * inst.full * p_next;
  Eigen::VectorXd mean(n + 1);
  mean << r, v.dot(p * r);
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(n + 1, n + 1);
  cov(n, n) = inst.full(n, n) + inst.noise[n] - v.dot(p * v);
  return (m * cov).trace() + mean.dot(m * mean);
}

// Composite Simpson rule on [a, b] with n (even) panels.
template <typename F>
double Simpson(F f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += (i % 2 == 1 ? 4.0 : 2.0) * f(a + i * h);
  return s * h / 3.0;
}

}  // namespace adalab::testing

#endif  // ADALAB_TESTS_TEST_UTIL_H_
