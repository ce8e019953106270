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

#ifndef ADALAB_ADVERSARIES_BAYES_SIGN_H_
#define ADALAB_ADVERSARIES_BAYES_SIGN_H_

#include <vector>

#include "absl/status/statusor.h"
#include "adalab/mechanisms/noise_spec.h"
#include "adalab/world/game_history.h"
#include "adalab/world/query.h"

namespace adalab::adversaries {

struct SignEstimate {
  std::vector<int> signs;
  std::vector<double> per_round_loglr;
};

// log P(A | X > 0) - log P(A | X < 0) for A = mu + X + Z with X ~ N(0,
// sigma^2) independent of Z ~ noise. Closed forms are used for every
// family; tabulated noise is a finite mixture of atoms, so its ratio is an
// exact finite sum. The result is +-infinity when one side is impossible.
absl::StatusOr<double> SignLogLikelihoodRatio(double a, double mu,
                                              const mechanisms::NoiseSpec& noise,
                                              double sigma);

// The classifier maximizing E[s X]: the sign of E[X | A], +1 on ties. For
// Gaussian, uniform and point-mass noise this is the sign of A - mu - mean,
// the same decision as the likelihood-ratio test. For tabulated noise the two
// can differ because the ratio oscillates with the lattice offset of A.
absl::StatusOr<int> BayesSignClassify(double a, double mu,
                                      const mechanisms::NoiseSpec& noise,
                                      double sigma);

// Classifies every round of the transcript from its own release and
// declared noise.
absl::StatusOr<SignEstimate> EstimateSigns(world::SharedTranscript transcript,
                                           double sigma);

// The final query: variance sigma^2 and covariance +-sigma^2/sqrt(k-1) times
// the estimated signs, with the sign chosen to agree with the declared mean
// of the final noise (+ when it is zero). Requires the transcript to hold
// k - 1 >= 1 uncorrelated queries of variance sigma^2.
absl::StatusOr<world::QuerySpec> SelectBayesFinal(
    world::SharedTranscript transcript, double sigma, double declared_zk_mean);

}  // namespace adalab::adversaries

#endif  // ADALAB_ADVERSARIES_BAYES_SIGN_H_
