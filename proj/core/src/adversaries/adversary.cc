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

#include "adalab/adversaries/adversary.h"

#include <cmath>
#include <utility>

#include "absl/strings/str_cat.h"
#include "adalab/adversaries/bayes_sign.h"

namespace adalab::adversaries {
namespace {

class OrthogonalThenOneStep : public Adversary {
 public:
  absl::StatusOr<world::QuerySpec> Select(
      const AdversaryView& view) const override {
    if (view.round < view.k) {
      return OrthogonalQuery(view.posterior.size(), view.posterior.sigma());
    }
    return SelectLeastFavorable(view.posterior);
  }
};

class KStepGreedy : public Adversary {
 public:
  absl::StatusOr<world::QuerySpec> Select(
      const AdversaryView& view) const override {
    return SelectLeastFavorable(view.posterior);
  }
};

class BayesSign : public Adversary {
 public:
  absl::StatusOr<world::QuerySpec> Select(
      const AdversaryView& view) const override {
    const double sigma = view.posterior.sigma();
    if (view.round < view.k || view.k == 1) {
      return OrthogonalQuery(static_cast<int>(view.history.size()), sigma);
    }
    return SelectBayesFinal(view.history, sigma,
                            view.declared.DeclaredMean());
  }
};

class FixedSequence : public Adversary {
 public:
  explicit FixedSequence(std::vector<world::QuerySpec> queries)
      : queries_(std::move(queries)) {}

  absl::StatusOr<world::QuerySpec> Select(
      const AdversaryView& view) const override {
    return queries_[view.round - 1];
  }

 private:
  std::vector<world::QuerySpec> queries_;
};

}  // namespace

absl::string_view AdversaryKindName(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::kOrthogonalThenOneStep:
      return "orthogonal_then_one_step";
    case AdversaryKind::kKStepGreedy:
      return "k_step_greedy";
    case AdversaryKind::kBayesSign:
      return "bayes_sign";
    case AdversaryKind::kFixedSequence:
      return "fixed_sequence";
  }
  return "unknown";
}

absl::StatusOr<AdversaryKind> ParseAdversaryKind(absl::string_view name) {
  for (AdversaryKind k :
       {AdversaryKind::kOrthogonalThenOneStep, AdversaryKind::kKStepGreedy,
        AdversaryKind::kBayesSign, AdversaryKind::kFixedSequence}) {
    if (AdversaryKindName(k) == name) return k;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown adversary kind '", name,
      "' (expected orthogonal_then_one_step, k_step_greedy, bayes_sign or "
      "fixed_sequence)"));
}

absl::Status AdversaryConfig::Validate(int k) const {
  if (!(sigma > 0.0) || !std::isfinite(sigma)) {
    return absl::InvalidArgumentError(
        absl::StrCat("adversary sigma must be positive, got ", sigma));
  }
  if (kind == AdversaryKind::kFixedSequence) {
    if (static_cast<int>(queries.size()) != k) {
      return absl::InvalidArgumentError(
          absl::StrCat("fixed_sequence needs k = ", k, " queries, got ",
                       queries.size()));
    }
    for (int i = 0; i < k; ++i) {
      if (static_cast<int>(queries[i].cov_with_history.size()) != i) {
        return absl::InvalidArgumentError(absl::StrCat(
            "query ", i + 1, " must have ", i, " covariance entries"));
      }
    }
  } else if (!queries.empty()) {
    return absl::InvalidArgumentError(
        "queries is only valid for the fixed_sequence adversary");
  }
  return absl::OkStatus();
}

absl::StatusOr<std::unique_ptr<Adversary>> MakeAdversary(
    const AdversaryConfig& config, int k) {
  if (absl::Status s = config.Validate(k); !s.ok()) return s;
  switch (config.kind) {
    case AdversaryKind::kOrthogonalThenOneStep:
      return std::make_unique<OrthogonalThenOneStep>();
    case AdversaryKind::kKStepGreedy:
      return std::make_unique<KStepGreedy>();
    case AdversaryKind::kBayesSign:
      return std::make_unique<BayesSign>();
    case AdversaryKind::kFixedSequence:
      return std::make_unique<FixedSequence>(config.queries);
  }
  return absl::InvalidArgumentError("unknown adversary kind");
}

world::QuerySpec OrthogonalQuery(int dimension, double sigma) {
  world::QuerySpec q;
  q.variance = sigma * sigma;
  q.cov_with_history.assign(dimension, 0.0);
  return q;
}

world::QuerySpec SelectLeastFavorable(const PosteriorTracker& posterior) {
  world::QuerySpec q;
  q.variance = posterior.sigma() * posterior.sigma();
  q.cov_with_history = posterior.LeastFavorable().v;
  return q;
}

absl::StatusOr<world::QuerySpec> SelectOneStep(
    world::SharedTranscript transcript, double sigma) {
  absl::StatusOr<PosteriorTracker> posterior =
      PosteriorTracker::FromTranscript(transcript, sigma);
  if (!posterior.ok()) return posterior.status();
  return SelectLeastFavorable(*posterior);
}

absl::StatusOr<world::QuerySpec> SelectKStepGreedy(
    world::SharedTranscript transcript, double sigma) {
  return SelectOneStep(transcript, sigma);
}

}  // namespace adalab::adversaries
