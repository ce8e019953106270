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

#include "adalab/io/config_json.h"

#include <cmath>
#include <fstream>
#include <initializer_list>
#include <limits>
#include <sstream>
#include <utility>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "adalab/io/density_io.h"
#include "json.hpp"

namespace adalab::io {
namespace {

using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

absl::Status RejectUnknownKeys(const Json& object, absl::string_view where,
                               std::initializer_list<absl::string_view> keys) {
  for (auto it = object.begin(); it != object.end(); ++it) {
    bool known = false;
    for (absl::string_view k : keys) known = known || it.key() == k;
    if (!known) {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown key '", it.key(), "' in ", where,
                       " (allowed: ", absl::StrJoin(keys, ", "), ")"));
    }
  }
  return absl::OkStatus();
}

absl::StatusOr<double> GetNumber(const Json& object, absl::string_view key) {
  const Json& v = object.at(std::string(key));
  if (!v.is_number() || !std::isfinite(v.get<double>())) {
    return absl::InvalidArgumentError(
        absl::StrCat(key, " must be a finite number"));
  }
  return v.get<double>();
}

absl::StatusOr<std::int64_t> GetInteger(const Json& object,
                                        absl::string_view key) {
  const Json& v = object.at(std::string(key));
  if (!v.is_number_integer()) {
    return absl::InvalidArgumentError(absl::StrCat(key, " must be an integer"));
  }
  if (v.is_number_unsigned() &&
      v.get<std::uint64_t>() >
          static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
    return absl::InvalidArgumentError(absl::StrCat(key, " is too large"));
  }
  return v.get<std::int64_t>();
}

absl::StatusOr<std::string> GetString(const Json& object,
                                      absl::string_view key) {
  const Json& v = object.at(std::string(key));
  if (!v.is_string()) {
    return absl::InvalidArgumentError(absl::StrCat(key, " must be a string"));
  }
  return v.get<std::string>();
}

absl::StatusOr<std::vector<double>> GetNumberArray(const Json& object,
                                                   absl::string_view key) {
  const Json& v = object.at(std::string(key));
  if (!v.is_array()) {
    return absl::InvalidArgumentError(
        absl::StrCat(key, " must be an array of numbers"));
  }
  std::vector<double> out;
  for (const Json& e : v) {
    if (!e.is_number() || !std::isfinite(e.get<double>())) {
      return absl::InvalidArgumentError(
          absl::StrCat(key, " must be an array of finite numbers"));
    }
    out.push_back(e.get<double>());
  }
  return out;
}

#define ADALAB_ASSIGN_OR_RETURN(lhs, expr) \
  auto lhs##_or = (expr);                  \
  if (!lhs##_or.ok()) return lhs##_or.status(); \
  auto lhs = *std::move(lhs##_or)

absl::StatusOr<mechanisms::MechanismConfig> ParseMechanism(
    const Json& j, int k, double sigma, const std::filesystem::path& base) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError("mechanism must be an object");
  }
  if (absl::Status s = RejectUnknownKeys(
          j, "mechanism", {"kind", "w_schedule", "w", "final_w", "table_path"});
      !s.ok()) {
    return s;
  }
  if (!j.contains("kind")) {
    return absl::InvalidArgumentError("mechanism.kind is required");
  }
  ADALAB_ASSIGN_OR_RETURN(kind_name, GetString(j, "kind"));
  ADALAB_ASSIGN_OR_RETURN(kind, mechanisms::ParseMechanismKind(kind_name));
  if (j.contains("w_schedule") && (j.contains("w") || j.contains("final_w"))) {
    return absl::InvalidArgumentError(
        "mechanism takes either w_schedule or w/final_w, not both");
  }
  mechanisms::MechanismConfig config;
  config.kind = kind;
  std::shared_ptr<const DiscretizedDistribution> table;
  if (j.contains("table_path")) {
    if (kind != mechanisms::MechanismKind::kCustom) {
      return absl::InvalidArgumentError(
          "mechanism.table_path is only valid for kind custom");
    }
    ADALAB_ASSIGN_OR_RETURN(path, GetString(j, "table_path"));
    std::filesystem::path resolved(path);
    if (resolved.is_relative() && !base.empty()) resolved = base / resolved;
    ADALAB_ASSIGN_OR_RETURN(loaded, LoadDensity(resolved));
    config.table_path = path;
    table = std::make_shared<const DiscretizedDistribution>(std::move(loaded));
  } else if (kind == mechanisms::MechanismKind::kCustom) {
    return absl::InvalidArgumentError(
        "mechanism.table_path is required for kind custom");
  }
  if (j.contains("w_schedule")) {
    ADALAB_ASSIGN_OR_RETURN(schedule, GetNumberArray(j, "w_schedule"));
    config.w_schedule = std::move(schedule);
  } else {
    double w = std::pow(k - 1.0, 0.25) * sigma;
    if (kind == mechanisms::MechanismKind::kCustom) {
      w = std::sqrt(table->Variance());
    }
    double final_w = 0.0;
    if (j.contains("w")) {
      ADALAB_ASSIGN_OR_RETURN(value, GetNumber(j, "w"));
      w = value;
    }
    if (j.contains("final_w")) {
      ADALAB_ASSIGN_OR_RETURN(value, GetNumber(j, "final_w"));
      final_w = value;
    }
    ADALAB_ASSIGN_OR_RETURN(built,
                            mechanisms::ConstantSchedule(kind, k, w, final_w));
    config.w_schedule = std::move(built.w_schedule);
  }
  config.table = std::move(table);
  if (absl::Status s = config.Validate(k); !s.ok()) {
    return absl::InvalidArgumentError(absl::StrCat("mechanism: ", s.message()));
  }
  return config;
}

absl::StatusOr<world::QuerySpec> ParseQuery(const Json& j) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError("each query must be an object");
  }
  if (absl::Status s = RejectUnknownKeys(
          j, "adversary.queries", {"mean", "variance", "cov_with_history"});
      !s.ok()) {
    return s;
  }
  world::QuerySpec q;
  if (j.contains("mean")) {
    ADALAB_ASSIGN_OR_RETURN(mean, GetNumber(j, "mean"));
    q.mean = mean;
  }
  if (!j.contains("variance")) {
    return absl::InvalidArgumentError("query.variance is required");
  }
  ADALAB_ASSIGN_OR_RETURN(variance, GetNumber(j, "variance"));
  if (!(variance >= 0.0)) {
    return absl::InvalidArgumentError("query.variance must be >= 0");
  }
  q.variance = variance;
  if (j.contains("cov_with_history")) {
    ADALAB_ASSIGN_OR_RETURN(cov, GetNumberArray(j, "cov_with_history"));
    q.cov_with_history = std::move(cov);
  }
  return q;
}

absl::StatusOr<adversaries::AdversaryConfig> ParseAdversary(const Json& j,
                                                            int k,
                                                            double sigma) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError("adversary must be an object");
  }
  if (absl::Status s =
          RejectUnknownKeys(j, "adversary", {"kind", "sigma", "queries"});
      !s.ok()) {
    return s;
  }
  if (!j.contains("kind")) {
    return absl::InvalidArgumentError("adversary.kind is required");
  }
  ADALAB_ASSIGN_OR_RETURN(kind_name, GetString(j, "kind"));
  ADALAB_ASSIGN_OR_RETURN(kind, adversaries::ParseAdversaryKind(kind_name));
  adversaries::AdversaryConfig config;
  config.kind = kind;
  config.sigma = sigma;
  if (j.contains("sigma")) {
    ADALAB_ASSIGN_OR_RETURN(value, GetNumber(j, "sigma"));
    config.sigma = value;
  }
  if (j.contains("queries")) {
    if (!j.at("queries").is_array()) {
      return absl::InvalidArgumentError("adversary.queries must be an array");
    }
    for (const Json& e : j.at("queries")) {
      ADALAB_ASSIGN_OR_RETURN(q, ParseQuery(e));
      config.queries.push_back(std::move(q));
    }
  }
  if (absl::Status s = config.Validate(k); !s.ok()) {
    return absl::InvalidArgumentError(absl::StrCat("adversary: ", s.message()));
  }
  return config;
}

absl::StatusOr<harness::ExperimentConfig> ParseExperiment(
    const Json& j, const std::filesystem::path& base) {
  if (!j.is_object()) {
    return absl::InvalidArgumentError("an experiment must be a JSON object");
  }
  if (absl::Status s = RejectUnknownKeys(
          j, "experiment",
          {"k", "sigma", "replications", "seed", "conjunction", "mechanism",
           "adversary"});
      !s.ok()) {
    return s;
  }
  for (absl::string_view key : {"k", "sigma", "mechanism", "adversary"}) {
    if (!j.contains(std::string(key))) {
      return absl::InvalidArgumentError(absl::StrCat(key, " is required"));
    }
  }
  harness::ExperimentConfig config;
  ADALAB_ASSIGN_OR_RETURN(k, GetInteger(j, "k"));
  if (k < 1 || k > 1000000) {
    return absl::InvalidArgumentError(
        absl::StrCat("k must be ≥ 1 and ≤ 1000000 (got ", k, ")"));
  }
  config.k = static_cast<int>(k);
  ADALAB_ASSIGN_OR_RETURN(sigma, GetNumber(j, "sigma"));
  if (!(sigma > 0.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("sigma must be > 0 (got ", sigma, ")"));
  }
  config.sigma = sigma;
  if (j.contains("replications")) {
    ADALAB_ASSIGN_OR_RETURN(reps, GetInteger(j, "replications"));
    if (reps < 1) {
      return absl::InvalidArgumentError(
          absl::StrCat("replications must be ≥ 1 (got ", reps, ")"));
    }
    config.replications = reps;
  }
  if (j.contains("seed")) {
    const Json& seed = j.at("seed");
    if (!seed.is_number_integer() ||
        (!seed.is_number_unsigned() && seed.get<std::int64_t>() < 0)) {
      return absl::InvalidArgumentError(
          "seed must be an integer in [0, 2^64)");
    }
    config.seed = seed.get<std::uint64_t>();
  }
  if (j.contains("conjunction")) {
    ADALAB_ASSIGN_OR_RETURN(name, GetString(j, "conjunction"));
    ADALAB_ASSIGN_OR_RETURN(conjunction, harness::ParseConjunction(name));
    config.conjunction = conjunction;
  }
  ADALAB_ASSIGN_OR_RETURN(mechanism,
                          ParseMechanism(j.at("mechanism"), config.k, sigma,
                                         base));
  config.mechanism = std::move(mechanism);
  ADALAB_ASSIGN_OR_RETURN(adversary,
                          ParseAdversary(j.at("adversary"), config.k, sigma));
  config.adversary = std::move(adversary);
  if (absl::Status s = config.Validate(); !s.ok()) return s;
  return config;
}

OrderedJson ToJson(const harness::ExperimentConfig& config) {
  OrderedJson mechanism;
  mechanism["kind"] = std::string(MechanismKindName(config.mechanism.kind));
  mechanism["w_schedule"] = config.mechanism.w_schedule;
  if (!config.mechanism.table_path.empty()) {
    mechanism["table_path"] = config.mechanism.table_path;
  }
  OrderedJson adversary;
  adversary["kind"] = std::string(AdversaryKindName(config.adversary.kind));
  adversary["sigma"] = config.adversary.sigma;
  if (!config.adversary.queries.empty()) {
    OrderedJson queries = OrderedJson::array();
    for (const world::QuerySpec& q : config.adversary.queries) {
      OrderedJson e;
      e["mean"] = q.mean;
      e["variance"] = q.variance;
      e["cov_with_history"] = q.cov_with_history;
      queries.push_back(std::move(e));
    }
    adversary["queries"] = std::move(queries);
  }
  OrderedJson j;
  j["k"] = config.k;
  j["sigma"] = config.sigma;
  j["replications"] = config.replications;
  j["seed"] = config.seed;
  j["conjunction"] = std::string(ConjunctionName(config.conjunction));
  j["mechanism"] = std::move(mechanism);
  j["adversary"] = std::move(adversary);
  return j;
}

}  // namespace

absl::StatusOr<std::string> ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return absl::NotFoundError(
        absl::StrCat("cannot open ", path.string()));
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

absl::StatusOr<std::vector<harness::ExperimentConfig>> ParseConfigText(
    absl::string_view text, const std::filesystem::path& base_dir) {
  const Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) {
    return absl::InvalidArgumentError("config is not well-formed JSON");
  }
  std::vector<harness::ExperimentConfig> out;
  if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) {
      absl::StatusOr<harness::ExperimentConfig> config =
          ParseExperiment(j[i], base_dir);
      if (!config.ok()) {
        return absl::InvalidArgumentError(absl::StrCat(
            "sweep entry ", i, ": ", config.status().message()));
      }
      out.push_back(*std::move(config));
    }
    return out;
  }
  ADALAB_ASSIGN_OR_RETURN(config, ParseExperiment(j, base_dir));
  out.push_back(std::move(config));
  return out;
}

absl::StatusOr<std::vector<harness::ExperimentConfig>> ParseConfigFile(
    const std::filesystem::path& path) {
  ADALAB_ASSIGN_OR_RETURN(text, ReadFile(path));
  absl::StatusOr<std::vector<harness::ExperimentConfig>> configs =
      ParseConfigText(text, path.parent_path());
  if (!configs.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path.string(), ": ", configs.status().message()));
  }
  return configs;
}

std::string EmitConfig(const harness::ExperimentConfig& config) {
  return ToJson(config).dump(2);
}

std::string EmitConfigs(const std::vector<harness::ExperimentConfig>& configs) {
  OrderedJson j = OrderedJson::array();
  for (const harness::ExperimentConfig& c : configs) j.push_back(ToJson(c));
  return j.dump(2);
}

absl::StatusOr<NoiseOptConfig> ParseNoiseOptText(absl::string_view text) {
  const Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    return absl::InvalidArgumentError(
        "noise optimization config must be a JSON object");
  }
  if (absl::Status s =
          RejectUnknownKeys(j, "noiseopt", {"sigma", "w_values", "n_points"});
      !s.ok()) {
    return s;
  }
  NoiseOptConfig config;
  if (j.contains("sigma")) {
    ADALAB_ASSIGN_OR_RETURN(sigma, GetNumber(j, "sigma"));
    if (!(sigma > 0.0)) {
      return absl::InvalidArgumentError("sigma must be > 0");
    }
    config.sigma = sigma;
  }
  if (!j.contains("w_values")) {
    return absl::InvalidArgumentError("w_values is required");
  }
  ADALAB_ASSIGN_OR_RETURN(ws, GetNumberArray(j, "w_values"));
  for (double w : ws) {
    if (!(w >= 0.0)) {
      return absl::InvalidArgumentError("w_values must be >= 0");
    }
  }
  config.w_values = std::move(ws);
  if (j.contains("n_points")) {
    ADALAB_ASSIGN_OR_RETURN(n, GetInteger(j, "n_points"));
    if (n < 3 || n % 2 == 0 || n > 20001) {
      return absl::InvalidArgumentError(
          "n_points must be odd and in [3, 20001]");
    }
    config.n_points = static_cast<int>(n);
  }
  return config;
}

absl::StatusOr<NoiseOptConfig> ParseNoiseOptFile(
    const std::filesystem::path& path) {
  ADALAB_ASSIGN_OR_RETURN(text, ReadFile(path));
  return ParseNoiseOptText(text);
}

}  // namespace adalab::io
