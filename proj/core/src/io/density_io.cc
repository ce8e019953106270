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

#include "adalab/io/density_io.h"

#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "adalab/io/config_json.h"
#include "adalab/io/results_csv.h"

namespace adalab::io {

std::string FormatDensity(const DiscretizedDistribution& p) {
  std::string out;
  for (int i = 0; i < p.n_points(); ++i) {
    absl::StrAppend(&out, FormatNumber(p.point(i)), " ",
                    FormatNumber(p.weights()[i]), "\n");
  }
  return out;
}

absl::StatusOr<DiscretizedDistribution> ParseDensity(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<double> points;
  std::vector<double> weights;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    double x = 0.0;
    double w = 0.0;
    std::string rest;
    if (!(fields >> x >> w) || (fields >> rest)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "density line ", line_no, " must hold two numbers"));
    }
    points.push_back(x);
    weights.push_back(w);
  }
  if (points.size() < 2) {
    return absl::InvalidArgumentError("density needs at least two points");
  }
  const double spacing =
      (points.back() - points.front()) / (points.size() - 1);
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double expected = points.front() + i * spacing;
    if (std::abs(points[i] - expected) > 1e-6 * std::abs(spacing)) {
      return absl::InvalidArgumentError(absl::StrCat(
          "density grid is not uniform near point ", i + 1));
    }
  }
  return DiscretizedDistribution::FromWeights(points.front(), points.back(),
                                              std::move(weights));
}

absl::StatusOr<DiscretizedDistribution> LoadDensity(
    const std::filesystem::path& path) {
  absl::StatusOr<std::string> text = ReadFile(path);
  if (!text.ok()) return text.status();
  absl::StatusOr<DiscretizedDistribution> p = ParseDensity(*text);
  if (!p.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path.string(), ": ", p.status().message()));
  }
  return p;
}

}  // namespace adalab::io
