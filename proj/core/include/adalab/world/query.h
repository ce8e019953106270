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

#ifndef ADALAB_WORLD_QUERY_H_
#define ADALAB_WORLD_QUERY_H_

#include <vector>

namespace adalab::world {

// A statistic selected in round i: its population mean, variance, and its
// covariance with the statistics selected in rounds 1..i-1.
struct QuerySpec {
  double mean = 0.0;
  double variance = 0.0;
  std::vector<double> cov_with_history;

  friend bool operator==(const QuerySpec&, const QuerySpec&) = default;
};

}  // namespace adalab::world

#endif  // ADALAB_WORLD_QUERY_H_
