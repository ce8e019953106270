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

#include "adalab/common/incremental_cholesky.h"

#include <cassert>
#include <cmath>

namespace adalab {

std::vector<double> IncrementalCholesky::ForwardSolve(
    std::span<const double> b) const {
  assert(static_cast<int>(b.size()) == size_);
  std::vector<double> y(b.begin(), b.end());
  for (int i = 0; i < size_; ++i) {
    const double* row = data_.data() + RowOffset(i);
    double s = y[i];
    for (int j = 0; j < i; ++j) s -= row[j] * y[j];
    y[i] = row[i] > 0.0 ? s / row[i] : 0.0;
  }
  return y;
}

std::vector<double> IncrementalCholesky::BackSolve(
    std::span<const double> y) const {
  assert(static_cast<int>(y.size()) == size_);
  std::vector<double> x(y.begin(), y.end());
  for (int j = size_ - 1; j >= 0; --j) {
    const double* row = data_.data() + RowOffset(j);
    x[j] = row[j] > 0.0 ? x[j] / row[j] : 0.0;
    const double xj = x[j];
    for (int i = 0; i < j; ++i) x[i] -= row[i] * xj;
  }
  return x;
}

double IncrementalCholesky::AppendSolved(std::span<const double> solved_cross,
                                         double diag) {
  assert(static_cast<int>(solved_cross.size()) == size_);
  double norm2 = 0.0;
  for (double l : solved_cross) norm2 += l * l;
  const double schur = diag - norm2;
  data_.insert(data_.end(), solved_cross.begin(), solved_cross.end());
  data_.push_back(schur > rank_tolerance_ ? std::sqrt(schur + jitter_) : 0.0);
  ++size_;
  return schur;
}

}  // namespace adalab
