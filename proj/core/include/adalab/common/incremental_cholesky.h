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

#ifndef ADALAB_COMMON_INCREMENTAL_CHOLESKY_H_
#define ADALAB_COMMON_INCREMENTAL_CHOLESKY_H_

#include <span>
#include <vector>

namespace adalab {

// Lower Cholesky factor L of (M + jitter * I) for a covariance matrix M that
// grows by one row and column at a time. Rows are stored packed, so appending
// never moves existing entries and a round costs one O(n^2) forward solve.
//
// A row whose Schur complement is at most `rank_tolerance` is linearly
// dependent on the earlier ones. It gets a zero pivot, and solves assign 0 to
// its component, which gives the pseudo-inverse solution on consistent
// right-hand sides. Other pivots are sqrt(schur + jitter).
class IncrementalCholesky {
 public:
  explicit IncrementalCholesky(double jitter = 0.0, double rank_tolerance = 0.0)
      : jitter_(jitter), rank_tolerance_(rank_tolerance) {}

  int size() const { return size_; }
  double jitter() const { return jitter_; }
  bool Degenerate(int i) const { return Pivot(i) == 0.0; }

  // Solves L y = b.
  std::vector<double> ForwardSolve(std::span<const double> b) const;
  // Solves L^T x = y.
  std::vector<double> BackSolve(std::span<const double> y) const;

  // Appends a row whose forward-solved cross covariance `solved_cross`
  // (= L^{-1} cross) is already known. Returns the Schur complement
  // diag - |solved_cross|^2.
  double AppendSolved(std::span<const double> solved_cross, double diag);

  double Append(std::span<const double> cross, double diag) {
    const std::vector<double> solved = ForwardSolve(cross);
    return AppendSolved(solved, diag);
  }

  double Pivot(int i) const { return data_[RowOffset(i) + i]; }
  double At(int i, int j) const { return j <= i ? data_[RowOffset(i) + j] : 0.0; }

 private:
  static std::size_t RowOffset(int i) {
    return static_cast<std::size_t>(i) * (i + 1) / 2;
  }

  double jitter_;
  double rank_tolerance_;
  int size_ = 0;
  std::vector<double> data_;
};

}  // namespace adalab

#endif  // ADALAB_COMMON_INCREMENTAL_CHOLESKY_H_
