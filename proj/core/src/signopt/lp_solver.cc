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

#include "adalab/signopt/lp_solver.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>
#include <vector>

#include "Eigen/Cholesky"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"

namespace adalab::signopt {
namespace {

constexpr Eigen::Index kBlock = 64;
// Rows whose singleton term is below this fraction of their dense part go
// through the Schur complement.
constexpr double kNegligibleDiagonal = 1e-12;

// Factorizes a diag(d) a^T and solves with it.
//
// Columns with one nonzero contribute a diagonal term S. When the remaining
// dense columns are fewer than the rows, the solve goes through the smaller
// system H = diag(1/d) + A1^T S1^-1 A1 over the dense columns, where A1 holds
// the rows whose S is not negligible, plus a Schur complement for the other
// rows. Otherwise the m x m normal matrix is formed directly.
class NormalEquations {
 public:
  explicit NormalEquations(const Eigen::SparseMatrix<double>& a) : a_(a) {
    const Eigen::Index m = a.rows();
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const Eigen::Index nnz = a.outerIndexPtr()[j + 1] - a.outerIndexPtr()[j];
      if (nnz == 1) {
        Eigen::SparseMatrix<double>::InnerIterator it(a, j);
        singleton_row_.push_back(it.row());
        singleton_value_.push_back(it.value());
        singleton_col_.push_back(j);
      } else if (nnz > 1) {
        dense_col_.push_back(j);
      }
    }
    const Eigen::Index nd = static_cast<Eigen::Index>(dense_col_.size());
    dense_ = Eigen::MatrixXd::Zero(m, nd);
    first_row_.assign(nd, m);
    last_row_.assign(nd, -1);
    for (Eigen::Index k = 0; k < nd; ++k) {
      for (Eigen::SparseMatrix<double>::InnerIterator it(a, dense_col_[k]); it;
           ++it) {
        dense_(it.row(), k) = it.value();
        first_row_[k] = std::min(first_row_[k], it.row());
        last_row_[k] = std::max(last_row_[k], it.row());
      }
    }
    reduced_ = nd < m;
  }

  bool Factor(const Eigen::VectorXd& d) {
    if (reduced_ && FactorReduced(d)) return true;
    return FactorFull(d);
  }

  Eigen::VectorXd Solve(const Eigen::VectorXd& rhs) const {
    return use_reduced_ ? SolveReduced(rhs) : Eigen::VectorXd(llt_.solve(rhs));
  }

 private:
  static bool RegularizedLlt(const Eigen::MatrixXd& matrix,
                             Eigen::LLT<Eigen::MatrixXd>& llt) {
    double scale = matrix.diagonal().cwiseAbs().maxCoeff();
    if (!(scale > 0.0)) scale = 1.0;
    for (double reg = 0.0; reg <= 1e-6 * scale;
         reg = reg == 0.0 ? 1e-14 * scale : reg * 100.0) {
      Eigen::MatrixXd shifted = matrix;
      shifted.diagonal().array() += reg;
      llt.compute(shifted.selfadjointView<Eigen::Lower>());
      if (llt.info() == Eigen::Success) return true;
    }
    return false;
  }

  Eigen::VectorXd SingletonDiagonal(const Eigen::VectorXd& d) const {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(a_.rows());
    for (std::size_t k = 0; k < singleton_col_.size(); ++k) {
      const double v = singleton_value_[k];
      diag[singleton_row_[k]] += v * v * d[singleton_col_[k]];
    }
    return diag;
  }

  bool FactorFull(const Eigen::VectorXd& d) {
    use_reduced_ = false;
    const Eigen::Index m = a_.rows();
    Eigen::MatrixXd scaled = dense_;
    for (std::size_t k = 0; k < dense_col_.size(); ++k) {
      scaled.col(k) *= std::sqrt(d[dense_col_[k]]);
    }
    Eigen::MatrixXd normal = Eigen::MatrixXd::Zero(m, m);
    normal.selfadjointView<Eigen::Lower>().rankUpdate(scaled);
    normal.diagonal() += SingletonDiagonal(d);
    return RegularizedLlt(normal, llt_);
  }

  bool FactorReduced(const Eigen::VectorXd& d) {
    const Eigen::Index m = a_.rows();
    const Eigen::Index nd = static_cast<Eigen::Index>(dense_col_.size());
    Eigen::VectorXd d_dense(nd);
    for (Eigen::Index k = 0; k < nd; ++k) d_dense[k] = d[dense_col_[k]];
    const Eigen::VectorXd diag = SingletonDiagonal(d);
    const Eigen::VectorXd dense_part = dense_.cwiseAbs2() * d_dense;
    s1_inv_ = Eigen::VectorXd::Zero(m);
    rows0_.clear();
    for (Eigen::Index i = 0; i < m; ++i) {
      if (diag[i] > kNegligibleDiagonal * dense_part[i] && diag[i] > 0.0) {
        s1_inv_[i] = 1.0 / diag[i];
      } else {
        rows0_.push_back(i);
      }
    }
    if (rows0_.size() > static_cast<std::size_t>(kBlock)) return false;
    const Eigen::MatrixXd scaled = s1_inv_.cwiseSqrt().asDiagonal() * dense_;
    // Lower triangle of scaled^T scaled, block by block over the row ranges
    // where both column blocks are nonzero.
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(nd, nd);
    for (Eigen::Index jb = 0; jb < nd; jb += kBlock) {
      const Eigen::Index jn = std::min(kBlock, nd - jb);
      const auto [j_lo, j_hi] = RowRange(jb, jn);
      for (Eigen::Index ib = jb; ib < nd; ib += kBlock) {
        const Eigen::Index in = std::min(kBlock, nd - ib);
        const auto [i_lo, i_hi] = RowRange(ib, in);
        const Eigen::Index lo = std::max(i_lo, j_lo);
        const Eigen::Index hi = std::min(i_hi, j_hi);
        if (lo > hi) continue;
        h.block(ib, jb, in, jn).noalias() =
            scaled.block(lo, ib, hi - lo + 1, in).transpose() *
            scaled.block(lo, jb, hi - lo + 1, jn);
      }
    }
    h.diagonal() += d_dense.cwiseInverse();
    if (!RegularizedLlt(h, llt_)) return false;
    const Eigen::Index m0 = static_cast<Eigen::Index>(rows0_.size());
    a0_.resize(m0, nd);
    for (Eigen::Index i = 0; i < m0; ++i) a0_.row(i) = dense_.row(rows0_[i]);
    h_inv_a0t_ = llt_.solve(a0_.transpose());
    Eigen::MatrixXd schur = a0_ * h_inv_a0t_;
    for (Eigen::Index i = 0; i < m0; ++i) schur(i, i) += diag[rows0_[i]];
    if (m0 > 0 && !RegularizedLlt(schur, schur_llt_)) return false;
    use_reduced_ = true;
    return true;
  }

  Eigen::VectorXd SolveReduced(const Eigen::VectorXd& rhs) const {
    const Eigen::Index m0 = static_cast<Eigen::Index>(rows0_.size());
    const Eigen::VectorXd scaled = s1_inv_.cwiseProduct(rhs);
    Eigen::VectorXd u = llt_.solve(dense_.transpose() * scaled);
    Eigen::VectorXd dy0(m0);
    if (m0 > 0) {
      Eigen::VectorXd r0(m0);
      for (Eigen::Index i = 0; i < m0; ++i) r0[i] = rhs[rows0_[i]];
      dy0 = schur_llt_.solve(r0 - a0_ * u);
      u += h_inv_a0t_ * dy0;
    }
    Eigen::VectorXd out = s1_inv_.cwiseProduct(rhs - dense_ * u);
    for (Eigen::Index i = 0; i < m0; ++i) out[rows0_[i]] = dy0[i];
    return out;
  }

  std::pair<Eigen::Index, Eigen::Index> RowRange(Eigen::Index begin,
                                                 Eigen::Index count) const {
    Eigen::Index lo = std::numeric_limits<Eigen::Index>::max();
    Eigen::Index hi = -1;
    for (Eigen::Index k = begin; k < begin + count; ++k) {
      lo = std::min(lo, first_row_[k]);
      hi = std::max(hi, last_row_[k]);
    }
    return {lo, hi};
  }

  const Eigen::SparseMatrix<double>& a_;
  std::vector<Eigen::Index> singleton_row_;
  std::vector<double> singleton_value_;
  std::vector<Eigen::Index> singleton_col_;
  std::vector<Eigen::Index> dense_col_;
  std::vector<Eigen::Index> first_row_;
  std::vector<Eigen::Index> last_row_;
  std::vector<Eigen::Index> rows0_;
  bool reduced_ = false;
  bool use_reduced_ = false;
  Eigen::MatrixXd dense_;
  Eigen::MatrixXd a0_;
  Eigen::VectorXd s1_inv_;
  Eigen::MatrixXd h_inv_a0t_;
  Eigen::LLT<Eigen::MatrixXd> llt_;
  Eigen::LLT<Eigen::MatrixXd> schur_llt_;
};

double MaxStep(const Eigen::VectorXd& v, const Eigen::VectorXd& dv) {
  double step = 1.0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (dv[i] < 0.0) step = std::min(step, -v[i] / dv[i]);
  }
  return step;
}

}  // namespace

absl::StatusOr<LpSolution> SolveLinearProgram(const LinearProgram& lp,
                                              const LpOptions& options) {
  const Eigen::SparseMatrix<double>& a = lp.a;
  const Eigen::Index m = a.rows();
  const Eigen::Index n = a.cols();
  if (lp.b.size() != m || lp.c.size() != n || m == 0 || n == 0) {
    return absl::InvalidArgumentError("linear program dimension mismatch");
  }
  NormalEquations normal(a);

  // Starting point from the least-squares solutions, shifted to the interior.
  if (!normal.Factor(Eigen::VectorXd::Ones(n))) {
    return absl::InvalidArgumentError("constraint matrix is rank deficient");
  }
  Eigen::VectorXd z = a.transpose() * normal.Solve(lp.b);
  Eigen::VectorXd y = normal.Solve(a * lp.c);
  Eigen::VectorXd s = lp.c - a.transpose() * y;
  z.array() += std::max(-1.5 * z.minCoeff(), 0.0);
  s.array() += std::max(-1.5 * s.minCoeff(), 0.0);
  {
    const double zs = z.dot(s);
    z.array() += 0.5 * zs / std::max(s.sum(), 1e-300);
    s.array() += 0.5 * zs / std::max(z.sum(), 1e-300);
  }
  z = z.cwiseMax(1e-8);
  s = s.cwiseMax(1e-8);

  const double b_norm = 1.0 + lp.b.norm();
  const double c_norm = 1.0 + lp.c.norm();
  // Worst of the three relative optimality measures, with the best iterate
  // seen so far; iterates can degrade once rounding dominates.
  double best_error = std::numeric_limits<double>::infinity();
  int best_iter = 0;
  LpSolution best;
  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    const Eigen::VectorXd rb = a * z - lp.b;
    const Eigen::VectorXd rc = a.transpose() * y + s - lp.c;
    const double primal = lp.c.dot(z);
    const double dual = lp.b.dot(y);
    const double mu = z.dot(s) / n;
    const double error = std::max(
        {rb.norm() / b_norm, rc.norm() / c_norm,
         std::abs(primal - dual) / (1.0 + std::abs(primal))});
    if (error < options.tolerance) {
      return LpSolution{z, y, s, primal, dual, iter - 1};
    }
    if (error < best_error) {
      best_error = error;
      best_iter = iter;
      best = LpSolution{z, y, s, primal, dual, iter - 1};
    } else if (iter - best_iter >= options.stall_iterations) {
      if (best_error < options.acceptable_tolerance) return best;
      return absl::InternalError(absl::StrCat(
          "LP stalled at relative error ", best_error, " after ", iter - 1,
          " iterations"));
    }
    const Eigen::VectorXd d = z.cwiseQuotient(s);
    if (!normal.Factor(d)) {
      return absl::InternalError(absl::StrCat(
          "LP normal equations are singular after ", iter, " iterations"));
    }
    // Direction for a complementarity target r_zs = S dz + Z ds.
    auto direction = [&](const Eigen::VectorXd& r_zs, Eigen::VectorXd& dz,
                         Eigen::VectorXd& dy, Eigen::VectorXd& ds) {
      const Eigen::VectorXd t = r_zs.cwiseQuotient(s) + d.cwiseProduct(rc);
      dy = normal.Solve(-rb - a * t);
      dz = t + d.cwiseProduct(a.transpose() * dy);
      // Iterative refinement on the primal equations a dz = -rb, measured
      // on dz itself since d spans many orders of magnitude.
      for (int pass = 0; pass < 3; ++pass) {
        const Eigen::VectorXd residual = a * dz + rb;
        if (residual.norm() <= 1e-14 * b_norm) break;
        const Eigen::VectorXd correction = normal.Solve(-residual);
        dy += correction;
        dz += d.cwiseProduct(a.transpose() * correction);
      }
      ds = -rc - a.transpose() * dy;
    };
    Eigen::VectorXd dz, dy, ds;
    direction(-z.cwiseProduct(s), dz, dy, ds);
    const double alpha_p = MaxStep(z, dz);
    const double alpha_d = MaxStep(s, ds);
    const double mu_aff =
        (z + alpha_p * dz).dot(s + alpha_d * ds) / static_cast<double>(n);
    const double centering = std::pow(mu_aff / mu, 3);
    Eigen::VectorXd r_zs = -z.cwiseProduct(s) - dz.cwiseProduct(ds);
    r_zs.array() += centering * mu;
    direction(r_zs, dz, dy, ds);
    const double step_p = std::min(1.0, 0.995 * MaxStep(z, dz));
    const double step_d = std::min(1.0, 0.995 * MaxStep(s, ds));
    z += step_p * dz;
    y += step_d * dy;
    s += step_d * ds;
    if (!z.allFinite() || !y.allFinite() || !s.allFinite()) {
      return absl::InternalError(absl::StrCat(
          "LP iterates diverged after ", iter, " iterations"));
    }
  }
  if (best_error < options.acceptable_tolerance) return best;
  return absl::DeadlineExceededError(
      absl::StrCat("LP did not converge in ", options.max_iterations,
                   " iterations"));
}

}  // namespace adalab::signopt
