// Copyright 2026 The embising Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "embising/simplex.hpp"

#include <Eigen/SparseCore>
#include <Eigen/SparseLU>

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "embising/error.hpp"

namespace embising {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
    case LpStatus::kIterationLimit:
      return "iteration-limit";
  }
  return "unknown";
}

namespace {

using SparseColumn = std::vector<std::pair<int, double>>;
using SparseMatrix = Eigen::SparseMatrix<double>;
using Factorization = Eigen::SparseLU<SparseMatrix, Eigen::COLAMDOrdering<int>>;

/// One basis change, stored as the entering column d = B^-1 a_q and the pivot
/// row. The new inverse is E B^-1 with E the identity except in column `row`.
struct Eta {
  int row;
  double pivot;
  SparseColumn others;
};

enum class Outcome { kOptimal, kUnbounded, kIterationLimit };

/// Standard-form solver for  min cost . y  s.t.  A y = rhs, y >= 0, with
/// rhs >= 0 and an artificial identity block appended after the structural
/// columns.
class RevisedSimplex {
 public:
  RevisedSimplex(int rows, std::vector<SparseColumn> structural,
                 std::vector<double> cost, std::vector<double> rhs,
                 const SimplexOptions& options)
      : m_(rows),
        num_structural_(static_cast<int>(structural.size())),
        columns_(std::move(structural)),
        cost_(std::move(cost)),
        rhs_(std::move(rhs)),
        options_(options) {
    for (int i = 0; i < m_; ++i) columns_.push_back({{i, 1.0}});
    head_.resize(m_);
    position_.assign(columns_.size(), -1);
    for (int i = 0; i < m_; ++i) {
      head_[i] = num_structural_ + i;
      position_[num_structural_ + i] = i;
    }
    limit_ = options.max_iterations != 0
                 ? options.max_iterations
                 : 200 * (columns_.size() + static_cast<std::size_t>(m_)) + 1000;
    refactor();
  }

  std::size_t iterations() const { return iterations_; }

  /// Phase 1: drive the artificials to zero. True when the system is feasible.
  bool phase_one(Outcome& outcome) {
    phase_ = 1;
    outcome = run();
    if (outcome == Outcome::kIterationLimit) return false;
    double infeasibility = 0.0;
    for (int i = 0; i < m_; ++i) {
      if (is_artificial(head_[i])) infeasibility += std::max(0.0, x_[i]);
    }
    double scale = 1.0;
    for (double b : rhs_) scale = std::max(scale, std::abs(b));
    if (infeasibility > options_.feasibility_tolerance * scale * m_) {
      return false;
    }
    drive_out_artificials();
    return true;
  }

  Outcome phase_two() {
    phase_ = 2;
    return run();
  }

  /// Simplex multipliers pi = c_B B^-1 of the current basis.
  std::vector<double> multipliers() {
    refactor();
    return btran(basic_costs());
  }

  /// Value of every structural column.
  std::vector<double> primal() const {
    std::vector<double> y(num_structural_, 0.0);
    for (int i = 0; i < m_; ++i) {
      if (head_[i] < num_structural_) y[head_[i]] = x_[i];
    }
    return y;
  }

 private:
  bool is_artificial(int k) const { return k >= num_structural_; }

  double column_cost(int k) const {
    if (phase_ == 1) return is_artificial(k) ? 1.0 : 0.0;
    return is_artificial(k) ? 0.0 : cost_[k];
  }

  bool eligible(int k) const {
    return position_[k] < 0 && (phase_ == 1 || !is_artificial(k));
  }

  std::vector<double> basic_costs() const {
    std::vector<double> c(m_);
    for (int i = 0; i < m_; ++i) c[i] = column_cost(head_[i]);
    return c;
  }

  void refactor() {
    std::vector<Eigen::Triplet<double>> entries;
    for (int j = 0; j < m_; ++j) {
      for (const auto& [i, a] : columns_[head_[j]]) entries.emplace_back(i, j, a);
    }
    SparseMatrix basis(m_, m_);
    basis.setFromTriplets(entries.begin(), entries.end());
    basis.makeCompressed();
    lu_ = std::make_unique<Factorization>();
    lu_->analyzePattern(basis);
    lu_->factorize(basis);
    if (lu_->info() != Eigen::Success) {
      throw InternalError("simplex basis became singular");
    }
    etas_.clear();
    x_ = ftran_dense(rhs_);
  }

  std::vector<double> ftran_dense(const std::vector<double>& v) {
    Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(v.data(), m_);
    Eigen::VectorXd solved = lu_->solve(b);
    std::vector<double> out(solved.data(), solved.data() + m_);
    for (const auto& eta : etas_) {
      const double vr = out[eta.row];
      if (vr == 0.0) continue;
      const double scaled = vr / eta.pivot;
      out[eta.row] = scaled;
      for (const auto& [i, d] : eta.others) out[i] -= d * scaled;
    }
    return out;
  }

  std::vector<double> ftran(int k) {
    std::vector<double> v(m_, 0.0);
    for (const auto& [i, a] : columns_[k]) v[i] = a;
    return ftran_dense(v);
  }

  std::vector<double> btran(std::vector<double> w) {
    for (auto it = etas_.rbegin(); it != etas_.rend(); ++it) {
      double acc = w[it->row];
      for (const auto& [i, d] : it->others) acc -= w[i] * d;
      w[it->row] = acc / it->pivot;
    }
    Eigen::VectorXd b = Eigen::Map<const Eigen::VectorXd>(w.data(), m_);
    Eigen::VectorXd solved = lu_->transpose().solve(b);
    return {solved.data(), solved.data() + m_};
  }

  double reduced_cost(int k, const std::vector<double>& pi) const {
    double rc = column_cost(k);
    for (const auto& [i, a] : columns_[k]) rc -= pi[i] * a;
    return rc;
  }

  void pivot(int entering, int row, const std::vector<double>& d) {
    const double step = x_[row] / d[row];
    for (int i = 0; i < m_; ++i) {
      if (d[i] != 0.0) x_[i] -= step * d[i];
    }
    x_[row] = step;

    Eta eta{row, d[row], {}};
    for (int i = 0; i < m_; ++i) {
      if (i != row && d[i] != 0.0) eta.others.emplace_back(i, d[i]);
    }
    etas_.push_back(std::move(eta));

    position_[head_[row]] = -1;
    head_[row] = entering;
    position_[entering] = row;
    ++iterations_;
    if (etas_.size() >= options_.refactor_interval) refactor();
  }

  int choose_entering(const std::vector<double>& pi, bool bland) const {
    const double tol = options_.optimality_tolerance;
    int best = -1;
    double best_rc = -tol;
    const int total = static_cast<int>(columns_.size());
    for (int k = 0; k < total; ++k) {
      if (!eligible(k)) continue;
      const double rc = reduced_cost(k, pi);
      if (rc < best_rc) {
        best = k;
        best_rc = rc;
        if (bland) break;
      }
    }
    return best;
  }

  int choose_leaving(const std::vector<double>& d, bool bland) const {
    const double tol = options_.pivot_tolerance;
    int best = -1;
    double best_ratio = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m_; ++i) {
      double ratio;
      if (d[i] > tol) {
        ratio = std::max(0.0, x_[i]) / d[i];
      } else if (phase_ == 2 && is_artificial(head_[i]) && d[i] < -tol) {
        ratio = 0.0;  // basic artificials are pinned at zero
      } else {
        continue;
      }
      if (best < 0 || ratio < best_ratio - 1e-12) {
        best = i;
        best_ratio = ratio;
      } else if (ratio <= best_ratio + 1e-12) {
        const bool better = bland ? head_[i] < head_[best]
                                  : std::abs(d[i]) > std::abs(d[best]);
        if (better) best = i;
      }
    }
    return best;
  }

  Outcome run() {
    std::size_t degenerate_run = 0;
    while (true) {
      if (iterations_ >= limit_) return Outcome::kIterationLimit;
      const bool bland = options_.rule == PivotRule::kBland ||
                         degenerate_run >= kDegenerateSwitch;
      const auto pi = btran(basic_costs());
      const int entering = choose_entering(pi, bland);
      if (entering < 0) return Outcome::kOptimal;
      const auto d = ftran(entering);
      const int row = choose_leaving(d, bland);
      if (row < 0) return Outcome::kUnbounded;
      const bool degenerate = std::max(0.0, x_[row]) == 0.0;
      degenerate_run = degenerate ? degenerate_run + 1 : 0;
      pivot(entering, row, d);
    }
  }

  /// Swaps zero-valued basic artificials for structural columns where the
  /// basis allows it; the rest belong to redundant rows.
  void drive_out_artificials() {
    for (int r = 0; r < m_; ++r) {
      if (!is_artificial(head_[r])) continue;
      std::vector<double> unit(m_, 0.0);
      unit[r] = 1.0;
      const auto row = btran(unit);
      int best = -1;
      double best_alpha = options_.pivot_tolerance * 1e3;
      for (int k = 0; k < num_structural_; ++k) {
        if (position_[k] >= 0) continue;
        double alpha = 0.0;
        for (const auto& [i, a] : columns_[k]) alpha += row[i] * a;
        if (std::abs(alpha) > best_alpha) {
          best = k;
          best_alpha = std::abs(alpha);
        }
      }
      if (best < 0) continue;
      const auto d = ftran(best);
      pivot(best, r, d);
    }
  }

  static constexpr std::size_t kDegenerateSwitch = 50;

  int m_;
  int num_structural_;
  std::vector<SparseColumn> columns_;
  std::vector<double> cost_;
  std::vector<double> rhs_;
  SimplexOptions options_;
  int phase_ = 1;

  std::vector<int> head_;
  std::vector<int> position_;
  std::vector<double> x_;
  std::unique_ptr<Factorization> lu_;
  std::vector<Eta> etas_;
  std::size_t iterations_ = 0;
  std::size_t limit_ = 0;
};

}  // namespace

LpSolution solve_simplex(const LinearProgram& lp,
                         const SimplexOptions& options) {
  lp.check();
  const int n = static_cast<int>(lp.num_variables());
  LpSolution solution;
  if (n == 0) {
    solution.status = LpStatus::kOptimal;
    for (const auto& row : lp.constraints) {
      const bool ok = row.relation == Relation::kEqual
                          ? std::abs(row.rhs) <= options.feasibility_tolerance
                          : row.rhs <= options.feasibility_tolerance;
      if (!ok) solution.status = LpStatus::kInfeasible;
    }
    solution.row_duals.assign(lp.num_constraints(), 0.0);
    return solution;
  }

  // Dual rows are the primal variables; flip those with negative objective
  // so the right-hand side is nonnegative.
  std::vector<double> sign(n, 1.0), rhs(n);
  for (int j = 0; j < n; ++j) {
    if (lp.objective[j] < 0.0) sign[j] = -1.0;
    rhs[j] = sign[j] * lp.objective[j];
  }

  std::vector<SparseColumn> columns;
  std::vector<double> cost;
  std::vector<std::pair<std::size_t, double>> origin;  // (row, +-1)
  for (std::size_t i = 0; i < lp.num_constraints(); ++i) {
    const auto& row = lp.constraints[i];
    SparseColumn col;
    for (const auto& [j, a] : row.terms) {
      if (a != 0.0) col.emplace_back(static_cast<int>(j), sign[j] * a);
    }
    std::sort(col.begin(), col.end());
    columns.push_back(col);
    cost.push_back(-row.rhs);
    origin.emplace_back(i, 1.0);
    if (row.relation == Relation::kEqual) {
      for (auto& entry : col) entry.second = -entry.second;
      columns.push_back(std::move(col));
      cost.push_back(row.rhs);
      origin.emplace_back(i, -1.0);
    }
  }

  RevisedSimplex simplex(n, std::move(columns), std::move(cost),
                         std::move(rhs), options);
  Outcome outcome;
  const bool feasible = simplex.phase_one(outcome);
  if (!feasible) {
    solution.status = outcome == Outcome::kIterationLimit
                          ? LpStatus::kIterationLimit
                          : LpStatus::kUnbounded;
    solution.iterations = simplex.iterations();
    return solution;
  }
  outcome = simplex.phase_two();
  solution.iterations = simplex.iterations();
  if (outcome == Outcome::kUnbounded) {
    solution.status = LpStatus::kInfeasible;
    return solution;
  }
  if (outcome == Outcome::kIterationLimit) {
    solution.status = LpStatus::kIterationLimit;
    return solution;
  }

  const auto pi = simplex.multipliers();
  solution.status = LpStatus::kOptimal;
  solution.x.resize(n);
  for (int j = 0; j < n; ++j) solution.x[j] = -sign[j] * pi[j];
  solution.objective = 0.0;
  for (int j = 0; j < n; ++j) solution.objective += lp.objective[j] * solution.x[j];

  const auto y = simplex.primal();
  solution.row_duals.assign(lp.num_constraints(), 0.0);
  for (std::size_t k = 0; k < y.size(); ++k) {
    solution.row_duals[origin[k].first] += origin[k].second * y[k];
  }
  return solution;
}

}  // namespace embising
