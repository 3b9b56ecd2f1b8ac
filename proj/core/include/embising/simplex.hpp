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

#pragma once

#include <cstddef>
#include <vector>

#include "embising/linear_program.hpp"

namespace embising {

enum class LpStatus {
  kOptimal,
  /// No x satisfies the rows.
  kInfeasible,
  /// The dual has no feasible point: the LP is unbounded, or infeasible too.
  kUnbounded,
  kIterationLimit
};

const char* to_string(LpStatus status);

enum class PivotRule {
  /// Smallest eligible index enters and leaves.
  kBland,
  /// Most negative reduced cost, switching to Bland during degenerate runs.
  kDantzig
};

struct SimplexOptions {
  double pivot_tolerance = 1e-9;
  double optimality_tolerance = 1e-9;
  double feasibility_tolerance = 1e-9;
  /// Pivots between fresh LU factorizations of the basis.
  std::size_t refactor_interval = 100;
  /// 0 picks a limit from the problem size.
  std::size_t max_iterations = 0;
  PivotRule rule = PivotRule::kBland;
};

struct LpSolution {
  LpStatus status = LpStatus::kIterationLimit;
  double objective = 0.0;
  std::vector<double> x;
  /// Multiplier of each row (nonnegative for >= rows).
  std::vector<double> row_duals;
  std::size_t iterations = 0;
};

/// Minimizes lp.objective over the free variables of `lp`.
///
/// The dual (sum_i y_i a_i = c, y >= 0 on inequality rows) has one row per
/// variable and is solved by a two-phase revised simplex; the primal point
/// is read off the final simplex multipliers. Deterministic for fixed input.
LpSolution solve_simplex(const LinearProgram& lp,
                         const SimplexOptions& options = {});

}  // namespace embising
