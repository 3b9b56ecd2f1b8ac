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
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace embising {

enum class Relation { kGreaterEqual, kEqual };

/// One sparse row: sum of coefficient * variable (relation) rhs.
struct LinearConstraint {
  std::vector<std::pair<std::size_t, double>> terms;
  Relation relation = Relation::kGreaterEqual;
  double rhs = 0.0;
  std::string label;

  double activity(const std::vector<double>& x) const;
};

/// Minimize objective . x over free variables.
struct LinearProgram {
  std::vector<std::string> variables;
  std::vector<double> objective;
  std::vector<LinearConstraint> constraints;

  std::size_t num_variables() const noexcept { return variables.size(); }
  std::size_t num_constraints() const noexcept { return constraints.size(); }
  std::size_t num_equalities() const;
  std::size_t num_nonzeros() const;

  /// Throws DomainError on references to undeclared variables or
  /// non-finite data.
  void check() const;
};

/// Writes `lp` in CPLEX LP format. Variables and rows are renamed to
/// x0, x1, ... and c0, c1, ...; the original names appear as comments.
void write_lp_format(std::ostream& out, const LinearProgram& lp);

}  // namespace embising
