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

#include "embising/linear_program.hpp"

#include <cmath>
#include <iomanip>
#include <ostream>

#include "embising/error.hpp"

namespace embising {

double LinearConstraint::activity(const std::vector<double>& x) const {
  double sum = 0.0;
  for (const auto& [j, a] : terms) sum += a * x.at(j);
  return sum;
}

std::size_t LinearProgram::num_equalities() const {
  std::size_t n = 0;
  for (const auto& c : constraints) n += c.relation == Relation::kEqual;
  return n;
}

std::size_t LinearProgram::num_nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : constraints) n += c.terms.size();
  return n;
}

void LinearProgram::check() const {
  if (objective.size() != variables.size()) {
    throw DomainError("objective length differs from the variable count");
  }
  for (double c : objective) {
    if (!std::isfinite(c)) throw DomainError("non-finite objective coefficient");
  }
  for (std::size_t i = 0; i < constraints.size(); ++i) {
    const auto& row = constraints[i];
    if (!std::isfinite(row.rhs)) {
      throw DomainError("row " + std::to_string(i) + " has a non-finite rhs");
    }
    for (const auto& [j, a] : row.terms) {
      if (j >= variables.size()) {
        throw DomainError("row " + std::to_string(i) +
                          " references undeclared variable " +
                          std::to_string(j));
      }
      if (!std::isfinite(a)) {
        throw DomainError("row " + std::to_string(i) +
                          " has a non-finite coefficient");
      }
    }
  }
}

namespace {

void write_term(std::ostream& out, double a, std::size_t j, bool first) {
  if (a < 0) {
    out << (first ? "- " : " - ");
  } else if (!first) {
    out << " + ";
  }
  out << std::abs(a) << " x" << j;
}

}  // namespace

void write_lp_format(std::ostream& out, const LinearProgram& lp) {
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << std::setprecision(17);

  for (std::size_t j = 0; j < lp.variables.size(); ++j) {
    out << "\\ x" << j << " = " << lp.variables[j] << '\n';
  }
  out << "Minimize\n obj: ";
  bool first = true;
  for (std::size_t j = 0; j < lp.objective.size(); ++j) {
    if (lp.objective[j] == 0.0) continue;
    write_term(out, lp.objective[j], j, first);
    first = false;
  }
  if (first) out << "0 x0";
  out << "\nSubject To\n";
  for (std::size_t i = 0; i < lp.constraints.size(); ++i) {
    const auto& row = lp.constraints[i];
    if (!row.label.empty()) out << "\\ " << row.label << '\n';
    out << " c" << i << ": ";
    first = true;
    for (const auto& [j, a] : row.terms) {
      if (a == 0.0) continue;
      write_term(out, a, j, first);
      first = false;
    }
    if (first) out << "0 x0";
    out << (row.relation == Relation::kEqual ? " = " : " >= ") << row.rhs
        << '\n';
  }
  out << "Bounds\n";
  for (std::size_t j = 0; j < lp.variables.size(); ++j) {
    out << " x" << j << " free\n";
  }
  out << "End\n";

  out.flags(old_flags);
  out.precision(old_precision);
}

}  // namespace embising
