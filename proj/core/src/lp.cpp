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

#include "embising/lp.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "embising/error.hpp"

namespace embising {

double theta_half(const SubproblemInstance& inst) {
  return 0.5 * (inst.sigma_total() - inst.lambda);
}

double cut_rhs(const SubproblemInstance& inst, double sigma_s) {
  const double half = theta_half(inst);
  if (sigma_s < half) return sigma_s + inst.gamma;
  return 2.0 * half - sigma_s + inst.gamma;
}

LinearProgram build_lp(const SubproblemInstance& inst, const CutFamily& family) {
  check_instance(inst);
  const auto n = inst.graph.num_vertices();
  if (family.cuts.empty() && n > 1) {
    throw DomainError("empty cut family for a graph with " + std::to_string(n) +
                      " vertices");
  }

  LinearProgram lp;
  lp.variables.reserve(n + 1);
  lp.variables.push_back("theta");
  for (const auto& q : inst.graph.vertices()) lp.variables.push_back("omega[" + q + "]");
  lp.objective.assign(n + 1, 0.0);
  lp.objective[kThetaVariable] = 1.0;
  lp.constraints.reserve(family.size() + 1 + 2 * n);

  for (std::size_t k = 0; k < family.cuts.size(); ++k) {
    const auto& cut = family.cuts[k];
    if (cut.members.empty() || cut.members.size() >= n) {
      throw DomainError("cut " + std::to_string(k) +
                        " is not a nonempty proper subset");
    }
    LinearConstraint row;
    row.terms.reserve(cut.members.size() + 1);
    row.terms.emplace_back(kThetaVariable, static_cast<double>(cut.boundary));
    for (auto i : cut.members) row.terms.emplace_back(1 + i, -1.0);
    row.rhs = cut_rhs(inst, inst.sigma_of(cut.members));
    row.label = "cut " + std::to_string(k);
    lp.constraints.push_back(std::move(row));
  }

  LinearConstraint balance;
  balance.relation = Relation::kEqual;
  for (std::size_t i = 0; i < n; ++i) balance.terms.emplace_back(1 + i, 1.0);
  balance.rhs = inst.lambda;
  balance.label = "balance";
  lp.constraints.push_back(std::move(balance));

  for (std::size_t i = 0; i < n; ++i) {
    const auto& q = inst.graph.vertex(i);
    lp.constraints.push_back(
        {{{kThetaVariable, 1.0}, {1 + i, -1.0}}, Relation::kGreaterEqual, 0.0,
         "upper " + q});
    lp.constraints.push_back(
        {{{kThetaVariable, 1.0}, {1 + i, 1.0}}, Relation::kGreaterEqual, 0.0,
         "lower " + q});
  }
  return lp;
}

double resolved_min_check(const SubproblemInstance& inst, const Cut& cut,
                          const std::vector<double>& omega) {
  if (cut.boundary == 0) throw DomainError("cut has an empty boundary");
  std::vector<bool> inside(inst.graph.num_vertices(), false);
  for (auto i : cut.members) inside.at(i) = true;
  double in_value = 0.0, out_value = 0.0;
  for (std::size_t i = 0; i < inside.size(); ++i) {
    if (inside[i]) {
      in_value += inst.sigma[i] + omega.at(i);
    } else {
      out_value += inst.sigma[i] - omega.at(i);
    }
  }
  return (std::min(in_value, out_value) + inst.gamma) /
         static_cast<double>(cut.boundary);
}

namespace {

struct BfsTree {
  std::vector<std::size_t> parent;  // root's parent is itself
  std::vector<std::vector<std::size_t>> children;
};

BfsTree bfs_tree(const Graph& g) {
  const auto n = g.num_vertices();
  BfsTree t{std::vector<std::size_t>(n, n), std::vector<std::vector<std::size_t>>(n)};
  if (n == 0) return t;
  std::deque<std::size_t> queue{0};
  t.parent[0] = 0;
  while (!queue.empty()) {
    auto v = queue.front();
    queue.pop_front();
    for (auto w : g.neighbors(v)) {
      if (t.parent[w] != n) continue;
      t.parent[w] = v;
      t.children[v].push_back(w);
      queue.push_back(w);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (t.parent[v] == n) {
      throw ConnectivityError("subtree coordinates need a connected graph");
    }
  }
  return t;
}

double scale_of(const LinearConstraint& row) {
  double s = std::max(1.0, std::abs(row.rhs));
  for (const auto& [j, a] : row.terms) s = std::max(s, std::abs(a));
  return s;
}

}  // namespace

LinearProgram to_subtree_coordinates(const LinearProgram& lp, const Graph& g) {
  const auto n = g.num_vertices();
  if (lp.num_variables() != n + 1) {
    throw DomainError("LP variable count does not match the graph");
  }
  const auto tree = bfs_tree(g);

  LinearProgram out;
  out.variables.reserve(n + 1);
  out.variables.push_back(lp.variables[kThetaVariable]);
  for (const auto& q : g.vertices()) out.variables.push_back("subtree[" + q + "]");
  out.objective = lp.objective;
  out.constraints.reserve(lp.num_constraints());

  std::vector<double> coef(n, 0.0);
  std::vector<bool> touched(n, false);
  std::vector<std::size_t> support;
  for (const auto& row : lp.constraints) {
    LinearConstraint mapped{{}, row.relation, row.rhs, row.label};
    double theta = 0.0;
    support.clear();
    auto add = [&](std::size_t u, double a) {
      if (!touched[u]) {
        touched[u] = true;
        support.push_back(u);
      }
      coef[u] += a;
    };
    for (const auto& [j, a] : row.terms) {
      if (j == kThetaVariable) {
        theta += a;
        continue;
      }
      const auto v = j - 1;
      add(v, a);
      for (auto c : tree.children[v]) add(c, -a);
    }
    if (theta != 0.0) mapped.terms.emplace_back(kThetaVariable, theta);
    std::sort(support.begin(), support.end());
    for (auto u : support) {
      if (coef[u] != 0.0) mapped.terms.emplace_back(1 + u, coef[u]);
      coef[u] = 0.0;
      touched[u] = false;
    }
    out.constraints.push_back(std::move(mapped));
  }
  return out;
}

std::vector<double> from_subtree_coordinates(const std::vector<double>& x,
                                             const Graph& g) {
  const auto n = g.num_vertices();
  if (x.size() != n + 1) throw DomainError("solution size does not match the graph");
  const auto tree = bfs_tree(g);
  std::vector<double> omega(n);
  for (std::size_t v = 0; v < n; ++v) {
    double value = x[1 + v];
    for (auto c : tree.children[v]) value -= x[1 + c];
    omega[v] = value;
  }
  return omega;
}

WeightDistribution solve_weight_distribution(const SubproblemInstance& inst,
                                             const CutFamily& family,
                                             const SimplexOptions& options) {
  const auto lp = build_lp(inst, family);
  const auto n = inst.graph.num_vertices();
  const auto solution =
      solve_simplex(to_subtree_coordinates(lp, inst.graph), options);
  if (solution.status != LpStatus::kOptimal) {
    throw InternalError(std::string("weight LP of '") + inst.vertex +
                        "' ended with status " + to_string(solution.status));
  }

  WeightDistribution result;
  result.theta = solution.x[kThetaVariable];
  result.omega = from_subtree_coordinates(solution.x, inst.graph);
  double total = 0.0;
  for (double w : result.omega) total += w;
  auto largest = std::max_element(
      result.omega.begin(), result.omega.end(),
      [](double a, double b) { return std::abs(a) < std::abs(b); });
  *largest += inst.lambda - total;
  for (double& w : result.omega) w += 0.0;  // no negative zeros
  result.num_constraints = lp.num_constraints();
  result.iterations = solution.iterations;

  std::vector<double> x(n + 1);
  x[kThetaVariable] = result.theta;
  std::copy(result.omega.begin(), result.omega.end(), x.begin() + 1);

  constexpr double kTolerance = 1e-9;
  for (std::size_t r = 0; r < lp.num_constraints(); ++r) {
    const auto& row = lp.constraints[r];
    const double slack = row.activity(x) - row.rhs;
    const double tol = kTolerance * scale_of(row);
    const bool ok = row.relation == Relation::kEqual ? std::abs(slack) <= tol
                                                     : slack >= -tol;
    if (!ok) {
      std::ostringstream msg;
      msg << "weight LP of '" << inst.vertex << "' violates " << row.label
          << " by " << -slack;
      throw InternalError(msg.str());
    }
    if (std::abs(slack) <= tol) {
      result.tight_rows.push_back(r);
      if (r < family.size()) result.tight_cuts.push_back(r);
    }
  }
  for (std::size_t k = 0; k < family.size(); ++k) {
    const auto& cut = family.cuts[k];
    const double need = resolved_min_check(inst, cut, result.omega);
    if (result.theta < need - kTolerance * std::max(1.0, std::abs(need))) {
      std::ostringstream msg;
      msg << "weight LP of '" << inst.vertex << "' fails the min-form check of cut "
          << k;
      throw InternalError(msg.str());
    }
  }
  return result;
}

WeightDistribution solve_weight_distribution(const SubproblemInstance& inst,
                                             const SimplexOptions& options) {
  check_instance(inst);
  return solve_weight_distribution(inst, default_cut_family(inst.graph),
                                   options);
}

}  // namespace embising
