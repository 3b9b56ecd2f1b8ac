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

#include "embising/cuts.hpp"
#include "embising/linear_program.hpp"
#include "embising/simplex.hpp"
#include "embising/subproblem.hpp"

namespace embising {

/// Variable 0 of a weight LP; omega_i is variable 1 + i.
inline constexpr std::size_t kThetaVariable = 0;

/// (sigma(V) - lambda) / 2.
double theta_half(const SubproblemInstance& inst);

/// Right-hand side of the resolved cut row for a set with outer influence
/// `sigma_s`: sigma(S) + gamma below theta_half, 2 theta_half - sigma(S) +
/// gamma otherwise (ties included).
double cut_rhs(const SubproblemInstance& inst, double sigma_s);

/// The weight LP over `family`. Row layout: one row
///   theta |delta(S)| - omega(S) >= cut_rhs
/// per cut in family order, then omega(V) = lambda, then for each vertex
/// theta - omega_v >= 0 and theta + omega_v >= 0.
/// Throws InstanceError when lambda >= sigma(V) and DomainError for an empty
/// family on more than one vertex.
LinearProgram build_lp(const SubproblemInstance& inst, const CutFamily& family);

/// (min{sigma(S) + omega(S), sigma(V \ S) - omega(V \ S)} + gamma) / |delta(S)|.
double resolved_min_check(const SubproblemInstance& inst, const Cut& cut,
                          const std::vector<double>& omega);

struct WeightDistribution {
  double theta = 0.0;
  std::vector<double> omega;
  /// Indices into the family of the cuts whose rows are tight.
  std::vector<std::size_t> tight_cuts;
  /// Indices of all tight LP rows.
  std::vector<std::size_t> tight_rows;
  std::size_t num_constraints = 0;
  std::size_t iterations = 0;
};

/// Minimizes theta over the LP of `family` and re-verifies the result
/// against every row and every unresolved cut constraint. Throws
/// InternalError if the solver does not report an optimum or the check
/// fails.
WeightDistribution solve_weight_distribution(
    const SubproblemInstance& inst, const CutFamily& family,
    const SimplexOptions& options = {});

/// Same, over default_cut_family(inst.graph).
WeightDistribution solve_weight_distribution(
    const SubproblemInstance& inst, const SimplexOptions& options = {});

/// Rewrites a weight LP in subtree-sum coordinates of a BFS tree of `g`:
/// variable 1 + u becomes P_u, the omega total of u's BFS subtree. Rows keep
/// their order and right-hand sides. Cut rows of tree-edge families end up
/// with two or three nonzeros.
LinearProgram to_subtree_coordinates(const LinearProgram& lp, const Graph& g);

/// Inverse map: omega_v = P_v - sum of P over v's BFS children.
std::vector<double> from_subtree_coordinates(const std::vector<double>& x,
                                             const Graph& g);

}  // namespace embising
