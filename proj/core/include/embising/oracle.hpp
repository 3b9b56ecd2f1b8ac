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
#include <cstdint>
#include <optional>
#include <vector>

#include "embising/ising.hpp"
#include "embising/parameter_setter.hpp"
#include "embising/subproblem.hpp"

namespace embising {

inline constexpr std::size_t kSufficiencyGuard = 14;
inline constexpr double kOracleTolerance = 1e-9;

/// Worst separation between unsynchronized and synchronized inner spins.
struct SufficiencyReport {
  bool pass = true;
  /// +infinity when no unsynchronized r exists (single vertex).
  double worst_margin = 0.0;
  double required_gap = 0.0;
  /// Inner spins r and outer signs s attaining the worst margin, in the
  /// instance graph's vertex order. Empty when vacuous.
  Spins witness_r;
  Spins witness_s;
  std::uint64_t pairs_checked = 0;

  bool vacuous() const noexcept { return witness_r.empty(); }
};

/// Enumerates the reduced model
///   I(r, s) = sum_q (omega_q + sigma_q s_q) r_q + sum_{pq in E} beta_pq r_p r_q
/// over every s and every non-constant r, and compares against
/// min{I(+1, s), I(-1, s)}. `couplings` is indexed like g.edges().
SufficiencyReport verify_sufficiency(const Graph& g,
                                     const std::vector<double>& sigma,
                                     const std::vector<double>& omega,
                                     const std::vector<double>& couplings,
                                     double raw_gap,
                                     std::size_t guard = kSufficiencyGuard);

/// Uniform coupling beta = -theta on every edge of inst.graph.
SufficiencyReport verify_sufficiency(const SubproblemInstance& inst,
                                     double theta,
                                     const std::vector<double>& omega,
                                     double raw_gap,
                                     std::size_t guard = kSufficiencyGuard);

struct VertexSufficiency {
  VertexId vertex;
  /// The instance rebuilt from the embedded model.
  Graph graph;
  SufficiencyReport report;
};

struct GapReport {
  bool pass = true;
  double worst_margin = 0.0;
  std::vector<VertexSufficiency> vertices;
};

/// Rebuilds every chain's reduced model from the embedded model itself
/// (sigma from the inter strengths, couplings from the nonzero intra
/// strengths, omega from the written weights) and checks it with raw gap
/// 2 gamma_v, or `raw_gap` when given.
GapReport verify_solution_gap(const EmbeddedIsingModel& embedded,
                              std::optional<double> raw_gap = std::nullopt,
                              std::size_t guard = kSufficiencyGuard);

inline constexpr std::size_t kRedundancyGuard = 12;

struct RedundancyReport {
  double theta_all = 0.0;
  double theta_connected = 0.0;
  std::optional<double> theta_tree;
  std::size_t all_size = 0;
  std::size_t connected_size = 0;
  std::size_t tree_size = 0;
  bool equal = false;
};

/// Optimal theta over all subsets, over connected cuts and (for trees) over
/// tree edge cuts, compared within `tolerance`.
RedundancyReport verify_redundancy(const SubproblemInstance& inst,
                                   double tolerance = 1e-6,
                                   std::size_t guard = kRedundancyGuard);

/// Spins on H_phi that repeat t_v over each chain.
SpinAssignment synchronize(const EmbeddedIsingModel& embedded,
                           const SpinAssignment& t);

/// True iff s is constant on every chain. Throws DomainError unless s covers
/// exactly the embedded vertices.
bool psi(const EmbeddedIsingModel& embedded, const SpinAssignment& s);

/// The chain values of a synchronized s, read at each chain's smallest id.
/// Throws ContractError when psi(s) is false.
SpinAssignment tau(const EmbeddedIsingModel& embedded, const SpinAssignment& s);

/// Per-chain majority; ties go to +1. Carries no optimality guarantee.
SpinAssignment majority_vote(const EmbeddedIsingModel& embedded,
                             const SpinAssignment& s);

struct EquivalenceReport {
  bool pass = false;
  double original_minimum = 0.0;
  double embedded_minimum = 0.0;
  double offset = 0.0;
  std::uint64_t embedded_minimizers = 0;
  bool all_synchronized = false;
  bool all_map_to_original_minimizers = false;
};

/// Brute-forces both models: minima must agree up to the offset, every
/// embedded minimizer must be synchronized, and tau of each must minimize
/// the original.
EquivalenceReport verify_equivalence(const EmbeddedIsingModel& embedded,
                                     double tolerance = 1e-6,
                                     std::size_t guard = 24);

/// Largest |evaluate(model, synchronize(t)) + offset - evaluate(original, t)|
/// over all t. Throws SizeError above `guard` original vertices.
double synchronized_identity_error(const EmbeddedIsingModel& embedded,
                                   std::size_t guard = 20);

}  // namespace embising
