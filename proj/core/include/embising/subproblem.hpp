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

#include <optional>
#include <string>
#include <vector>

#include "embising/embedding.hpp"
#include "embising/ising.hpp"

namespace embising {

enum class OuterStrategy { kUniformSplit, kSingleEdge };

const char* to_string(OuterStrategy s);
/// Accepts "uniform-split" and "single-edge"; nullopt otherwise.
std::optional<OuterStrategy> parse_outer_strategy(const std::string& name);

/// Strengths S-bar on the inter edges of an embedded structure.
struct OuterStrengthAssignment {
  OuterStrategy strategy = OuterStrategy::kUniformSplit;
  /// Indexed like structure.graph edges; intra entries are 0.
  std::vector<double> values;
};

/// Splits every S_vw over delta_vw. Throws StructureError on an empty family.
OuterStrengthAssignment assign_outer_strengths(
    const EmbeddedStructure& structure, const IsingModel& model,
    OuterStrategy strategy = OuterStrategy::kUniformSplit);

/// The per-vertex weight distribution problem.
struct SubproblemInstance {
  VertexId vertex;
  /// Spanning tree of H[phi_v], or H[phi_v] itself.
  Graph graph;
  /// Outer influence per vertex of `graph`.
  std::vector<double> sigma;
  double lambda = 0.0;
  double gamma = 0.0;

  double sigma_total() const;
  /// sigma(S) for dense indices.
  double sigma_of(const std::vector<std::size_t>& members) const;
};

/// Checks the instance invariants; throws DomainError, ConnectivityError or
/// InstanceError.
void check_instance(const SubproblemInstance& inst);

/// Builds the instance of original vertex `v`. Throws DomainError for
/// gamma <= 0 and PreprocessableVertexError when |W_v| >= sigma(V).
SubproblemInstance extract_instance(const VertexId& v,
                                    const EmbeddedStructure& structure,
                                    const OuterStrengthAssignment& assignment,
                                    const IsingModel& model, double gamma,
                                    bool use_spanning_tree = true);

}  // namespace embising
