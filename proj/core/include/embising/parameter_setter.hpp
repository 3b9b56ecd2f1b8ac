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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "embising/embedding.hpp"
#include "embising/ising.hpp"
#include "embising/simplex.hpp"
#include "embising/subproblem.hpp"

namespace embising {

enum class ParameterKind { kOptimal, kBaseline };

const char* to_string(ParameterKind kind);

struct VertexRecord {
  /// Magnitude of the strength on the coupled intra edges; 0 for singleton
  /// chains, which have none.
  double theta = 0.0;
  /// LP optimum, kept for singletons too.
  double lp_theta = 0.0;
  /// LP weight distribution (sums to |W_v|) per chain vertex.
  std::map<VertexId, double> omega;
  /// Member lists of the cuts whose rows were tight at the optimum.
  std::vector<std::vector<VertexId>> tight_cuts;
  double gamma = 0.0;
  std::size_t num_constraints = 0;

  friend bool operator==(const VertexRecord&, const VertexRecord&) = default;
};

/// An Ising model on the embedded graph H_phi together with everything
/// needed to check and de-embed it.
struct EmbeddedIsingModel {
  IsingModel original;
  Embedding embedding;
  IsingModel model;
  /// evaluate(model, synchronized t) + offset == evaluate(original, t).
  double offset = 0.0;
  /// Global gap; 0 for baselines, which certify nothing.
  double gamma = 0.0;
  OuterStrategy strategy = OuterStrategy::kUniformSplit;
  bool use_spanning_tree = true;
  ParameterKind kind = ParameterKind::kOptimal;
  /// Multiple of C_max used by a baseline.
  double factor = 0.0;
  std::map<VertexId, VertexRecord> per_vertex;

  friend bool operator==(const EmbeddedIsingModel&,
                         const EmbeddedIsingModel&) = default;
};

struct ParameterOptions {
  double gamma = 0.5;
  OuterStrategy strategy = OuterStrategy::kUniformSplit;
  bool use_spanning_tree = true;
  /// Per-vertex gap replacing `gamma`.
  std::map<VertexId, double> gamma_overrides;
  SimplexOptions simplex;
};

/// Solves the weight LP of every original vertex and combines the results.
/// Throws ValidationError for invalid embeddings, PreprocessableVertexError
/// when some |W_v| >= sum |S_vw|, DomainError for gamma <= 0.
EmbeddedIsingModel set_parameters(const IsingModel& model,
                                  const Graph& hardware, const Embedding& phi,
                                  const ParameterOptions& options = {});

/// Heuristic comparator: W_v spread evenly over the chain, every coupled
/// intra edge at -factor * C_max(model), inter strengths split uniformly.
EmbeddedIsingModel baseline_uniform(const IsingModel& model,
                                    const Graph& hardware,
                                    const Embedding& phi, double factor);

/// Edges of H[phi_v] that carry the coupling strength: a BFS spanning tree,
/// or every intra edge when `use_spanning_tree` is false.
std::vector<Edge> coupled_edges(const Graph& embedded_graph,
                                const std::vector<VertexId>& chain,
                                bool use_spanning_tree);

/// -(sum of the strengths on intra edges) of the embedded model.
double intra_offset(const EmbeddedIsingModel& embedded);

struct ParameterSummary {
  double c_max = 0.0;
  double max_theta = 0.0;
  double offset = 0.0;
  double gamma = 0.0;
  OuterStrategy strategy = OuterStrategy::kUniformSplit;
  ParameterKind kind = ParameterKind::kOptimal;
  std::size_t total_constraints = 0;
  std::map<VertexId, double> theta;
};

ParameterSummary summarize(const EmbeddedIsingModel& embedded);

}  // namespace embising
