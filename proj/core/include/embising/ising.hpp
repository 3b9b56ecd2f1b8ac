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

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "embising/graph.hpp"

namespace embising {

/// Spin values keyed by vertex id; every value is -1 or +1.
using SpinAssignment = std::map<VertexId, int>;

/// Spins in dense vertex order of some graph.
using Spins = std::vector<int>;

/// I(s) = sum_v W_v s_v + sum_{vw} S_vw s_v s_w over an interaction graph.
///
/// Weights and strengths are stored densely, aligned with the graph's vertex
/// and edge order. Immutable after construction.
class IsingModel {
 public:
  IsingModel() = default;

  /// Throws DomainError if the sizes mismatch or a value is not finite.
  IsingModel(Graph graph, std::vector<double> weights,
             std::vector<double> strengths);

  /// Missing weights default to 0. Every edge of `graph` needs a strength;
  /// unknown ids throw DomainError.
  static IsingModel from_maps(Graph graph,
                              const std::map<VertexId, double>& weights,
                              const std::map<Edge, double>& strengths);

  const Graph& graph() const noexcept { return graph_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  const std::vector<double>& strengths() const noexcept { return strengths_; }

  double weight(const VertexId& id) const { return weights_[graph_.index(id)]; }
  double strength(const VertexId& a, const VertexId& b) const;

  /// Energy of dense spins; no domain checks beyond the size.
  double energy(std::span<const int> spins) const;

  /// Dense spins for an assignment; throws DomainError unless the
  /// assignment's domain is exactly the vertex set and values are +-1.
  Spins dense(const SpinAssignment& s) const;
  SpinAssignment assignment(std::span<const int> spins) const;

  friend bool operator==(const IsingModel&, const IsingModel&) = default;

 private:
  Graph graph_;
  std::vector<double> weights_;
  std::vector<double> strengths_;
};

double evaluate(const IsingModel& model, const SpinAssignment& s);

/// Largest absolute coefficient, max(||W||_inf, ||S||_inf); 0 for an empty
/// model.
double c_max(const IsingModel& model);

struct BruteForceOptions {
  std::size_t max_vertices = 24;
  /// Absolute tolerance for "attains the minimum".
  double tolerance = 1e-9;
  /// Minimizers beyond this count are counted but not stored.
  std::size_t max_stored_minimizers = std::size_t{1} << 16;
};

struct BruteForceResult {
  double value = 0.0;
  /// Dense spins of the minimizers, sorted lexicographically.
  std::vector<Spins> minimizers;
  std::uint64_t num_minimizers = 0;
  bool truncated = false;
};

/// Exhaustive minimum over all 2^|V| assignments (Gray-code order).
/// Throws SizeError above `options.max_vertices`.
BruteForceResult brute_force_minimum(const IsingModel& model,
                                     const BruteForceOptions& options = {});

}  // namespace embising
