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

#include "embising/ising.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "embising/error.hpp"

namespace embising {

IsingModel::IsingModel(Graph graph, std::vector<double> weights,
                       std::vector<double> strengths)
    : graph_(std::move(graph)),
      weights_(std::move(weights)),
      strengths_(std::move(strengths)) {
  if (weights_.size() != graph_.num_vertices()) {
    throw DomainError("expected " + std::to_string(graph_.num_vertices()) +
                      " weights, got " + std::to_string(weights_.size()));
  }
  if (strengths_.size() != graph_.num_edges()) {
    throw DomainError("expected " + std::to_string(graph_.num_edges()) +
                      " strengths, got " + std::to_string(strengths_.size()));
  }
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (!std::isfinite(weights_[i])) {
      throw DomainError("weight of '" + graph_.vertex(i) + "' is not finite");
    }
  }
  for (std::size_t e = 0; e < strengths_.size(); ++e) {
    if (!std::isfinite(strengths_[e])) {
      const auto& edge = graph_.edge(e);
      throw DomainError("strength of '" + edge.u + "'-'" + edge.v +
                        "' is not finite");
    }
  }
}

IsingModel IsingModel::from_maps(Graph graph,
                                 const std::map<VertexId, double>& weights,
                                 const std::map<Edge, double>& strengths) {
  std::vector<double> w(graph.num_vertices(), 0.0);
  for (const auto& [id, value] : weights) w[graph.index(id)] = value;

  std::vector<double> s(graph.num_edges(), 0.0);
  std::vector<bool> seen(graph.num_edges(), false);
  for (const auto& [edge, value] : strengths) {
    auto e = graph.find_edge(edge.u, edge.v);
    if (!e) {
      throw DomainError("strength given for non-edge '" + edge.u + "'-'" +
                        edge.v + "'");
    }
    s[*e] = value;
    seen[*e] = true;
  }
  for (std::size_t e = 0; e < seen.size(); ++e) {
    if (!seen[e]) {
      throw DomainError("edge '" + graph.edge(e).u + "'-'" + graph.edge(e).v +
                        "' has no strength");
    }
  }
  return IsingModel(std::move(graph), std::move(w), std::move(s));
}

double IsingModel::strength(const VertexId& a, const VertexId& b) const {
  auto e = graph_.find_edge(a, b);
  if (!e) throw DomainError("no edge '" + a + "'-'" + b + "'");
  return strengths_[*e];
}

double IsingModel::energy(std::span<const int> spins) const {
  if (spins.size() != graph_.num_vertices()) {
    throw DomainError("spin vector has wrong size");
  }
  double value = 0.0;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    value += weights_[i] * spins[i];
  }
  for (std::size_t e = 0; e < strengths_.size(); ++e) {
    auto [a, b] = graph_.endpoints(e);
    value += strengths_[e] * spins[a] * spins[b];
  }
  return value;
}

Spins IsingModel::dense(const SpinAssignment& s) const {
  if (s.size() != graph_.num_vertices()) {
    throw DomainError("assignment covers " + std::to_string(s.size()) +
                      " vertices, model has " +
                      std::to_string(graph_.num_vertices()));
  }
  Spins spins(graph_.num_vertices(), 0);
  for (const auto& [id, value] : s) {
    auto i = graph_.find_vertex(id);
    if (!i) throw DomainError("assignment names unknown vertex '" + id + "'");
    if (value != 1 && value != -1) {
      throw DomainError("spin of '" + id + "' is neither -1 nor +1");
    }
    spins[*i] = value;
  }
  return spins;
}

SpinAssignment IsingModel::assignment(std::span<const int> spins) const {
  if (spins.size() != graph_.num_vertices()) {
    throw DomainError("spin vector has wrong size");
  }
  SpinAssignment s;
  for (std::size_t i = 0; i < spins.size(); ++i) {
    s.emplace(graph_.vertex(i), spins[i]);
  }
  return s;
}

double evaluate(const IsingModel& model, const SpinAssignment& s) {
  return model.energy(model.dense(s));
}

double c_max(const IsingModel& model) {
  double m = 0.0;
  for (double w : model.weights()) m = std::max(m, std::abs(w));
  for (double s : model.strengths()) m = std::max(m, std::abs(s));
  return m;
}

BruteForceResult brute_force_minimum(const IsingModel& model,
                                     const BruteForceOptions& options) {
  const auto n = model.graph().num_vertices();
  if (n > options.max_vertices || n >= 63) {
    throw SizeError("brute force limited to " +
                    std::to_string(options.max_vertices) + " vertices, got " +
                    std::to_string(n));
  }
  const auto& g = model.graph();
  const auto& w = model.weights();
  const auto& str = model.strengths();

  Spins spins(n, 1);
  double current = model.energy(spins);

  BruteForceResult result;
  result.value = current;
  result.num_minimizers = 1;
  result.minimizers.push_back(spins);

  auto consider = [&] {
    if (current > result.value + 2 * options.tolerance) return;
    // Incremental energies drift; decide on the exact value.
    current = model.energy(spins);
    if (current < result.value - options.tolerance) {
      result.value = current;
      result.minimizers.clear();
      result.minimizers.push_back(spins);
      result.num_minimizers = 1;
      result.truncated = false;
    } else if (current <= result.value + options.tolerance) {
      ++result.num_minimizers;
      if (result.minimizers.size() < options.max_stored_minimizers) {
        result.minimizers.push_back(spins);
      } else {
        result.truncated = true;
      }
    }
  };

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    // Gray code: the bit flipped at this step is the lowest set bit.
    auto k = static_cast<std::size_t>(__builtin_ctzll(step));
    double field = w[k];
    for (auto e : g.incident_edges(k)) {
      auto [a, b] = g.endpoints(e);
      field += str[e] * spins[a == k ? b : a];
    }
    current -= 2.0 * spins[k] * field;
    spins[k] = -spins[k];
    if ((step & 0xFFFF) == 0) current = model.energy(spins);
    consider();
  }

  std::sort(result.minimizers.begin(), result.minimizers.end());
  return result;
}

}  // namespace embising
