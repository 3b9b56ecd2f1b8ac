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

#include "embising/parameter_setter.hpp"

#include <algorithm>
#include <cmath>

#include "embising/cuts.hpp"
#include "embising/error.hpp"
#include "embising/lp.hpp"

namespace embising {

const char* to_string(ParameterKind kind) {
  switch (kind) {
    case ParameterKind::kOptimal:
      return "optimal";
    case ParameterKind::kBaseline:
      return "baseline";
  }
  return "unknown";
}

std::vector<Edge> coupled_edges(const Graph& embedded_graph,
                                const std::vector<VertexId>& chain,
                                bool use_spanning_tree) {
  Graph inner = embedded_graph.induced(chain);
  if (use_spanning_tree) return spanning_tree(inner);
  return inner.edges();
}

double intra_offset(const EmbeddedIsingModel& embedded) {
  std::map<VertexId, VertexId> owner;
  for (const auto& [v, chain] : embedded.embedding.chains()) {
    for (const auto& q : chain) owner.emplace(q, v);
  }
  const auto& g = embedded.model.graph();
  double sum = 0.0;
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const auto& edge = g.edge(e);
    if (owner.at(edge.u) == owner.at(edge.v)) sum += embedded.model.strengths()[e];
  }
  return -sum;
}

namespace {

void check_gamma(double gamma, const std::string& what) {
  if (!std::isfinite(gamma) || !(gamma > 0.0)) {
    throw DomainError(what + " must be positive");
  }
}

std::vector<double> inter_strengths(const EmbeddedStructure& structure,
                                    const OuterStrengthAssignment& outer) {
  std::vector<double> strengths(structure.graph.num_edges(), 0.0);
  for (std::size_t e = 0; e < strengths.size(); ++e) {
    if (!structure.is_intra(e)) strengths[e] = outer.values[e];
  }
  return strengths;
}

}  // namespace

EmbeddedIsingModel set_parameters(const IsingModel& model,
                                  const Graph& hardware, const Embedding& phi,
                                  const ParameterOptions& options) {
  check_gamma(options.gamma, "gamma");
  for (const auto& [v, g] : options.gamma_overrides) {
    if (!model.graph().has_vertex(v)) {
      throw DomainError("gamma override for unknown vertex '" + v + "'");
    }
    check_gamma(g, "gamma override of '" + v + "'");
  }

  const auto structure = build_embedded_structure(model.graph(), hardware, phi);
  const auto outer = assign_outer_strengths(structure, model, options.strategy);
  const auto& h = structure.graph;

  EmbeddedIsingModel out;
  out.original = model;
  out.embedding = phi;
  out.gamma = options.gamma;
  out.strategy = options.strategy;
  out.use_spanning_tree = options.use_spanning_tree;
  out.kind = ParameterKind::kOptimal;

  std::vector<double> weights(h.num_vertices(), 0.0);
  auto strengths = inter_strengths(structure, outer);

  for (const auto& v : model.graph().vertices()) {
    auto override_it = options.gamma_overrides.find(v);
    const double gamma =
        override_it == options.gamma_overrides.end() ? options.gamma
                                                     : override_it->second;
    const auto inst = extract_instance(v, structure, outer, model, gamma,
                                       options.use_spanning_tree);
    const auto n = inst.graph.num_vertices();
    const CutFamily family = n == 1 ? CutFamily{CutFamilyKind::kTreeEdges, {}}
                             : options.use_spanning_tree
                                 ? tree_edge_cuts(inst.graph)
                                 : connected_cuts(inst.graph);
    const auto solution = solve_weight_distribution(inst, family, options.simplex);

    VertexRecord record;
    record.lp_theta = solution.theta;
    record.theta = n > 1 ? solution.theta : 0.0;
    record.gamma = gamma;
    record.num_constraints = solution.num_constraints;
    const double sign = model.weight(v) < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) {
      const auto& q = inst.graph.vertex(i);
      record.omega[q] = solution.omega[i];
      weights[h.index(q)] = sign * solution.omega[i] + 0.0;
    }
    for (auto k : solution.tight_cuts) {
      std::vector<VertexId> members;
      for (auto i : family.cuts[k].members) members.push_back(inst.graph.vertex(i));
      record.tight_cuts.push_back(std::move(members));
    }
    for (const auto& e : inst.graph.edges()) {
      strengths[*h.find_edge(e.u, e.v)] = -record.theta;
    }
    out.per_vertex.emplace(v, std::move(record));
  }

  out.model = IsingModel(h, std::move(weights), std::move(strengths));
  out.offset = intra_offset(out);
  return out;
}

EmbeddedIsingModel baseline_uniform(const IsingModel& model,
                                    const Graph& hardware, const Embedding& phi,
                                    double factor) {
  if (!std::isfinite(factor) || !(factor > 0.0)) {
    throw DomainError("factor must be positive");
  }
  const auto structure = build_embedded_structure(model.graph(), hardware, phi);
  const auto outer =
      assign_outer_strengths(structure, model, OuterStrategy::kUniformSplit);
  const auto& h = structure.graph;
  const double coupling = factor * c_max(model);

  EmbeddedIsingModel out;
  out.original = model;
  out.embedding = phi;
  out.gamma = 0.0;
  out.strategy = OuterStrategy::kUniformSplit;
  out.use_spanning_tree = true;
  out.kind = ParameterKind::kBaseline;
  out.factor = factor;

  std::vector<double> weights(h.num_vertices(), 0.0);
  auto strengths = inter_strengths(structure, outer);
  for (const auto& v : model.graph().vertices()) {
    const auto& chain = phi.chain(v);
    const double share = model.weight(v) / static_cast<double>(chain.size());
    VertexRecord record;
    record.theta = chain.size() > 1 ? coupling : 0.0;
    record.lp_theta = record.theta;
    for (const auto& q : chain) {
      weights[h.index(q)] = share;
      record.omega[q] = std::abs(share);
    }
    for (const auto& e : coupled_edges(h, chain, true)) {
      strengths[*h.find_edge(e.u, e.v)] = -record.theta;
    }
    out.per_vertex.emplace(v, std::move(record));
  }
  out.model = IsingModel(h, std::move(weights), std::move(strengths));
  out.offset = intra_offset(out);
  return out;
}

ParameterSummary summarize(const EmbeddedIsingModel& embedded) {
  ParameterSummary s;
  s.c_max = c_max(embedded.model);
  s.offset = embedded.offset;
  s.gamma = embedded.gamma;
  s.strategy = embedded.strategy;
  s.kind = embedded.kind;
  for (const auto& [v, record] : embedded.per_vertex) {
    s.theta.emplace(v, record.theta);
    s.max_theta = std::max(s.max_theta, record.theta);
    s.total_constraints += record.num_constraints;
  }
  return s;
}

}  // namespace embising
