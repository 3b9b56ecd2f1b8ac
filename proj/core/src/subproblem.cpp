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

#include "embising/subproblem.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "embising/error.hpp"

namespace embising {

const char* to_string(OuterStrategy s) {
  switch (s) {
    case OuterStrategy::kUniformSplit:
      return "uniform-split";
    case OuterStrategy::kSingleEdge:
      return "single-edge";
  }
  return "unknown";
}

std::optional<OuterStrategy> parse_outer_strategy(const std::string& name) {
  if (name == "uniform-split") return OuterStrategy::kUniformSplit;
  if (name == "single-edge") return OuterStrategy::kSingleEdge;
  return std::nullopt;
}

OuterStrengthAssignment assign_outer_strengths(
    const EmbeddedStructure& structure, const IsingModel& model,
    OuterStrategy strategy) {
  if (!(model.graph() == structure.original)) {
    throw DomainError("model graph does not match the embedded structure");
  }
  OuterStrengthAssignment out{strategy,
                              std::vector<double>(structure.graph.num_edges())};
  for (std::size_t oe = 0; oe < structure.inter.size(); ++oe) {
    const auto& family = structure.inter[oe];
    if (family.empty()) {
      const auto& e = structure.original.edge(oe);
      throw StructureError("no hardware edge between the chains of '" + e.u +
                           "' and '" + e.v + "'");
    }
    const double s = model.strengths()[oe];
    if (strategy == OuterStrategy::kSingleEdge) {
      // Hardware edges are sorted, so the smallest index is the
      // lexicographically smallest edge.
      out.values[*std::min_element(family.begin(), family.end())] = s;
    } else {
      const double share = s / static_cast<double>(family.size());
      for (auto e : family) out.values[e] = share;
    }
  }
  return out;
}

double SubproblemInstance::sigma_total() const {
  double total = 0.0;
  for (double s : sigma) total += s;
  return total;
}

double SubproblemInstance::sigma_of(
    const std::vector<std::size_t>& members) const {
  double total = 0.0;
  for (auto i : members) total += sigma.at(i);
  return total;
}

void check_instance(const SubproblemInstance& inst) {
  if (inst.sigma.size() != inst.graph.num_vertices()) {
    throw DomainError("sigma has " + std::to_string(inst.sigma.size()) +
                      " entries for " +
                      std::to_string(inst.graph.num_vertices()) + " vertices");
  }
  if (inst.graph.num_vertices() == 0) {
    throw DomainError("instance graph is empty");
  }
  for (double s : inst.sigma) {
    if (!std::isfinite(s) || s < 0.0) {
      throw DomainError("sigma must be finite and nonnegative");
    }
  }
  if (!std::isfinite(inst.lambda) || inst.lambda < 0.0) {
    throw DomainError("lambda must be finite and nonnegative");
  }
  if (!std::isfinite(inst.gamma) || !(inst.gamma > 0.0)) {
    throw DomainError("gamma must be positive");
  }
  if (!inst.graph.is_connected()) {
    throw ConnectivityError("instance graph of '" + inst.vertex +
                            "' is disconnected");
  }
  if (!(inst.lambda < inst.sigma_total())) {
    std::ostringstream msg;
    msg << "instance of '" << inst.vertex << "' has lambda " << inst.lambda
        << " >= sigma(V) " << inst.sigma_total();
    throw InstanceError(msg.str());
  }
}

SubproblemInstance extract_instance(const VertexId& v,
                                    const EmbeddedStructure& structure,
                                    const OuterStrengthAssignment& assignment,
                                    const IsingModel& model, double gamma,
                                    bool use_spanning_tree) {
  if (!std::isfinite(gamma) || !(gamma > 0.0)) {
    throw DomainError("gamma must be positive");
  }
  if (assignment.values.size() != structure.graph.num_edges()) {
    throw DomainError("outer strength assignment does not match the structure");
  }
  const auto& chain = structure.embedding.chain(v);
  Graph inner = structure.graph.induced(chain);
  if (!inner.is_connected()) {
    throw ValidationError("chain of '" + v + "' is disconnected");
  }

  SubproblemInstance inst;
  inst.vertex = v;
  inst.graph = use_spanning_tree
                   ? Graph(inner.vertices(), spanning_tree(inner))
                   : std::move(inner);
  inst.sigma.assign(inst.graph.num_vertices(), 0.0);
  for (std::size_t i = 0; i < inst.graph.num_vertices(); ++i) {
    const auto q = structure.graph.index(inst.graph.vertex(i));
    for (auto e : structure.graph.incident_edges(q)) {
      if (!structure.is_intra(e)) inst.sigma[i] += std::abs(assignment.values[e]);
    }
  }
  inst.lambda = std::abs(model.weight(v));
  inst.gamma = gamma;

  const double total = inst.sigma_total();
  if (!(inst.lambda < total)) {
    std::ostringstream msg;
    msg << "vertex '" << v << "' has |W| = " << inst.lambda
        << " >= sigma(V) = " << total
        << "; it is preprocessable, run preprocess first";
    throw PreprocessableVertexError(v, msg.str());
  }
  return inst;
}

}  // namespace embising
