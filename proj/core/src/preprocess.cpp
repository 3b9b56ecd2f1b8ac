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

#include "embising/preprocess.hpp"

#include <cmath>

namespace embising {

SpinAssignment PreprocessResult::fixed_assignment() const {
  SpinAssignment s;
  for (const auto& f : fixed) s.emplace(f.vertex, f.value);
  return s;
}

PreprocessResult preprocess(const IsingModel& model, bool strict) {
  const auto& g = model.graph();
  const auto n = g.num_vertices();
  std::vector<double> weight = model.weights();
  std::vector<bool> alive(n, true);

  PreprocessResult result;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v = 0; v < n; ++v) {
      if (!alive[v]) continue;
      double influence = 0.0;
      for (auto e : g.incident_edges(v)) {
        auto [a, b] = g.endpoints(e);
        if (alive[a == v ? b : a]) influence += std::abs(model.strengths()[e]);
      }
      const double magnitude = std::abs(weight[v]);
      if (strict ? !(magnitude > influence) : !(magnitude >= influence)) {
        continue;
      }

      const int spin = weight[v] > 0.0 ? -1 : 1;
      result.fixed.push_back({g.vertex(v), spin, weight[v]});
      result.offset += weight[v] * spin;
      alive[v] = false;
      for (auto e : g.incident_edges(v)) {
        auto [a, b] = g.endpoints(e);
        auto other = a == v ? b : a;
        if (alive[other]) weight[other] += model.strengths()[e] * spin;
      }
      changed = true;
    }
  }

  std::vector<VertexId> keep;
  std::vector<double> kept_weights;
  for (std::size_t v = 0; v < n; ++v) {
    if (!alive[v]) continue;
    keep.push_back(g.vertex(v));
    kept_weights.push_back(weight[v]);
    const double delta = weight[v] - model.weights()[v];
    if (delta != 0.0) result.weight_adjustments.emplace(g.vertex(v), delta);
  }
  Graph reduced_graph = g.induced(keep);
  std::vector<double> kept_strengths;
  kept_strengths.reserve(reduced_graph.num_edges());
  for (const auto& e : reduced_graph.edges()) {
    kept_strengths.push_back(model.strength(e.u, e.v));
  }
  result.reduced = IsingModel(std::move(reduced_graph), std::move(kept_weights),
                              std::move(kept_strengths));
  return result;
}

std::vector<VertexId> preprocessable_vertices(const IsingModel& model) {
  const auto& g = model.graph();
  std::vector<VertexId> out;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    double influence = 0.0;
    for (auto e : g.incident_edges(v)) {
      influence += std::abs(model.strengths()[e]);
    }
    if (std::abs(model.weights()[v]) >= influence) out.push_back(g.vertex(v));
  }
  return out;
}

}  // namespace embising
