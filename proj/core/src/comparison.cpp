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

#include "embising/comparison.hpp"

namespace embising {

bool ComparisonReport::theta_within_baseline_bound() const {
  const double bound = factor * c_max_original + 2.0 * gamma;
  for (const auto& row : rows) {
    if (row.theta_optimal > bound + kOracleTolerance) return false;
  }
  return true;
}

ComparisonReport compare(const IsingModel& model, const Graph& hardware,
                         const Embedding& phi, const ParameterOptions& options,
                         double factor) {
  ComparisonReport report;
  report.gamma = options.gamma;
  report.factor = factor;
  report.c_max_original = c_max(model);
  report.optimal = set_parameters(model, hardware, phi, options);
  report.baseline = baseline_uniform(model, hardware, phi, factor);
  report.c_max_optimal = c_max(report.optimal.model);
  report.c_max_baseline = c_max(report.baseline.model);

  const auto optimal_gap = verify_solution_gap(report.optimal);
  const auto baseline_gap =
      verify_solution_gap(report.baseline, 2.0 * options.gamma);
  report.optimal_passes = optimal_gap.pass;
  report.baseline_passes = baseline_gap.pass;

  for (std::size_t i = 0; i < optimal_gap.vertices.size(); ++i) {
    const auto& opt = optimal_gap.vertices[i];
    const auto& base = baseline_gap.vertices[i];
    ComparisonRow row;
    row.vertex = opt.vertex;
    row.chain_size = phi.chain(opt.vertex).size();
    row.theta_optimal = report.optimal.per_vertex.at(opt.vertex).theta;
    row.baseline_strength = report.baseline.per_vertex.at(opt.vertex).theta;
    row.optimal_pass = opt.report.pass;
    row.baseline_pass = base.report.pass;
    row.optimal_margin = opt.report.worst_margin;
    row.baseline_margin = base.report.worst_margin;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace embising
