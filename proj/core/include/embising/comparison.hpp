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

#include "embising/oracle.hpp"
#include "embising/parameter_setter.hpp"

namespace embising {

struct ComparisonRow {
  VertexId vertex;
  std::size_t chain_size = 0;
  double theta_optimal = 0.0;
  /// factor * C_max of the original model (0 for singleton chains).
  double baseline_strength = 0.0;
  bool optimal_pass = false;
  bool baseline_pass = false;
  double optimal_margin = 0.0;
  double baseline_margin = 0.0;
};

struct ComparisonReport {
  double gamma = 0.0;
  double factor = 0.0;
  double c_max_original = 0.0;
  double c_max_optimal = 0.0;
  double c_max_baseline = 0.0;
  bool optimal_passes = false;
  bool baseline_passes = false;
  std::vector<ComparisonRow> rows;
  EmbeddedIsingModel optimal;
  EmbeddedIsingModel baseline;

  /// Every optimal theta is at most factor * C_max(original) + 2 gamma.
  bool theta_within_baseline_bound() const;
};

/// Runs set_parameters and baseline_uniform(factor) and checks both with the
/// sufficiency oracle at raw gap 2 gamma.
ComparisonReport compare(const IsingModel& model, const Graph& hardware,
                         const Embedding& phi, const ParameterOptions& options,
                         double factor);

}  // namespace embising
