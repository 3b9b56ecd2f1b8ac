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

#include <map>
#include <vector>

#include "embising/ising.hpp"

namespace embising {

struct FixedSpin {
  VertexId vertex;
  int value;
  /// Weight of the vertex (after earlier folds) when it was fixed.
  double weight_at_fixing;
};

/// Result of fixing dominated vertices.
///
/// For every completion s of `reduced`:
///   evaluate(original, fixed + s) == evaluate(reduced, s) + offset.
struct PreprocessResult {
  IsingModel reduced;
  /// In fixing order.
  std::vector<FixedSpin> fixed;
  /// Total weight change folded into each surviving vertex.
  std::map<VertexId, double> weight_adjustments;
  double offset = 0.0;

  SpinAssignment fixed_assignment() const;
};

/// Repeatedly fixes s_v = -sign(W_v) for every vertex whose weight dominates
/// its remaining incident strengths (|W_v| > sum |S_vn|, or >= unless
/// `strict`), folding the fixed spin into neighbor weights and the offset.
/// Vertices are scanned in id order until nothing changes. A zero-weight
/// vertex (only fixable once it has no remaining incident strength) is fixed
/// to +1.
PreprocessResult preprocess(const IsingModel& model, bool strict = false);

/// Vertices with |W_v| >= sum |S_vn| in `model` as given (no folding). An
/// empty result means every vertex satisfies the strict inequality
/// |W_v| < sum |S_vn|.
std::vector<VertexId> preprocessable_vertices(const IsingModel& model);

}  // namespace embising
