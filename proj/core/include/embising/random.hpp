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
#include <random>
#include <string>
#include <vector>

#include "embising/embedding.hpp"
#include "embising/ising.hpp"
#include "embising/subproblem.hpp"

namespace embising {

using Rng = std::mt19937_64;

/// Ids prefix0, prefix1, ... zero-padded so id order matches numeric order.
std::vector<VertexId> numbered_ids(std::size_t n, const std::string& prefix);

/// Uniform random labelled tree on n vertices (Pruefer decoding).
Graph random_tree(std::size_t n, Rng& rng, const std::string& prefix = "q");

/// Random tree plus each remaining pair with probability `extra`.
Graph random_connected_graph(std::size_t n, double extra, Rng& rng,
                             const std::string& prefix = "q");

/// sigma uniform in [0, sigma_max], lambda uniform in
/// [0, lambda_fraction * sigma(V)), redrawn until sigma(V) > 0.
SubproblemInstance random_instance(Graph g, Rng& rng, double gamma,
                                   double sigma_max = 5.0,
                                   double lambda_fraction = 0.9);

/// Weights uniform in [-weight_max, weight_max]; strengths uniform in
/// +-[strength_min, strength_max].
IsingModel random_model(Graph g, Rng& rng, double weight_max = 1.0,
                        double strength_min = 0.25, double strength_max = 1.0);

struct EmbeddingInstance {
  Graph hardware;
  Embedding embedding;
};

/// Random hardware graph with a valid embedding of `original`: chains are
/// random trees of 1 to `max_chain` vertices, every original edge gets one
/// or two hardware edges, and a few distractor edges are added (some between
/// chains of non-adjacent vertices, some to unused vertices).
EmbeddingInstance random_embedding(const Graph& original, Rng& rng,
                                   std::size_t max_chain = 3);

}  // namespace embising
