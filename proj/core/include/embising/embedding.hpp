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
#include <optional>
#include <string>
#include <vector>

#include "embising/graph.hpp"

namespace embising {

/// Minor embedding: each original vertex maps to a set of hardware vertices
/// (its chain). Chains are stored sorted.
class Embedding {
 public:
  using ChainMap = std::map<VertexId, std::vector<VertexId>>;

  Embedding() = default;
  explicit Embedding(ChainMap chains);

  /// phi_v = {v} for every vertex of `g`.
  static Embedding identity(const Graph& g);

  const ChainMap& chains() const noexcept { return chains_; }
  /// Throws DomainError for unknown original vertices.
  const std::vector<VertexId>& chain(const VertexId& v) const;
  std::size_t total_size() const;

  friend bool operator==(const Embedding&, const Embedding&) = default;

 private:
  ChainMap chains_;
};

enum class EmbeddingCondition {
  kDisjoint,    // (a) chains pairwise disjoint
  kConnected,   // (b) every H[phi_v] non-empty and connected
  kEdgeCovered  // (c) delta(phi_v, phi_w) non-empty for every original edge
};

const char* to_string(EmbeddingCondition c);

struct EmbeddingViolation {
  EmbeddingCondition condition;
  std::string message;
};

/// All violations found, ordered by condition (a), (b), (c).
struct EmbeddingReport {
  std::vector<EmbeddingViolation> violations;

  bool valid() const noexcept { return violations.empty(); }
  const EmbeddingViolation* first() const {
    return violations.empty() ? nullptr : &violations.front();
  }
};

/// Checks the embedding conditions. Failures are reported, not thrown; a
/// chain map whose keys differ from V(G), or which names vertices outside
/// V(H), throws DomainError.
EmbeddingReport validate_embedding(const Graph& original, const Graph& hardware,
                                   const Embedding& phi);

/// Hardware-side graph structures of a valid embedding.
///
/// `graph` holds the union of the chains with the intra-connecting edges
/// E_phi and the inter-connecting edges E_delta. Hardware edges between
/// chains of non-adjacent original vertices are not part of it.
struct EmbeddedStructure {
  Graph original;
  Embedding embedding;
  Graph graph;
  /// Original vertex owning each vertex of `graph` (dense order).
  std::vector<VertexId> owner;
  /// Edge indices (into `graph`) of E(H[phi_v]) per original vertex.
  std::map<VertexId, std::vector<std::size_t>> intra;
  /// Edge indices (into `graph`) of delta_vw, indexed like original.edges().
  std::vector<std::vector<std::size_t>> inter;
  /// For each edge of `graph`: the original edge index it belongs to, or
  /// nullopt for intra edges.
  std::vector<std::optional<std::size_t>> family;

  bool is_intra(std::size_t e) const { return !family.at(e).has_value(); }
};

/// Throws ValidationError (with the first violation) if the embedding is
/// invalid.
EmbeddedStructure build_embedded_structure(const Graph& original,
                                           const Graph& hardware,
                                           const Embedding& phi);

/// Breadth-first spanning tree from the smallest vertex id, visiting
/// neighbors in id order. Throws ConnectivityError if `g` is disconnected.
std::vector<Edge> spanning_tree(const Graph& g);

}  // namespace embising
