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
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace embising {

using VertexId = std::string;

/// Undirected edge with endpoints stored in id order (u < v).
struct Edge {
  VertexId u;
  VertexId v;

  Edge() = default;
  Edge(VertexId a, VertexId b);

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected finite graph over string ids.
///
/// Vertices are kept sorted by id and edges sorted by (u, v); the position in
/// these sorted sequences is the dense index used by every algorithm in the
/// library, so results are reproducible independent of input order.
class Graph {
 public:
  Graph() = default;

  /// Throws DomainError on duplicate vertices, self-loops, duplicate edges or
  /// edges with undeclared endpoints.
  Graph(std::vector<VertexId> vertices, std::vector<Edge> edges);

  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  const std::vector<VertexId>& vertices() const noexcept { return vertices_; }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const VertexId& vertex(std::size_t i) const { return vertices_.at(i); }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  bool has_vertex(const VertexId& id) const;
  std::optional<std::size_t> find_vertex(const VertexId& id) const;
  /// Dense index of `id`; throws DomainError for unknown ids.
  std::size_t index(const VertexId& id) const;

  std::optional<std::size_t> find_edge(const VertexId& a,
                                       const VertexId& b) const;
  bool has_edge(const VertexId& a, const VertexId& b) const {
    return find_edge(a, b).has_value();
  }

  /// Dense endpoint indices of edge `e`, in id order.
  std::pair<std::size_t, std::size_t> endpoints(std::size_t e) const {
    return endpoints_.at(e);
  }

  /// Neighbor indices of vertex `i`, ascending.
  const std::vector<std::size_t>& neighbors(std::size_t i) const {
    return adjacency_.at(i);
  }
  /// Indices of the edges incident to vertex `i`, ascending.
  const std::vector<std::size_t>& incident_edges(std::size_t i) const {
    return incidence_.at(i);
  }

  /// Subgraph induced by `ids`; throws DomainError for unknown ids.
  Graph induced(std::span<const VertexId> ids) const;

  bool is_connected() const;
  bool is_tree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::pair<std::size_t, std::size_t>> endpoints_;
  std::vector<std::vector<std::size_t>> adjacency_;
  std::vector<std::vector<std::size_t>> incidence_;
};

/// Number of vertices reachable from `start` inside the vertex subset marked
/// by `inside` (indices refer to `g`).
std::size_t reachable_count(const Graph& g, std::size_t start,
                            const std::vector<bool>& inside);

}  // namespace embising
