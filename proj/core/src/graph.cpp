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

#include "embising/graph.hpp"

#include <algorithm>
#include <deque>

#include "embising/error.hpp"

namespace embising {

Edge::Edge(VertexId a, VertexId b) : u(std::move(a)), v(std::move(b)) {
  if (v < u) std::swap(u, v);
}

Graph::Graph(std::vector<VertexId> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
      dup != vertices_.end()) {
    throw DomainError("duplicate vertex '" + *dup + "'");
  }
  for (auto& e : edges_) {
    if (e.v < e.u) std::swap(e.u, e.v);
    if (e.u == e.v) throw DomainError("self-loop at vertex '" + e.u + "'");
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end());
      dup != edges_.end()) {
    throw DomainError("duplicate edge '" + dup->u + "'-'" + dup->v + "'");
  }

  adjacency_.assign(vertices_.size(), {});
  incidence_.assign(vertices_.size(), {});
  endpoints_.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto a = find_vertex(edges_[e].u);
    auto b = find_vertex(edges_[e].v);
    if (!a || !b) {
      throw DomainError("edge '" + edges_[e].u + "'-'" + edges_[e].v +
                        "' has an undeclared endpoint");
    }
    endpoints_.emplace_back(*a, *b);
    adjacency_[*a].push_back(*b);
    adjacency_[*b].push_back(*a);
    incidence_[*a].push_back(e);
    incidence_[*b].push_back(e);
  }
  for (auto& n : adjacency_) std::sort(n.begin(), n.end());
}

bool Graph::has_vertex(const VertexId& id) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), id);
}

std::optional<std::size_t> Graph::find_vertex(const VertexId& id) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end() || *it != id) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

std::size_t Graph::index(const VertexId& id) const {
  if (auto i = find_vertex(id)) return *i;
  throw DomainError("unknown vertex '" + id + "'");
}

std::optional<std::size_t> Graph::find_edge(const VertexId& a,
                                            const VertexId& b) const {
  Edge key(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<std::size_t>(it - edges_.begin());
}

Graph Graph::induced(std::span<const VertexId> ids) const {
  std::vector<bool> inside(vertices_.size(), false);
  std::vector<VertexId> keep;
  keep.reserve(ids.size());
  for (const auto& id : ids) {
    inside[index(id)] = true;
    keep.push_back(id);
  }
  std::vector<Edge> kept_edges;
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [a, b] = endpoints_[e];
    if (inside[a] && inside[b]) kept_edges.push_back(edges_[e]);
  }
  return Graph(std::move(keep), std::move(kept_edges));
}

std::size_t reachable_count(const Graph& g, std::size_t start,
                            const std::vector<bool>& inside) {
  std::vector<bool> seen(g.num_vertices(), false);
  std::deque<std::size_t> queue{start};
  seen[start] = true;
  std::size_t count = 0;
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    ++count;
    for (auto n : g.neighbors(cur)) {
      if (inside[n] && !seen[n]) {
        seen[n] = true;
        queue.push_back(n);
      }
    }
  }
  return count;
}

bool Graph::is_connected() const {
  if (vertices_.empty()) return true;
  return reachable_count(*this, 0, std::vector<bool>(vertices_.size(), true)) ==
         vertices_.size();
}

bool Graph::is_tree() const {
  return !vertices_.empty() && edges_.size() + 1 == vertices_.size() &&
         is_connected();
}

}  // namespace embising
