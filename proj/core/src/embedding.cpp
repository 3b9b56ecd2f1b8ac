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

#include "embising/embedding.hpp"

#include <algorithm>
#include <deque>

#include "embising/error.hpp"

namespace embising {

Embedding::Embedding(ChainMap chains) : chains_(std::move(chains)) {
  for (auto& [v, chain] : chains_) std::sort(chain.begin(), chain.end());
}

Embedding Embedding::identity(const Graph& g) {
  ChainMap chains;
  for (const auto& v : g.vertices()) chains.emplace(v, std::vector{v});
  return Embedding(std::move(chains));
}

const std::vector<VertexId>& Embedding::chain(const VertexId& v) const {
  auto it = chains_.find(v);
  if (it == chains_.end()) {
    throw DomainError("embedding has no chain for '" + v + "'");
  }
  return it->second;
}

std::size_t Embedding::total_size() const {
  std::size_t n = 0;
  for (const auto& [v, chain] : chains_) n += chain.size();
  return n;
}

const char* to_string(EmbeddingCondition c) {
  switch (c) {
    case EmbeddingCondition::kDisjoint:
      return "disjointness";
    case EmbeddingCondition::kConnected:
      return "connectivity";
    case EmbeddingCondition::kEdgeCovered:
      return "edge-coverage";
  }
  return "unknown";
}

namespace {

void check_domain(const Graph& original, const Graph& hardware,
                  const Embedding& phi) {
  for (const auto& v : original.vertices()) {
    if (!phi.chains().contains(v)) {
      throw DomainError("embedding has no chain for original vertex '" + v +
                        "'");
    }
  }
  for (const auto& [v, chain] : phi.chains()) {
    if (!original.has_vertex(v)) {
      throw DomainError("embedding maps unknown original vertex '" + v + "'");
    }
    for (const auto& q : chain) {
      if (!hardware.has_vertex(q)) {
        throw DomainError("chain of '" + v + "' names unknown hardware vertex '" +
                          q + "'");
      }
    }
  }
}

}  // namespace

EmbeddingReport validate_embedding(const Graph& original, const Graph& hardware,
                                   const Embedding& phi) {
  check_domain(original, hardware, phi);
  EmbeddingReport report;

  std::map<VertexId, VertexId> owner;
  for (const auto& [v, chain] : phi.chains()) {
    if (std::adjacent_find(chain.begin(), chain.end()) != chain.end()) {
      report.violations.push_back(
          {EmbeddingCondition::kDisjoint,
           "chain of '" + v + "' lists a hardware vertex twice"});
    }
    for (const auto& q : chain) {
      auto [it, fresh] = owner.emplace(q, v);
      if (!fresh && it->second != v) {
        report.violations.push_back(
            {EmbeddingCondition::kDisjoint, "hardware vertex '" + q +
                                                "' is shared by '" +
                                                it->second + "' and '" + v +
                                                "'"});
      }
    }
  }

  for (const auto& [v, chain] : phi.chains()) {
    if (chain.empty()) {
      report.violations.push_back(
          {EmbeddingCondition::kConnected, "chain of '" + v + "' is empty"});
      continue;
    }
    std::vector<VertexId> unique_chain(chain.begin(), chain.end());
    unique_chain.erase(std::unique(unique_chain.begin(), unique_chain.end()),
                       unique_chain.end());
    if (!hardware.induced(unique_chain).is_connected()) {
      report.violations.push_back(
          {EmbeddingCondition::kConnected,
           "chain of '" + v + "' induces a disconnected subgraph"});
    }
  }

  for (const auto& e : original.edges()) {
    const auto& cu = phi.chain(e.u);
    const auto& cv = phi.chain(e.v);
    bool covered = false;
    for (const auto& p : cu) {
      for (auto n : hardware.neighbors(hardware.index(p))) {
        if (std::binary_search(cv.begin(), cv.end(), hardware.vertex(n))) {
          covered = true;
          break;
        }
      }
      if (covered) break;
    }
    if (!covered) {
      report.violations.push_back(
          {EmbeddingCondition::kEdgeCovered, "no hardware edge between the chains of '" +
                                                 e.u + "' and '" + e.v + "'"});
    }
  }
  return report;
}

EmbeddedStructure build_embedded_structure(const Graph& original,
                                           const Graph& hardware,
                                           const Embedding& phi) {
  auto report = validate_embedding(original, hardware, phi);
  if (!report.valid()) {
    throw ValidationError(std::string("invalid embedding (") +
                          to_string(report.first()->condition) +
                          "): " + report.first()->message);
  }

  std::map<VertexId, VertexId> owner_of;
  std::vector<VertexId> union_vertices;
  for (const auto& [v, chain] : phi.chains()) {
    for (const auto& q : chain) {
      owner_of.emplace(q, v);
      union_vertices.push_back(q);
    }
  }

  std::vector<Edge> kept;
  for (const auto& e : hardware.edges()) {
    auto a = owner_of.find(e.u);
    auto b = owner_of.find(e.v);
    if (a == owner_of.end() || b == owner_of.end()) continue;
    if (a->second == b->second || original.has_edge(a->second, b->second)) {
      kept.push_back(e);
    }
  }

  EmbeddedStructure s;
  s.original = original;
  s.embedding = phi;
  s.graph = Graph(std::move(union_vertices), std::move(kept));
  s.owner.reserve(s.graph.num_vertices());
  for (const auto& q : s.graph.vertices()) s.owner.push_back(owner_of.at(q));
  for (const auto& v : original.vertices()) s.intra[v];
  s.inter.assign(original.num_edges(), {});
  s.family.assign(s.graph.num_edges(), std::nullopt);

  for (std::size_t e = 0; e < s.graph.num_edges(); ++e) {
    auto [a, b] = s.graph.endpoints(e);
    const auto& va = s.owner[a];
    const auto& vb = s.owner[b];
    if (va == vb) {
      s.intra[va].push_back(e);
    } else {
      auto oe = *original.find_edge(va, vb);
      s.inter[oe].push_back(e);
      s.family[e] = oe;
    }
  }
  return s;
}

std::vector<Edge> spanning_tree(const Graph& g) {
  std::vector<Edge> tree;
  if (g.num_vertices() == 0) return tree;
  std::vector<bool> seen(g.num_vertices(), false);
  std::deque<std::size_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (auto n : g.neighbors(cur)) {
      if (seen[n]) continue;
      seen[n] = true;
      tree.emplace_back(g.vertex(cur), g.vertex(n));
      queue.push_back(n);
    }
  }
  if (tree.size() + 1 != g.num_vertices()) {
    throw ConnectivityError("graph is disconnected; no spanning tree");
  }
  std::sort(tree.begin(), tree.end());
  return tree;
}

}  // namespace embising
