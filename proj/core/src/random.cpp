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

#include "embising/random.hpp"

#include <algorithm>
#include <queue>
#include <set>

#include "embising/error.hpp"

namespace embising {

std::vector<VertexId> numbered_ids(std::size_t n, const std::string& prefix) {
  std::size_t width = 1;
  for (std::size_t k = 10; k < n; k *= 10) ++width;
  std::vector<VertexId> ids;
  ids.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto digits = std::to_string(i);
    ids.push_back(prefix + std::string(width - std::min(width, digits.size()), '0') +
                  digits);
  }
  return ids;
}

namespace {

std::vector<std::pair<std::size_t, std::size_t>> random_tree_edges(
    std::size_t n, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (n < 2) return edges;
  if (n == 2) return {{0, 1}};
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::vector<std::size_t> code(n - 2);
  for (auto& c : code) c = pick(rng);

  std::vector<std::size_t> degree(n, 1);
  for (auto c : code) ++degree[c];
  std::priority_queue<std::size_t, std::vector<std::size_t>, std::greater<>> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  for (auto c : code) {
    auto leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  auto a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return edges;
}

Graph from_index_edges(
    std::size_t n, const std::string& prefix,
    const std::vector<std::pair<std::size_t, std::size_t>>& index_edges) {
  auto ids = numbered_ids(n, prefix);
  std::vector<Edge> edges;
  edges.reserve(index_edges.size());
  for (auto [a, b] : index_edges) edges.emplace_back(ids[a], ids[b]);
  return Graph(std::move(ids), std::move(edges));
}

}  // namespace

Graph random_tree(std::size_t n, Rng& rng, const std::string& prefix) {
  return from_index_edges(n, prefix, random_tree_edges(n, rng));
}

Graph random_connected_graph(std::size_t n, double extra, Rng& rng,
                             const std::string& prefix) {
  auto edges = random_tree_edges(n, rng);
  std::set<std::pair<std::size_t, std::size_t>> present;
  for (auto [a, b] : edges) present.emplace(std::min(a, b), std::max(a, b));
  std::bernoulli_distribution add(extra);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!present.contains({a, b}) && add(rng)) edges.emplace_back(a, b);
    }
  }
  return from_index_edges(n, prefix, edges);
}

SubproblemInstance random_instance(Graph g, Rng& rng, double gamma,
                                   double sigma_max, double lambda_fraction) {
  SubproblemInstance inst;
  inst.vertex = "v";
  inst.gamma = gamma;
  std::uniform_real_distribution<double> sigma(0.0, sigma_max);
  do {
    inst.sigma.clear();
    for (std::size_t i = 0; i < g.num_vertices(); ++i) inst.sigma.push_back(sigma(rng));
  } while (!(inst.sigma_total() > 0.0));
  std::uniform_real_distribution<double> fraction(0.0, lambda_fraction);
  inst.lambda = fraction(rng) * inst.sigma_total();
  inst.graph = std::move(g);
  return inst;
}

IsingModel random_model(Graph g, Rng& rng, double weight_max,
                        double strength_min, double strength_max) {
  std::uniform_real_distribution<double> weight(-weight_max, weight_max);
  std::uniform_real_distribution<double> magnitude(strength_min, strength_max);
  std::bernoulli_distribution negative(0.5);
  std::vector<double> weights, strengths;
  for (std::size_t i = 0; i < g.num_vertices(); ++i) weights.push_back(weight(rng));
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    const double s = magnitude(rng);
    strengths.push_back(negative(rng) ? -s : s);
  }
  return IsingModel(std::move(g), std::move(weights), std::move(strengths));
}

EmbeddingInstance random_embedding(const Graph& original, Rng& rng,
                                   std::size_t max_chain) {
  if (max_chain == 0) throw DomainError("chains need at least one vertex");
  std::uniform_int_distribution<std::size_t> chain_size(1, max_chain);
  const auto n = original.num_vertices();

  std::vector<std::vector<std::size_t>> chains(n);
  std::vector<std::pair<std::size_t, std::size_t>> hw_edges;
  std::size_t next = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto size = chain_size(rng);
    const auto base = next;
    for (std::size_t i = 0; i < size; ++i) chains[v].push_back(next++);
    for (auto [a, b] : random_tree_edges(size, rng)) {
      hw_edges.emplace_back(base + a, base + b);
    }
  }
  const std::size_t unused = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
  const std::size_t total = next + unused;

  std::set<std::pair<std::size_t, std::size_t>> present;
  for (auto [a, b] : hw_edges) present.emplace(std::min(a, b), std::max(a, b));
  auto connect = [&](std::size_t a, std::size_t b) {
    auto key = std::make_pair(std::min(a, b), std::max(a, b));
    if (a != b && present.insert(key).second) hw_edges.push_back(key);
  };
  auto member = [&](std::size_t v) {
    const auto& c = chains[v];
    return c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)];
  };

  std::uniform_int_distribution<int> copies(1, 2);
  for (std::size_t e = 0; e < original.num_edges(); ++e) {
    auto [a, b] = original.endpoints(e);
    for (int k = copies(rng); k > 0; --k) connect(member(a), member(b));
  }
  // Distractors: an edge between chains of some non-adjacent pair, extra
  // intra edges, and edges to unused vertices.
  std::bernoulli_distribution coin(0.5);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (!original.has_edge(original.vertex(a), original.vertex(b)) && coin(rng)) {
        connect(member(a), member(b));
      }
    }
    if (chains[a].size() > 2 && coin(rng)) connect(chains[a].front(), chains[a].back());
  }
  for (std::size_t u = next; u < total; ++u) {
    if (next > 0) connect(u, std::uniform_int_distribution<std::size_t>(0, next - 1)(rng));
  }

  EmbeddingInstance out{from_index_edges(total, "h", hw_edges), {}};
  Embedding::ChainMap map;
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<VertexId> chain;
    for (auto q : chains[v]) chain.push_back(out.hardware.vertex(q));
    map.emplace(original.vertex(v), std::move(chain));
  }
  out.embedding = Embedding(std::move(map));
  return out;
}

}  // namespace embising
