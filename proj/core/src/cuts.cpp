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

#include "embising/cuts.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "embising/error.hpp"

namespace embising {

const char* to_string(CutFamilyKind kind) {
  switch (kind) {
    case CutFamilyKind::kAllSubsets:
      return "all-subsets";
    case CutFamilyKind::kConnected:
      return "connected";
    case CutFamilyKind::kTreeEdges:
      return "tree-edges";
  }
  return "unknown";
}

std::vector<std::vector<VertexId>> CutFamily::as_ids(const Graph& g) const {
  std::vector<std::vector<VertexId>> out;
  out.reserve(cuts.size());
  for (const auto& cut : cuts) {
    std::vector<VertexId> ids;
    ids.reserve(cut.members.size());
    for (auto i : cut.members) ids.push_back(g.vertex(i));
    out.push_back(std::move(ids));
  }
  return out;
}

namespace {

using Mask = std::uint32_t;

void check_guard(const Graph& g, std::size_t guard) {
  if (g.num_vertices() > guard || g.num_vertices() > 30) {
    throw SizeError("subset enumeration limited to " + std::to_string(guard) +
                    " vertices, got " + std::to_string(g.num_vertices()));
  }
}

std::vector<Mask> neighbor_masks(const Graph& g) {
  std::vector<Mask> masks(g.num_vertices(), 0);
  for (std::size_t i = 0; i < g.num_vertices(); ++i) {
    for (auto n : g.neighbors(i)) masks[i] |= Mask{1} << n;
  }
  return masks;
}

bool induces_connected(Mask set, const std::vector<Mask>& nbr) {
  if (set == 0) return false;
  Mask reached = set & (~set + 1);  // lowest member
  Mask frontier = reached;
  while (frontier != 0) {
    Mask next = 0;
    for (Mask f = frontier; f != 0; f &= f - 1) {
      next |= nbr[std::countr_zero(f)];
    }
    next &= set & ~reached;
    reached |= next;
    frontier = next;
  }
  return reached == set;
}

Cut make_cut(Mask set, const Graph& g) {
  Cut cut;
  for (Mask f = set; f != 0; f &= f - 1) {
    cut.members.push_back(static_cast<std::size_t>(std::countr_zero(f)));
  }
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.endpoints(e);
    bool in_a = (set >> a) & 1U;
    bool in_b = (set >> b) & 1U;
    if (in_a != in_b) ++cut.boundary;
  }
  return cut;
}

}  // namespace

CutFamily all_subsets(const Graph& g, std::size_t guard) {
  check_guard(g, guard);
  CutFamily family{CutFamilyKind::kAllSubsets, {}};
  const auto n = g.num_vertices();
  if (n < 2) return family;
  const Mask full = (Mask{1} << n) - 1;
  family.cuts.reserve(full - 1);
  for (Mask set = 1; set < full; ++set) family.cuts.push_back(make_cut(set, g));
  return family;
}

CutFamily connected_cuts(const Graph& g, std::size_t guard) {
  check_guard(g, guard);
  if (!g.is_connected()) {
    throw ConnectivityError("connected cuts need a connected graph");
  }
  CutFamily family{CutFamilyKind::kConnected, {}};
  const auto n = g.num_vertices();
  if (n < 2) return family;
  const Mask full = (Mask{1} << n) - 1;
  const auto nbr = neighbor_masks(g);
  for (Mask set = 1; set < full; ++set) {
    if (induces_connected(set, nbr) && induces_connected(full & ~set, nbr)) {
      family.cuts.push_back(make_cut(set, g));
    }
  }
  return family;
}

CutFamily tree_edge_cuts(const Graph& g) {
  if (!g.is_tree()) throw StructureError("tree edge cuts need a tree");
  CutFamily family{CutFamilyKind::kTreeEdges, {}};
  const auto n = g.num_vertices();
  if (n < 2) return family;

  // Iterative DFS from vertex 0: preorder positions make every subtree a
  // contiguous range [enter, leave).
  std::vector<std::size_t> parent(n, n), order, enter(n), leave(n);
  order.reserve(n);
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};
  parent[0] = 0;
  enter[0] = 0;
  order.push_back(0);
  while (!stack.empty()) {
    auto& [v, next] = stack.back();
    const auto& nbrs = g.neighbors(v);
    if (next < nbrs.size()) {
      auto w = nbrs[next++];
      if (w == parent[v] && v != 0) continue;
      if (w == 0) continue;
      parent[w] = v;
      enter[w] = order.size();
      order.push_back(w);
      stack.emplace_back(w, 0);
    } else {
      leave[v] = order.size();
      stack.pop_back();
    }
  }

  family.cuts.reserve(2 * (n - 1));
  std::vector<bool> in_subtree(n);
  for (std::size_t e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.endpoints(e);
    const auto child = parent[b] == a ? b : a;
    std::fill(in_subtree.begin(), in_subtree.end(), false);
    for (auto p = enter[child]; p < leave[child]; ++p) in_subtree[order[p]] = true;

    Cut below{{}, 1}, above{{}, 1};
    for (std::size_t i = 0; i < n; ++i) {
      (in_subtree[i] ? below : above).members.push_back(i);
    }
    // Side containing the edge's first endpoint comes first.
    if (in_subtree[a]) {
      family.cuts.push_back(std::move(below));
      family.cuts.push_back(std::move(above));
    } else {
      family.cuts.push_back(std::move(above));
      family.cuts.push_back(std::move(below));
    }
  }
  return family;
}

CutFamily default_cut_family(const Graph& g, std::size_t guard) {
  if (g.is_tree()) return tree_edge_cuts(g);
  return connected_cuts(g, guard);
}

}  // namespace embising
