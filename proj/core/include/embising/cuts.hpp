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

#include "embising/graph.hpp"

namespace embising {

/// A nonempty proper vertex subset S with its cut size |delta(S)|.
struct Cut {
  /// Dense vertex indices, ascending.
  std::vector<std::size_t> members;
  std::size_t boundary = 0;
};

enum class CutFamilyKind { kAllSubsets, kConnected, kTreeEdges };

const char* to_string(CutFamilyKind kind);

struct CutFamily {
  CutFamilyKind kind = CutFamilyKind::kAllSubsets;
  std::vector<Cut> cuts;

  std::size_t size() const noexcept { return cuts.size(); }
  /// Members of every cut as sorted id lists.
  std::vector<std::vector<VertexId>> as_ids(const Graph& g) const;
};

inline constexpr std::size_t kDefaultCutSizeGuard = 20;

/// All 2^|V| - 2 nonempty proper subsets. Throws SizeError above `guard`.
CutFamily all_subsets(const Graph& g, std::size_t guard = kDefaultCutSizeGuard);

/// Subsets S with both G[S] and G[V \ S] connected. Throws
/// ConnectivityError for disconnected graphs, SizeError above `guard`.
CutFamily connected_cuts(const Graph& g,
                         std::size_t guard = kDefaultCutSizeGuard);

/// Both sides of every tree edge, 2|V| - 2 sets, each with |delta(S)| = 1.
/// Throws StructureError unless `g` is a tree. Linear in the output size.
CutFamily tree_edge_cuts(const Graph& g);

/// The cheapest exact family for `g`: tree edges for trees, connected cuts
/// otherwise.
CutFamily default_cut_family(const Graph& g,
                             std::size_t guard = kDefaultCutSizeGuard);

}  // namespace embising
