// Copyright 2026 The Scribe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <set>
#include <vector>

namespace scribe::qsm {

using Vertex = std::uint32_t;
using Weight = std::uint64_t;
inline constexpr Weight kInfinity = std::numeric_limits<Weight>::max();

/// Undirected adjacency entry; `edge` identifies the underlying edge.
struct Arc {
  Vertex to = 0;
  Weight weight = 1;
  std::uint32_t edge = 0;
};

/// Neighbors of a vertex, or nullptr when it cannot be expanded because the
/// query budget is spent. Weights must be positive.
using ExpandFn = std::function<const std::vector<Arc>*(Vertex)>;
/// Strict order used to break ties between equal distances.
using VertexLess = std::function<bool(Vertex, Vertex)>;

struct Path {
  std::vector<Vertex> vertices;      // source side first
  std::vector<std::uint32_t> edges;  // edges[i] joins vertices[i] and vertices[i+1]
  Weight weight = 0;

  friend bool operator==(const Path&, const Path&) = default;
};

struct SearchResult {
  std::optional<Weight> distance;
  /// Equal-weight shortest paths, at most maxPaths.
  std::vector<Path> paths;
  /// Distinct vertices whose neighbors were requested.
  std::size_t expanded = 0;
  bool budgetExhausted = false;
};

struct SearchOptions {
  std::size_t maxPaths = 5;
  /// Vertices never entered.
  std::set<Vertex> blocked;
  VertexLess less;
};

/// Bi-directional Dijkstra between a source set and a target set. Steps
/// alternate between the forward and reverse frontier. The best meeting
/// cost mu is updated whenever a scanned edge reaches a vertex labeled by
/// the other side; the search stops once top_f + top_r >= mu.
SearchResult bidirectionalSearch(const std::vector<Vertex>& sources, const std::vector<Vertex>& targets,
                                 const ExpandFn& expand, const SearchOptions& options = {});

/// Forward Dijkstra from the sources, stopping when a target is settled.
SearchResult dijkstraSearch(const std::vector<Vertex>& sources, const std::vector<Vertex>& targets,
                            const ExpandFn& expand, const SearchOptions& options = {});

}  // namespace scribe::qsm
