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
#include <vector>

#include "scribe/qsm/graph_search.hpp"

namespace scribe::qsm {

struct Edge {
  Vertex u = 0;
  Vertex v = 0;
  Weight weight = 1;
  std::uint32_t id = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A connected subgraph joining one terminal per attached group.
struct GroupGraph {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;
  /// (group, terminal) in attachment order.
  std::vector<std::pair<std::size_t, Vertex>> terminals;

  friend bool operator==(const GroupGraph&, const GroupGraph&) = default;
};

struct ConnectOptions {
  /// Equal-weight alternatives kept per attachment, and graphs kept overall.
  std::size_t maxGraphs = 5;
  VertexLess less;
};

struct ConnectResult {
  std::vector<GroupGraph> graphs;
  /// Every group attached.
  bool complete = false;
  bool budgetExhausted = false;
  std::size_t searches = 0;
};

/// Connects one member of each group: group 0 is joined to the nearest
/// member of another group, then each graph grows by the shortest path to
/// the nearest unattached group. Members of attached groups other than the
/// chosen terminal are never entered. A vertex listed in several groups
/// belongs to the first. Graphs spanning fewer than two groups are dropped.
ConnectResult connectGroups(const std::vector<std::vector<Vertex>>& groups, const ExpandFn& expand,
                            const ConnectOptions& options = {});

struct SteinerTree {
  std::vector<Vertex> vertices;  // sorted
  std::vector<Edge> edges;       // sorted by id
  std::vector<std::pair<std::size_t, Vertex>> terminals;
  Weight weight = 0;

  friend bool operator==(const SteinerTree&, const SteinerTree&) = default;
};

/// For each graph: the subgraph induced in `known` by its vertices, a
/// minimum spanning tree of it (Kruskal, ties by edge id), then repeated
/// removal of degree-1 non-terminals. Duplicate trees are dropped.
std::vector<SteinerTree> buildTrees(const std::vector<GroupGraph>& graphs, const std::vector<Edge>& known);

}  // namespace scribe::qsm
