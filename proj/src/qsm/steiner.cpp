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

#include "scribe/qsm/steiner.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace scribe::qsm {

namespace {

GroupGraph extend(const GroupGraph& g, const Path& path, std::size_t group, const std::map<Vertex, Weight>& weights) {
  GroupGraph out = g;
  std::set<Vertex> vs(out.vertices.begin(), out.vertices.end());
  vs.insert(path.vertices.begin(), path.vertices.end());
  out.vertices.assign(vs.begin(), vs.end());
  for (std::size_t i = 0; i < path.edges.size(); ++i) {
    Edge e{path.vertices[i], path.vertices[i + 1], weights.at(path.edges[i]), path.edges[i]};
    if (std::none_of(out.edges.begin(), out.edges.end(), [&](const Edge& x) { return x.id == e.id; })) {
      out.edges.push_back(e);
    }
  }
  out.terminals.emplace_back(group, path.vertices.back());
  return out;
}

}  // namespace

ConnectResult connectGroups(const std::vector<std::vector<Vertex>>& groups, const ExpandFn& expand,
                            const ConnectOptions& options) {
  ConnectResult result;
  std::map<Vertex, std::size_t> owner;
  std::vector<std::vector<Vertex>> members(groups.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    for (auto v : groups[g]) {
      if (owner.emplace(v, g).second) members[g].push_back(v);
    }
  }
  std::vector<std::size_t> live;
  for (std::size_t g = 0; g < members.size(); ++g) {
    if (!members[g].empty()) live.push_back(g);
  }
  if (live.size() < 2) return result;

  // Edge weights seen on paths, recorded from the arcs the search returns.
  std::map<Vertex, Weight> edgeWeight;
  ExpandFn recording = [&](Vertex v) -> const std::vector<Arc>* {
    const auto* arcs = expand(v);
    if (arcs) {
      for (const auto& a : *arcs) edgeWeight.emplace(a.edge, a.weight);
    }
    return arcs;
  };

  const std::size_t cap = std::max<std::size_t>(1, options.maxGraphs);
  SearchOptions search;
  search.maxPaths = cap;
  search.less = options.less;

  // First attachment: the first live group against all others.
  std::vector<Vertex> targets;
  for (std::size_t i = 1; i < live.size(); ++i) {
    targets.insert(targets.end(), members[live[i]].begin(), members[live[i]].end());
  }
  auto first = bidirectionalSearch(members[live[0]], targets, recording, search);
  ++result.searches;
  result.budgetExhausted = first.budgetExhausted;
  std::vector<GroupGraph> graphs;
  for (const auto& p : first.paths) {
    GroupGraph seed;
    seed.vertices = {p.vertices.front()};
    seed.terminals = {{live[0], p.vertices.front()}};
    graphs.push_back(extend(seed, p, owner.at(p.vertices.back()), edgeWeight));
  }
  if (graphs.empty()) return result;

  bool complete = true;
  while (true) {
    std::vector<GroupGraph> next;
    bool grew = false;
    for (const auto& g : graphs) {
      std::set<std::size_t> attached;
      for (const auto& [group, _] : g.terminals) attached.insert(group);
      std::vector<Vertex> pending;
      for (auto group : live) {
        if (!attached.count(group)) pending.insert(pending.end(), members[group].begin(), members[group].end());
      }
      if (pending.empty() || result.budgetExhausted) {
        next.push_back(g);
        continue;
      }
      SearchOptions opts = search;
      for (auto group : attached) {
        for (auto v : members[group]) {
          if (!std::binary_search(g.vertices.begin(), g.vertices.end(), v)) opts.blocked.insert(v);
        }
      }
      auto found = bidirectionalSearch(g.vertices, pending, recording, opts);
      ++result.searches;
      result.budgetExhausted = result.budgetExhausted || found.budgetExhausted;
      if (found.paths.empty()) {
        next.push_back(g);
        complete = false;
        continue;
      }
      grew = true;
      for (const auto& p : found.paths) {
        if (next.size() >= cap) break;
        next.push_back(extend(g, p, owner.at(p.vertices.back()), edgeWeight));
      }
    }
    graphs = std::move(next);
    if (!grew) break;
  }
  for (const auto& g : graphs) {
    if (g.terminals.size() < live.size()) complete = false;
  }
  result.complete = complete;
  result.graphs = std::move(graphs);
  return result;
}

std::vector<SteinerTree> buildTrees(const std::vector<GroupGraph>& graphs, const std::vector<Edge>& known) {
  std::vector<SteinerTree> out;
  std::set<std::vector<std::uint32_t>> seen;
  for (const auto& g : graphs) {
    std::map<Vertex, std::size_t> slot;
    for (auto v : g.vertices) slot.emplace(v, slot.size());
    std::vector<Edge> induced;
    for (const auto& e : known) {
      if (e.u != e.v && slot.count(e.u) && slot.count(e.v)) induced.push_back(e);
    }
    std::sort(induced.begin(), induced.end(), [](const Edge& a, const Edge& b) {
      return a.weight != b.weight ? a.weight < b.weight : a.id < b.id;
    });

    std::vector<std::size_t> parent(slot.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    std::vector<Edge> tree;
    for (const auto& e : induced) {
      auto a = find(slot[e.u]), b = find(slot[e.v]);
      if (a == b) continue;
      parent[a] = b;
      tree.push_back(e);
    }

    std::set<Vertex> terminals;
    for (const auto& [_, t] : g.terminals) terminals.insert(t);
    std::set<Vertex> alive(g.vertices.begin(), g.vertices.end());
    bool pruned = true;
    while (pruned) {
      pruned = false;
      std::map<Vertex, std::size_t> degree;
      for (const auto& e : tree) {
        ++degree[e.u];
        ++degree[e.v];
      }
      for (auto it = alive.begin(); it != alive.end();) {
        if (!terminals.count(*it) && degree[*it] <= 1) {
          const Vertex dead = *it;
          tree.erase(std::remove_if(tree.begin(), tree.end(), [&](const Edge& e) { return e.u == dead || e.v == dead; }),
                     tree.end());
          it = alive.erase(it);
          pruned = true;
        } else {
          ++it;
        }
      }
    }

    SteinerTree t;
    t.vertices.assign(alive.begin(), alive.end());
    std::sort(tree.begin(), tree.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
    t.edges = std::move(tree);
    t.terminals = g.terminals;
    for (const auto& e : t.edges) t.weight += e.weight;
    std::vector<std::uint32_t> key;
    for (const auto& e : t.edges) key.push_back(e.id);
    if (t.edges.empty() && t.vertices.size() != 1) continue;
    if (seen.insert(key).second) out.push_back(std::move(t));
  }
  return out;
}

}  // namespace scribe::qsm
