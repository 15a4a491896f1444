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

#include "scribe/qsm/graph_search.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace scribe::qsm {

namespace {

struct Link {
  Vertex from;
  std::uint32_t edge;
};

/// One direction of the search.
struct Side {
  std::unordered_map<Vertex, Weight> dist;
  std::unordered_map<Vertex, std::vector<Link>> parents;
  std::unordered_set<Vertex> settled;
  std::vector<std::pair<Weight, Vertex>> heap;  // min-heap via `greater`

  Weight label(Vertex v) const {
    auto it = dist.find(v);
    return it == dist.end() ? kInfinity : it->second;
  }
};

class Frontier {
 public:
  explicit Frontier(const VertexLess& less) : less_(less) {}

  bool operator()(const std::pair<Weight, Vertex>& a, const std::pair<Weight, Vertex>& b) const {
    if (a.first != b.first) return a.first > b.first;
    return less_ ? less_(b.second, a.second) : a.second > b.second;
  }

 private:
  const VertexLess& less_;
};

void push(Side& side, const Frontier& cmp, Weight d, Vertex v) {
  side.heap.emplace_back(d, v);
  std::push_heap(side.heap.begin(), side.heap.end(), cmp);
}

/// Drops stale heap entries and returns the top distance.
Weight top(Side& side, const Frontier& cmp) {
  while (!side.heap.empty()) {
    auto [d, v] = side.heap.front();
    if (!side.settled.count(v) && side.label(v) == d) return d;
    std::pop_heap(side.heap.begin(), side.heap.end(), cmp);
    side.heap.pop_back();
  }
  return kInfinity;
}

Vertex pop(Side& side, const Frontier& cmp) {
  std::pop_heap(side.heap.begin(), side.heap.end(), cmp);
  auto v = side.heap.back().second;
  side.heap.pop_back();
  side.settled.insert(v);
  return v;
}

bool relax(Side& side, const Frontier& cmp, Vertex from, const Arc& arc) {
  const Weight nd = side.label(from) + arc.weight;
  const Weight old = side.label(arc.to);
  if (nd < old) {
    side.dist[arc.to] = nd;
    side.parents[arc.to] = {{from, arc.edge}};
    push(side, cmp, nd, arc.to);
    return true;
  }
  if (nd == old && !side.settled.count(arc.to)) side.parents[arc.to].push_back({from, arc.edge});
  return false;
}

/// Chains from a root of `side` to v, root first; at most `cap`.
void chains(const Side& side, Vertex v, std::size_t cap, const VertexLess& less, std::vector<Path>& out) {
  struct Frame {
    std::vector<Vertex> vs;
    std::vector<std::uint32_t> es;
  };
  std::vector<Frame> stack{{{v}, {}}};
  while (!stack.empty() && out.size() < cap) {
    auto f = std::move(stack.back());
    stack.pop_back();
    auto it = side.parents.find(f.vs.back());
    if (it == side.parents.end() || it->second.empty()) {
      Path p;
      p.vertices.assign(f.vs.rbegin(), f.vs.rend());
      p.edges.assign(f.es.rbegin(), f.es.rend());
      out.push_back(std::move(p));
      continue;
    }
    auto links = it->second;
    std::sort(links.begin(), links.end(), [&](const Link& a, const Link& b) {
      if (a.from != b.from) return less ? less(a.from, b.from) : a.from < b.from;
      return a.edge < b.edge;
    });
    for (auto l = links.rbegin(); l != links.rend(); ++l) {
      Frame next = f;
      next.vs.push_back(l->from);
      next.es.push_back(l->edge);
      stack.push_back(std::move(next));
    }
  }
}

bool pathLess(const Path& a, const Path& b, const VertexLess& less) {
  auto vl = [&](Vertex x, Vertex y) { return less ? less(x, y) : x < y; };
  if (a.vertices != b.vertices) {
    return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(), vl);
  }
  return a.edges < b.edges;
}

struct Meeting {
  Vertex forward;
  std::uint32_t edge;
  Vertex reverse;
  Weight weight;
  bool sameVertex;
};

}  // namespace

SearchResult bidirectionalSearch(const std::vector<Vertex>& sources, const std::vector<Vertex>& targets,
                                 const ExpandFn& expand, const SearchOptions& options) {
  SearchResult result;
  const Frontier cmp(options.less);
  Side sides[2];
  for (auto s : sources) {
    if (options.blocked.count(s) || sides[0].dist.count(s)) continue;
    sides[0].dist[s] = 0;
    push(sides[0], cmp, 0, s);
  }
  for (auto t : targets) {
    if (options.blocked.count(t) || sides[1].dist.count(t)) continue;
    sides[1].dist[t] = 0;
    push(sides[1], cmp, 0, t);
  }

  Weight mu = kInfinity;
  std::vector<Meeting> meetings;
  auto note = [&](Weight cost, Meeting m) {
    if (cost < mu) {
      mu = cost;
      meetings.clear();
    }
    if (cost == mu) meetings.push_back(m);
  };
  for (auto s : sources) {
    if (sides[0].dist.count(s) && sides[1].dist.count(s)) note(0, {s, 0, s, 0, true});
  }

  std::unordered_set<Vertex> expanded;
  int turn = 0;
  while (true) {
    Weight tops[2] = {top(sides[0], cmp), top(sides[1], cmp)};
    if (tops[0] == kInfinity && tops[1] == kInfinity) break;
    if (mu == kInfinity && (tops[0] == kInfinity || tops[1] == kInfinity)) break;
    if (mu != kInfinity && (tops[0] == kInfinity || tops[1] == kInfinity || tops[0] + tops[1] >= mu)) break;

    const int s = turn;
    turn ^= 1;
    Side& self = sides[s];
    Side& other = sides[s ^ 1];
    const Vertex v = pop(self, cmp);
    const auto* arcs = expand(v);
    expanded.insert(v);
    if (!arcs) {
      result.budgetExhausted = true;
      break;
    }
    for (const auto& arc : *arcs) {
      if (options.blocked.count(arc.to)) continue;
      relax(self, cmp, v, arc);
      const Weight otherLabel = other.label(arc.to);
      if (otherLabel != kInfinity) {
        const Weight cost = self.label(v) + arc.weight + otherLabel;
        note(cost, s == 0 ? Meeting{v, arc.edge, arc.to, arc.weight, false} : Meeting{arc.to, arc.edge, v, arc.weight, false});
      }
    }
  }
  result.expanded = expanded.size();
  if (mu == kInfinity) return result;
  result.distance = mu;

  // Rebuild every meeting that still attains mu under the final labels.
  std::vector<Path> paths;
  const std::size_t cap = std::max<std::size_t>(1, options.maxPaths);
  for (const auto& m : meetings) {
    if (sides[0].label(m.forward) + m.weight + sides[1].label(m.reverse) != mu) continue;
    std::vector<Path> front, back;
    chains(sides[0], m.forward, cap, options.less, front);
    chains(sides[1], m.reverse, cap, options.less, back);
    for (const auto& f : front) {
      for (const auto& b : back) {
        Path p = f;
        if (!m.sameVertex) p.edges.push_back(m.edge);
        auto bv = b.vertices;
        auto be = b.edges;
        std::reverse(bv.begin(), bv.end());
        std::reverse(be.begin(), be.end());
        p.vertices.insert(p.vertices.end(), bv.begin() + (m.sameVertex ? 1 : 0), bv.end());
        p.edges.insert(p.edges.end(), be.begin(), be.end());
        p.weight = mu;
        paths.push_back(std::move(p));
      }
    }
  }
  std::sort(paths.begin(), paths.end(), [&](const Path& a, const Path& b) { return pathLess(a, b, options.less); });
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  if (paths.size() > cap) paths.resize(cap);
  result.paths = std::move(paths);
  return result;
}

SearchResult dijkstraSearch(const std::vector<Vertex>& sources, const std::vector<Vertex>& targets,
                            const ExpandFn& expand, const SearchOptions& options) {
  SearchResult result;
  const Frontier cmp(options.less);
  Side side;
  std::unordered_set<Vertex> goal(targets.begin(), targets.end());
  for (auto s : sources) {
    if (options.blocked.count(s) || side.dist.count(s)) continue;
    side.dist[s] = 0;
    push(side, cmp, 0, s);
  }
  while (top(side, cmp) != kInfinity) {
    const Vertex v = pop(side, cmp);
    if (goal.count(v)) {
      result.distance = side.label(v);
      std::vector<Path> paths;
      chains(side, v, std::max<std::size_t>(1, options.maxPaths), options.less, paths);
      for (auto& p : paths) p.weight = *result.distance;
      result.paths = std::move(paths);
      break;
    }
    const auto* arcs = expand(v);
    ++result.expanded;
    if (!arcs) {
      result.budgetExhausted = true;
      break;
    }
    for (const auto& arc : *arcs) {
      if (!options.blocked.count(arc.to)) relax(side, cmp, v, arc);
    }
  }
  return result;
}

}  // namespace scribe::qsm
