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

#include "scribe/qsm/relax.hpp"

#include <algorithm>

#include <spdlog/spdlog.h>

#include "scribe/fed/federation.hpp"
#include "scribe/rdf/sparql.hpp"
#include "scribe/util/errors.hpp"
#include "scribe/util/stopwatch.hpp"

namespace scribe::qsm {

using rdf::Term;

ExpansionGraph::ExpansionGraph(rdf::Endpoint& endpoint, std::size_t budget, std::set<std::string> weighted, Weight wQ,
                               Weight wDefault)
    : endpoint_(endpoint), budget_(budget), weighted_(std::move(weighted)), wQ_(wQ), wDefault_(wDefault) {
  if (wQ == 0 || wQ >= wDefault) throw InvalidQuery("edge weights need 0 < wQ < wDefault");
}

Vertex ExpansionGraph::intern(const Term& t) {
  auto [it, fresh] = ids_.try_emplace(t, static_cast<Vertex>(terms_.size()));
  if (fresh) {
    terms_.push_back(t);
    keys_.push_back(t.toString());
  }
  return it->second;
}

std::vector<std::vector<Term>> ExpansionGraph::fetch(const rdf::StructuredQuery& q) {
  ++queries_;
  try {
    auto outcome = endpoint_.execute(rdf::serializeSparql(q));
    if (outcome.timedOut()) return {};
    return std::move(outcome.rows().rows);
  } catch (const Error& e) {
    spdlog::warn("expansion query failed: {}", e.what());
    return {};
  }
}

void ExpansionGraph::addEdge(Vertex s, const Term& p, Vertex o, Vertex from, std::vector<Arc>& arcs) {
  auto [it, fresh] = edgeIds_.try_emplace({s, p, o}, static_cast<std::uint32_t>(edges_.size()));
  if (fresh) {
    const Weight w = weighted_.count(p.value()) ? wQ_ : wDefault_;
    edges_.push_back({s, o, w, it->second});
    rdfEdges_.push_back({s, o, p});
  }
  const auto& e = edges_[it->second];
  if (s != o) arcs.push_back({from == s ? o : s, e.weight, e.id});
}

const std::vector<Arc>* ExpansionGraph::expand(Vertex v) {
  if (auto it = memo_.find(v); it != memo_.end()) {
    ++memoHits_;
    trace_.push_back({{"vertex", keys_[v]}, {"action", "memo"}, {"used", queries_}});
    return &it->second;
  }
  const Term t = terms_[v];
  const std::size_t need = t.isLiteral() ? 1 : 2;
  if (remaining() < need) {
    trace_.push_back({{"vertex", keys_[v]}, {"action", "exhausted"}, {"used", queries_}});
    return nullptr;
  }
  if (auto s = siblings_.find(v); s != siblings_.end() && s->second > remaining()) {
    ++guarded_;
    trace_.push_back({{"vertex", keys_[v]}, {"action", "guard"}, {"siblings", s->second}, {"used", queries_}});
    return &none_;
  }

  const std::size_t before = terms_.size();
  std::vector<Arc> arcs;
  auto s = Term::variable("s"), p = Term::variable("p"), o = Term::variable("o");
  {
    rdf::StructuredQuery in;
    in.patterns = {{s, p, t}};
    in.projection = {"s", "p"};
    for (auto& row : fetch(in)) {
      if (row.size() == 2 && row[0].isUri() && row[1].isUri()) addEdge(intern(row[0]), row[1], v, v, arcs);
    }
  }
  if (t.isUri()) {
    rdf::StructuredQuery out;
    out.patterns = {{t, p, o}};
    out.projection = {"p", "o"};
    for (auto& row : fetch(out)) {
      if (row.size() == 2 && row[0].isUri() && !row[1].isVariable()) addEdge(v, row[0], intern(row[1]), v, arcs);
    }
  }
  const std::size_t discovered = terms_.size() - before;
  for (auto n = before; n < terms_.size(); ++n) siblings_[static_cast<Vertex>(n)] = discovered;
  std::sort(arcs.begin(), arcs.end(), [&](const Arc& a, const Arc& b) {
    if (a.to != b.to) return keys_[a.to] < keys_[b.to];
    return a.edge < b.edge;
  });
  trace_.push_back({{"vertex", keys_[v]}, {"action", "expand"}, {"neighbors", arcs.size()}, {"used", queries_}});
  return &memo_.emplace(v, std::move(arcs)).first->second;
}

std::vector<SeedGroup> buildSeedGroups(const rdf::StructuredQuery& query, const QsmContext& ctx) {
  std::vector<SeedGroup> groups;
  const std::size_t k = std::max<std::size_t>(1, ctx.config.k);
  for (const auto& l : query.literals()) {
    SeedGroup g{groups.size(), l, {l}};
    for (const auto& alt :
         findLiteralAlternatives(l, ctx.index, ctx.config.window, ctx.config.jw, ctx.config.parallelism, ctx.pool)) {
      if (g.members.size() >= k) break;
      g.members.push_back(alt.replacement);
    }
    groups.push_back(std::move(g));
  }
  return groups;
}

RelaxationResult relaxStructure(const std::vector<SeedGroup>& groups, rdf::Endpoint& endpoint,
                                const std::set<std::string>& weightedPredicates, const RelaxOptions& options) {
  RelaxationResult result;
  result.groups = groups;
  if (groups.size() < 2) return result;

  ExpansionGraph graph(endpoint, options.budget, weightedPredicates, options.wQ, options.wDefault);
  std::vector<std::vector<Vertex>> ids;
  for (const auto& g : groups) {
    std::vector<Vertex> members;
    for (const auto& m : g.members) members.push_back(graph.intern(m));
    ids.push_back(std::move(members));
  }
  ConnectOptions connect;
  connect.maxGraphs = options.maxGraphs;
  connect.less = [&graph](Vertex a, Vertex b) { return graph.less(a, b); };
  auto connected = connectGroups(ids, [&graph](Vertex v) { return graph.expand(v); }, connect);
  result.complete = connected.complete;
  result.budgetExhausted = connected.budgetExhausted;

  for (const auto& st : buildTrees(connected.graphs, graph.edges())) {
    RelaxationTree tree;
    std::vector<Vertex> order = st.vertices;
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return graph.less(a, b); });
    std::map<Vertex, std::size_t> at;
    for (auto v : order) {
      at.emplace(v, tree.vertices.size());
      tree.vertices.push_back(graph.term(v));
    }
    for (const auto& e : st.edges) {
      const auto& re = graph.rdfEdge(e.id);
      tree.edges.push_back({at.at(re.subject), at.at(re.object), re.predicate, e.weight});
    }
    for (const auto& [group, v] : st.terminals) tree.terminals.emplace_back(group, at.at(v));
    tree.totalWeight = st.weight;
    result.trees.push_back(std::move(tree));
  }
  result.queriesIssued = graph.queriesIssued();
  result.memoHits = graph.memoHits();
  result.trace = {{"budget", graph.budget()},
                  {"used", graph.queriesIssued()},
                  {"memoHits", graph.memoHits()},
                  {"guarded", graph.guarded()},
                  {"searches", connected.searches},
                  {"complete", connected.complete},
                  {"trees", result.trees.size()},
                  {"events", graph.trace()}};
  return result;
}

namespace {

using Signature = std::set<std::pair<std::string, char>>;

}  // namespace

rdf::StructuredQuery treeToQuery(const RelaxationTree& tree, const rdf::StructuredQuery& original,
                                 const std::vector<SeedGroup>& groups) {
  const auto originalVars = original.patternVariables();
  std::map<std::string, Signature> want;
  for (const auto& p : original.patterns) {
    if (!p.predicate.isUri()) continue;
    if (p.subject.isVariable()) want[p.subject.value()].insert({p.predicate.value(), 's'});
    if (p.object.isVariable()) want[p.object.value()].insert({p.predicate.value(), 'o'});
  }
  std::vector<Signature> have(tree.vertices.size());
  std::vector<std::set<std::size_t>> adjacent(tree.vertices.size());
  for (const auto& e : tree.edges) {
    have[e.subject].insert({e.predicate.value(), 's'});
    have[e.object].insert({e.predicate.value(), 'o'});
    adjacent[e.subject].insert(e.object);
    adjacent[e.object].insert(e.subject);
  }

  std::map<std::size_t, std::string> name;
  std::set<std::string> used;
  for (const auto& var : originalVars) {
    std::size_t best = tree.vertices.size(), bestScore = 0;
    for (std::size_t v = 0; v < tree.vertices.size(); ++v) {
      if (!tree.vertices[v].isUri() || name.count(v)) continue;
      std::size_t score = 0;
      for (const auto& sig : want[var]) score += have[v].count(sig);
      if (score > bestScore) {
        bestScore = score;
        best = v;
      }
    }
    if (best == tree.vertices.size()) {
      // Fall back to the vertex next to the literal the variable was attached to.
      for (const auto& p : original.patterns) {
        if (!(p.subject.isVariable() && p.subject.value() == var && p.object.isLiteral())) continue;
        for (const auto& [group, v] : tree.terminals) {
          if (group >= groups.size() || groups[group].literal != p.object) continue;
          for (auto n : adjacent[v]) {
            if (tree.vertices[n].isUri() && !name.count(n)) {
              best = n;
              break;
            }
          }
        }
        if (best != tree.vertices.size()) break;
      }
    }
    if (best != tree.vertices.size()) {
      name[best] = var;
      used.insert(var);
    }
  }
  std::size_t fresh = 0;
  for (std::size_t v = 0; v < tree.vertices.size(); ++v) {
    if (!tree.vertices[v].isUri() || name.count(v)) continue;
    std::string n;
    do n = "v" + std::to_string(++fresh);
    while (used.count(n) || std::find(originalVars.begin(), originalVars.end(), n) != originalVars.end());
    name[v] = n;
    used.insert(n);
  }

  auto termOf = [&](std::size_t v) {
    auto it = name.find(v);
    return it == name.end() ? tree.vertices[v] : Term::variable(it->second);
  };
  rdf::StructuredQuery q;
  for (const auto& e : tree.edges) q.patterns.push_back({termOf(e.subject), e.predicate, termOf(e.object)});

  auto mapped = [&](const std::string& var) { return var.empty() || used.count(var) > 0; };
  bool projectionMapped = std::all_of(original.projection.begin(), original.projection.end(), mapped);
  if (original.count) {
    projectionMapped = projectionMapped && mapped(original.count->argument) &&
                       std::all_of(original.modifiers.groupBy.begin(), original.modifiers.groupBy.end(), mapped);
  }
  if (projectionMapped) {
    q.projection = original.projection;
    q.count = original.count;
    q.modifiers.groupBy = original.modifiers.groupBy;
  } else {
    for (const auto& v : q.patternVariables()) q.projection.push_back(v);
  }
  for (const auto& f : original.filters) {
    std::vector<std::string> vars;
    f.collectVariables(vars);
    if (std::all_of(vars.begin(), vars.end(), mapped)) q.filters.push_back(f);
  }
  q.modifiers.distinct = q.count ? original.modifiers.distinct : true;
  if (original.modifiers.orderBy) {
    const auto& key = original.modifiers.orderBy->variable;
    bool known = mapped(key) || (q.count && q.count->alias == key);
    if (known) q.modifiers.orderBy = original.modifiers.orderBy;
  }
  q.modifiers.limit = original.modifiers.limit;
  q.modifiers.offset = original.modifiers.offset;
  return q;
}

std::string relaxationMessage(const rdf::StructuredQuery& q, std::size_t answers) {
  std::string body;
  for (const auto& p : q.patterns) {
    if (!body.empty()) body += " . ";
    body += shortTerm(p.subject) + " " + shortTerm(p.predicate) + " " +
            (p.object.isLiteral() ? "\"" + p.object.value() + "\"" : shortTerm(p.object));
  }
  return "Did you mean the query (" + body + ")? There are " + std::to_string(answers) + " answers available.";
}

std::vector<SuggestedQuery> treesToQueries(const std::vector<RelaxationTree>& trees,
                                           const rdf::StructuredQuery& original, const std::vector<SeedGroup>& groups,
                                           const std::vector<rdf::EndpointPtr>& endpoints, std::size_t rowCap) {
  std::vector<SuggestedQuery> out;
  std::set<std::string> seen{rdf::serializeSparql(original)};
  for (const auto& tree : trees) {
    SuggestedQuery s;
    s.query = treeToQuery(tree, original, groups);
    s.kind = ChangeKind::Structure;
    s.tree = tree;
    if (!seen.insert(rdf::serializeSparql(s.query)).second) continue;
    if (auto p = fed::prefetchQuery(endpoints, s.query, rowCap)) {
      s.answerCount = p->answerCount;
      s.prefetched = std::move(p->rows);
      s.message = relaxationMessage(s.query, s.answerCount);
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<SuggestedQuery> suggestRelaxations(const rdf::StructuredQuery& query, const QsmContext& ctx,
                                               const RelaxOptions& options, RelaxationResult* details,
                                               QsmTimings* timings) {
  if (query.literals().size() < 2 || ctx.endpoints.empty()) return {};
  Stopwatch relaxClock, executionClock;
  RelaxationResult result;
  std::vector<SeedGroup> groups;
  {
    auto lap = relaxClock.lap();
    groups = buildSeedGroups(query, ctx);
    std::set<std::string> weighted;
    const auto predicates = ctx.index.predicates();
    for (const auto& p : query.patterns) {
      if (!p.predicate.isUri()) continue;
      weighted.insert(p.predicate.value());
      for (const auto& alt : findPredicateAlternatives(p.predicate, predicates, ctx.lexicon, ctx.config.jw,
                                                       ctx.config.parallelism, ctx.pool)) {
        weighted.insert(alt.replacement.value());
      }
    }
    result = relaxStructure(groups, *ctx.endpoints.front(), weighted, options);
  }
  std::vector<SuggestedQuery> out;
  {
    auto lap = executionClock.lap();
    out = treesToQueries(result.trees, query, result.groups, ctx.endpoints, ctx.config.prefetchRowCap);
  }
  if (timings) {
    timings->relaxationMs += relaxClock.ms();
    timings->candidateExecutionMs += executionClock.ms();
  }
  if (details) *details = std::move(result);
  return out;
}

}  // namespace scribe::qsm
