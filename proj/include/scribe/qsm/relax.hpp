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
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "scribe/qsm/steiner.hpp"
#include "scribe/qsm/suggestion.hpp"
#include "scribe/qsm/terms.hpp"
#include "scribe/rdf/endpoint.hpp"

namespace scribe::qsm {

struct RelaxOptions {
  std::size_t budget = 100;
  Weight wQ = 1;
  Weight wDefault = 2;
  std::size_t maxGraphs = 5;
};

/// The data graph as discovered by expansion queries. Each vertex is
/// fetched at most once; literals cost one query (incoming triples), IRIs
/// two (outgoing and incoming). Not thread-safe; owned by one relaxation.
class ExpansionGraph {
 public:
  struct RdfEdge {
    Vertex subject = 0;
    Vertex object = 0;
    rdf::Term predicate;
  };

  /// Edges whose predicate is in `weighted` cost wQ, all others wDefault.
  ExpansionGraph(rdf::Endpoint& endpoint, std::size_t budget, std::set<std::string> weighted, Weight wQ = 1,
                 Weight wDefault = 2);

  Vertex intern(const rdf::Term& t);
  const rdf::Term& term(Vertex v) const { return terms_[v]; }
  const std::string& key(Vertex v) const { return keys_[v]; }
  bool less(Vertex a, Vertex b) const { return keys_[a] < keys_[b]; }
  std::size_t vertexCount() const noexcept { return terms_.size(); }

  /// Memoized neighbors; nullptr when the budget cannot cover the queries.
  /// A vertex discovered together with more siblings than the remaining
  /// budget is not expanded and reports no neighbors.
  const std::vector<Arc>* expand(Vertex v);
  bool expanded(Vertex v) const { return memo_.count(v) > 0; }

  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const RdfEdge& rdfEdge(std::uint32_t id) const { return rdfEdges_[id]; }

  std::size_t queriesIssued() const noexcept { return queries_; }
  std::size_t budget() const noexcept { return budget_; }
  std::size_t remaining() const noexcept { return budget_ - queries_; }
  std::size_t memoHits() const noexcept { return memoHits_; }
  std::size_t guarded() const noexcept { return guarded_; }
  /// Expansion order and budget use.
  const nlohmann::json& trace() const noexcept { return trace_; }

 private:
  std::vector<std::vector<rdf::Term>> fetch(const rdf::StructuredQuery& q);
  void addEdge(Vertex s, const rdf::Term& p, Vertex o, Vertex from, std::vector<Arc>& arcs);

  rdf::Endpoint& endpoint_;
  std::size_t budget_;
  std::set<std::string> weighted_;
  Weight wQ_, wDefault_;
  std::vector<rdf::Term> terms_;
  std::vector<std::string> keys_;
  std::map<rdf::Term, Vertex> ids_;
  std::map<Vertex, std::vector<Arc>> memo_;
  std::map<Vertex, std::size_t> siblings_;
  std::vector<Edge> edges_;
  std::vector<RdfEdge> rdfEdges_;
  std::map<std::tuple<Vertex, rdf::Term, Vertex>, std::uint32_t> edgeIds_;
  std::size_t queries_ = 0;
  std::size_t memoHits_ = 0;
  std::size_t guarded_ = 0;
  nlohmann::json trace_ = nlohmann::json::array();
  const std::vector<Arc> none_;
};

struct SeedGroup {
  std::size_t id = 0;
  rdf::Term literal;
  /// The literal followed by its best k-1 alternatives.
  std::vector<rdf::Term> members;
};

/// One group per literal constant of the query, in order of appearance.
std::vector<SeedGroup> buildSeedGroups(const rdf::StructuredQuery& query, const QsmContext& ctx);

struct RelaxationResult {
  std::vector<SeedGroup> groups;
  std::vector<RelaxationTree> trees;
  bool complete = false;
  bool budgetExhausted = false;
  std::size_t queriesIssued = 0;
  std::size_t memoHits = 0;
  nlohmann::json trace;
};

/// Connects the seed groups through the data reachable from `endpoint` and
/// returns the pruned spanning trees. Needs at least two groups.
RelaxationResult relaxStructure(const std::vector<SeedGroup>& groups, rdf::Endpoint& endpoint,
                                const std::set<std::string>& weightedPredicates, const RelaxOptions& options = {});

/// Literals stay constants, IRIs become variables. Original variables are
/// mapped onto the tree vertex sharing the most (predicate, direction)
/// pairs, else onto the vertex next to the literal they were attached to;
/// when a projected variable cannot be mapped every variable is projected.
rdf::StructuredQuery treeToQuery(const RelaxationTree& tree, const rdf::StructuredQuery& original,
                                 const std::vector<SeedGroup>& groups);

/// Converts trees to queries, drops duplicates, and keeps answered ones.
std::vector<SuggestedQuery> treesToQueries(const std::vector<RelaxationTree>& trees,
                                           const rdf::StructuredQuery& original,
                                           const std::vector<SeedGroup>& groups,
                                           const std::vector<rdf::EndpointPtr>& endpoints,
                                           std::size_t rowCap = 1000);

/// Seed groups, weighted predicates (query predicates and their
/// alternatives), expansion on the first endpoint, and prefetched queries.
/// Queries with fewer than two literals yield nothing.
std::vector<SuggestedQuery> suggestRelaxations(const rdf::StructuredQuery& query, const QsmContext& ctx,
                                               const RelaxOptions& options = {}, RelaxationResult* details = nullptr,
                                               QsmTimings* timings = nullptr);

std::string relaxationMessage(const rdf::StructuredQuery& q, std::size_t answers);

}  // namespace scribe::qsm
