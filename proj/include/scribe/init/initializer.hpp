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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "scribe/init/snapshot.hpp"
#include "scribe/rdf/endpoint.hpp"

namespace scribe::init {

/// Bootstraps the cache for one endpoint. Every query is counted in stats();
/// harvest and significance queries are additionally charged to the budget.
class Initializer {
 public:
  Initializer(rdf::Endpoint& endpoint, InitConfig config);

  /// All predicates by descending frequency. Throws InitFailure on timeout.
  std::vector<PredicateStat> fetchPredicates();
  /// Class hierarchy from subClassOf; empty when the endpoint declares none.
  ClassHierarchy fetchHierarchy();
  /// rdf:type classes by descending frequency.
  std::vector<PredicateStat> fetchTypes();
  /// Predicates by descending number of literal objects.
  std::vector<PredicateStat> fetchLiteralPredicates();
  /// Keeps predicates with at least one literal passing the language and
  /// length filter. Order is preserved; timeouts exclude the predicate.
  std::vector<std::string> filterLiteralPredicates(const std::vector<std::string>& predicates);

  /// Filtered literals, deduplicated and sorted. Descends `hierarchy` on
  /// timeouts, or pages through `types` when the hierarchy is empty.
  std::vector<std::string> harvestLiterals(const ClassHierarchy& hierarchy, const std::vector<std::string>& predicates,
                                           const std::vector<std::string>& types = {});
  /// Distinct upstream subject counts per literal, merged across
  /// (class, predicate) partitions by maximum.
  std::map<std::string, std::size_t> scoreSignificance(const ClassHierarchy& hierarchy,
                                                       const std::vector<std::string>& predicates,
                                                       const std::vector<std::string>& types = {});

  /// Single-pass literal harvest and significance for local data.
  std::vector<std::string> harvestWarehouse();
  std::map<std::string, std::size_t> scoreWarehouse();

  /// Runs the whole pipeline.
  CacheSnapshot run();

  const InitStats& stats() const noexcept { return stats_; }
  const BudgetMeter& meter() const noexcept { return meter_; }
  const InitConfig& config() const noexcept { return config_; }

 private:
  /// Nullopt when the budget refuses a budgeted query.
  std::optional<rdf::QueryOutcome> issue(const std::string& sparql, bool budgeted);
  rdf::ResultSet mustAnswer(const std::string& sparql, const char* what);
  bool acceptLiteral(const rdf::Term& t) const;
  bool collectLiterals(const rdf::ResultSet& rs, std::vector<std::string>& out) const;
  void mergeSignificance(const rdf::ResultSet& rs, std::map<std::string, std::size_t>& out) const;

  rdf::Endpoint& endpoint_;
  InitConfig config_;
  BudgetMeter meter_;
  InitStats stats_;
};

/// Builds a snapshot for an endpoint.
CacheSnapshot initialize(rdf::Endpoint& endpoint, const InitConfig& config);

}  // namespace scribe::init
