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

#include "scribe/init/initializer.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include <spdlog/spdlog.h>

#include "scribe/init/queries.hpp"
#include "scribe/rdf/evaluator.hpp"
#include "scribe/util/errors.hpp"
#include "scribe/util/text.hpp"

namespace scribe::init {

using rdf::QueryOutcome;
using rdf::ResultSet;
using rdf::Term;

namespace {

std::size_t countValue(const Term& t) {
  auto v = rdf::numericValue(t);
  if (!v || *v < 0) throw MalformedResponse("expected a non-negative count, got " + t.toString());
  return static_cast<std::size_t>(*v);
}

std::vector<PredicateStat> frequencyList(const ResultSet& rs, const char* key) {
  int k = rs.columnIndex(key), f = rs.columnIndex("frequency");
  if (k < 0 || f < 0) throw MalformedResponse(std::string("missing column ?") + key + " or ?frequency");
  std::vector<PredicateStat> out;
  for (const auto& row : rs.rows) {
    if (!row[k].isUri()) continue;
    out.push_back({row[k].value(), countValue(row[f])});
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.frequency != b.frequency ? a.frequency > b.frequency : a.uri < b.uri;
  });
  return out;
}

std::vector<std::string> uris(const std::vector<PredicateStat>& stats) {
  std::vector<std::string> out;
  for (const auto& s : stats) out.push_back(s.uri);
  return out;
}

}  // namespace

Initializer::Initializer(rdf::Endpoint& endpoint, InitConfig config)
    : endpoint_(endpoint), config_(std::move(config)), meter_(config_.queryBudget) {
  config_.validate();
}

std::optional<QueryOutcome> Initializer::issue(const std::string& sparql, bool budgeted) {
  if (budgeted && !meter_.tryConsume()) {
    stats_.budgetExhausted = true;
    return std::nullopt;
  }
  ++stats_.queriesIssued;
  stats_.budgetUsed = meter_.used();
  try {
    auto out = endpoint_.execute(sparql);
    if (out.timedOut()) ++stats_.queriesTimedOut;
    return out;
  } catch (const NetworkError& e) {
    throw InitFailure(std::string("endpoint '") + endpoint_.id() + "': " + e.what());
  } catch (const MalformedResponse& e) {
    throw InitFailure(std::string("endpoint '") + endpoint_.id() + "': " + e.what());
  }
}

ResultSet Initializer::mustAnswer(const std::string& sparql, const char* what) {
  auto out = issue(sparql, false);
  if (out->timedOut()) throw InitFailure(std::string(what) + " query timed out on endpoint '" + endpoint_.id() + "'");
  return std::move(out->rows());
}

bool Initializer::acceptLiteral(const Term& t) const {
  if (!t.isLiteral()) return false;
  if (!config_.language.empty() && t.language() != config_.language) return false;
  return text::codepointLength(t.value()) < config_.maxLiteralLength;
}

bool Initializer::collectLiterals(const ResultSet& rs, std::vector<std::string>& out) const {
  int o = rs.columnIndex("o");
  if (o < 0) throw MalformedResponse("missing column ?o");
  for (const auto& row : rs.rows) {
    if (acceptLiteral(row[o])) out.push_back(row[o].value());
  }
  return !rs.rows.empty();
}

void Initializer::mergeSignificance(const ResultSet& rs, std::map<std::string, std::size_t>& out) const {
  int o = rs.columnIndex("o"), f = rs.columnIndex("frequency");
  if (o < 0 || f < 0) throw MalformedResponse("missing column ?o or ?frequency");
  for (const auto& row : rs.rows) {
    if (!acceptLiteral(row[o])) continue;
    auto& slot = out[row[o].value()];
    slot = std::max(slot, countValue(row[f]));
  }
}

std::vector<PredicateStat> Initializer::fetchPredicates() {
  return frequencyList(mustAnswer(queries::predicates(), "predicate"), "p");
}

ClassHierarchy Initializer::fetchHierarchy() {
  auto rs = mustAnswer(queries::subclasses(), "class hierarchy");
  int c = rs.columnIndex("class"), s = rs.columnIndex("subclass");
  if (c < 0 || s < 0) throw InitFailure("class hierarchy answer lacks ?class or ?subclass");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& row : rs.rows) {
    if (row[c].isUri() && row[s].isUri()) pairs.emplace_back(row[c].value(), row[s].value());
  }
  return ClassHierarchy::fromSubClassPairs(pairs);
}

std::vector<PredicateStat> Initializer::fetchTypes() {
  return frequencyList(mustAnswer(queries::types(), "type"), "o");
}

std::vector<PredicateStat> Initializer::fetchLiteralPredicates() {
  return frequencyList(mustAnswer(queries::literalPredicates(), "literal predicate"), "p");
}

std::vector<std::string> Initializer::filterLiteralPredicates(const std::vector<std::string>& predicates) {
  std::vector<std::string> kept;
  for (const auto& p : predicates) {
    auto out = issue(queries::probeLiteral(p, config_), false);
    if (out->timedOut()) {
      spdlog::info("excluding predicate {}: probe timed out", p);
      continue;
    }
    std::vector<std::string> found;
    if (collectLiterals(out->rows(), found) && !found.empty()) kept.push_back(p);
  }
  return kept;
}

std::vector<std::string> Initializer::harvestLiterals(const ClassHierarchy& hierarchy,
                                                      const std::vector<std::string>& predicates,
                                                      const std::vector<std::string>& types) {
  std::vector<std::string> literals;
  bool stop = false;

  for (const auto& predicate : predicates) {
    if (stop) break;
    if (!hierarchy.empty()) {
      std::set<std::string> visited;
      std::function<void(const std::string&)> descend = [&](const std::string& cls) {
        if (stop || !visited.insert(cls).second) return;
        auto out = issue(queries::literalsOfClass(cls, predicate, config_), true);
        if (!out) {
          stop = true;
          return;
        }
        if (!out->timedOut()) {
          collectLiterals(out->rows(), literals);
          return;
        }
        const auto& children = hierarchy.children(cls);
        if (children.empty()) spdlog::warn("literals of {} on {} lost: leaf class timed out", predicate, cls);
        for (const auto& child : children) descend(child);
      };
      for (const auto& root : hierarchy.roots()) descend(root);
      continue;
    }
    for (const auto& type : types) {
      if (stop) break;
      std::size_t offset = 0, consecutiveTimeouts = 0;
      while (true) {
        auto out = issue(queries::literalsOfType(type, predicate, config_, config_.pageSize, offset), true);
        if (!out) {
          stop = true;
          break;
        }
        offset += config_.pageSize;
        if (out->timedOut()) {
          spdlog::warn("page at offset {} of {} on {} timed out", offset - config_.pageSize, predicate, type);
          if (++consecutiveTimeouts == 2) break;
          continue;
        }
        consecutiveTimeouts = 0;
        collectLiterals(out->rows(), literals);
        if (out->rows().size() < config_.pageSize) break;
      }
    }
  }
  if (stop) spdlog::info("query budget of {} exhausted during literal harvest", *meter_.limit());

  std::sort(literals.begin(), literals.end());
  literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
  return literals;
}

std::map<std::string, std::size_t> Initializer::scoreSignificance(const ClassHierarchy& hierarchy,
                                                                  const std::vector<std::string>& predicates,
                                                                  const std::vector<std::string>& types) {
  std::map<std::string, std::size_t> scores;
  bool stop = false;

  // Pages through one (class, predicate) partition. Returns false when the
  // first page timed out.
  auto pages = [&](const std::string& cls, const std::string& predicate) {
    std::size_t offset = 0, consecutiveTimeouts = 0;
    while (true) {
      auto out = issue(queries::significanceOfType(cls, predicate, config_, config_.pageSize, offset), true);
      if (!out) {
        stop = true;
        return true;
      }
      if (out->timedOut()) {
        if (offset == 0) return false;
        spdlog::warn("significance page at offset {} of {} on {} timed out; skipped", offset, predicate, cls);
        offset += config_.pageSize;
        if (++consecutiveTimeouts == 2) return true;
        continue;
      }
      consecutiveTimeouts = 0;
      mergeSignificance(out->rows(), scores);
      if (out->rows().size() < config_.pageSize) return true;
      offset += config_.pageSize;
    }
  };

  for (const auto& predicate : predicates) {
    if (stop) break;
    if (!hierarchy.empty()) {
      std::set<std::string> visited;
      std::function<void(const std::string&)> descend = [&](const std::string& cls) {
        if (stop || !visited.insert(cls).second) return;
        if (pages(cls, predicate)) return;
        for (const auto& child : hierarchy.children(cls)) descend(child);
      };
      for (const auto& root : hierarchy.roots()) descend(root);
    } else {
      for (const auto& type : types) {
        if (stop) break;
        if (!pages(type, predicate)) spdlog::warn("significance of {} on {} timed out; skipped", predicate, type);
      }
    }
  }
  return scores;
}

std::vector<std::string> Initializer::harvestWarehouse() {
  std::vector<std::string> literals;
  for (std::size_t offset = 0;; offset += config_.pageSize) {
    auto out = issue(queries::allLiterals(config_, config_.pageSize, offset), true);
    if (!out) break;
    if (out->timedOut()) throw InitFailure("warehouse literal query timed out");
    collectLiterals(out->rows(), literals);
    if (out->rows().size() < config_.pageSize) break;
  }
  std::sort(literals.begin(), literals.end());
  literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
  return literals;
}

std::map<std::string, std::size_t> Initializer::scoreWarehouse() {
  std::map<std::string, std::size_t> scores;
  for (std::size_t offset = 0;; offset += config_.pageSize) {
    auto out = issue(queries::allSignificance(config_, config_.pageSize, offset), true);
    if (!out) break;
    if (out->timedOut()) throw InitFailure("warehouse significance query timed out");
    mergeSignificance(out->rows(), scores);
    if (out->rows().size() < config_.pageSize) break;
  }
  return scores;
}

CacheSnapshot Initializer::run() {
  CacheSnapshot snap;
  snap.endpointId = endpoint_.id();
  snap.language = config_.language;
  snap.maxLiteralLength = config_.maxLiteralLength;
  snap.predicates = fetchPredicates();
  snap.hierarchy = fetchHierarchy();

  std::vector<std::string> literals;
  std::map<std::string, std::size_t> scores;
  if (config_.warehouseMode) {
    literals = harvestWarehouse();
    scores = scoreWarehouse();
  } else {
    std::vector<std::string> types;
    if (snap.hierarchy.empty()) types = uris(fetchTypes());
    auto predicates = filterLiteralPredicates(uris(fetchLiteralPredicates()));
    literals = harvestLiterals(snap.hierarchy, predicates, types);
    if (!meter_.exhausted()) scores = scoreSignificance(snap.hierarchy, predicates, types);
  }

  snap.literals.reserve(literals.size());
  for (auto& l : literals) {
    auto it = scores.find(l);
    snap.literals.push_back({std::move(l), it == scores.end() ? 0 : it->second});
  }
  stats_.literalCount = snap.literals.size();
  stats_.budgetUsed = meter_.used();
  stats_.budgetExhausted = stats_.budgetExhausted || meter_.exhausted();
  snap.stats = stats_;
  spdlog::info("initialized '{}': {} predicates, {} literals, {} queries ({} timed out)", snap.endpointId,
               snap.predicates.size(), snap.literals.size(), stats_.queriesIssued, stats_.queriesTimedOut);
  return snap;
}

CacheSnapshot initialize(rdf::Endpoint& endpoint, const InitConfig& config) {
  return Initializer(endpoint, config).run();
}

}  // namespace scribe::init
