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

#include "scribe/fed/federation.hpp"

#include <algorithm>
#include <future>
#include <set>

#include <spdlog/spdlog.h>

#include "scribe/rdf/sparql.hpp"
#include "scribe/util/errors.hpp"

namespace scribe::fed {

void Registry::add(rdf::EndpointPtr endpoint) {
  if (!endpoint) throw InvalidQuery("null endpoint");
  std::lock_guard lock(mu_);
  auto it = std::find_if(endpoints_.begin(), endpoints_.end(), [&](const auto& e) { return e->id() == endpoint->id(); });
  if (it != endpoints_.end()) {
    *it = std::move(endpoint);
  } else {
    endpoints_.push_back(std::move(endpoint));
  }
}

bool Registry::remove(const std::string& id) {
  std::lock_guard lock(mu_);
  auto it = std::find_if(endpoints_.begin(), endpoints_.end(), [&](const auto& e) { return e->id() == id; });
  if (it == endpoints_.end()) return false;
  endpoints_.erase(it);
  return true;
}

rdf::EndpointPtr Registry::find(const std::string& id) const {
  std::lock_guard lock(mu_);
  for (const auto& e : endpoints_) {
    if (e->id() == id) return e;
  }
  return nullptr;
}

std::vector<rdf::EndpointPtr> Registry::all() const {
  std::lock_guard lock(mu_);
  auto out = endpoints_;
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a->id() < b->id(); });
  return out;
}

std::size_t Registry::size() const {
  std::lock_guard lock(mu_);
  return endpoints_.size();
}

namespace {

struct Attempt {
  std::optional<rdf::QueryOutcome> outcome;
  std::string error;
};

Attempt attempt(rdf::Endpoint& endpoint, const std::string& sparql) {
  try {
    return {endpoint.execute(sparql), {}};
  } catch (const std::exception& e) {
    spdlog::warn("endpoint {} failed: {}", endpoint.id(), e.what());
    return {std::nullopt, endpoint.id() + ": " + e.what()};
  }
}

}  // namespace

rdf::QueryOutcome executeFederated(const std::vector<rdf::EndpointPtr>& endpoints, const rdf::StructuredQuery& query) {
  if (endpoints.empty()) throw InvalidQuery("no endpoint registered");
  const auto sparql = rdf::serializeSparql(query);

  std::vector<Attempt> attempts;
  if (endpoints.size() == 1) {
    attempts.push_back(attempt(*endpoints.front(), sparql));
  } else {
    std::vector<std::future<Attempt>> futures;
    for (const auto& e : endpoints) {
      futures.push_back(std::async(std::launch::async, [&e, &sparql] { return attempt(*e, sparql); }));
    }
    for (auto& f : futures) attempts.push_back(f.get());
  }

  std::vector<const rdf::ResultSet*> answered;
  std::size_t timeouts = 0;
  std::string errors;
  for (const auto& a : attempts) {
    if (!a.outcome) {
      errors += (errors.empty() ? "" : "; ") + a.error;
    } else if (a.outcome->timedOut()) {
      ++timeouts;
    } else {
      answered.push_back(&a.outcome->rows());
    }
  }
  if (answered.empty()) {
    if (!errors.empty()) throw AllEndpointsFailed(errors);
    return rdf::QueryOutcome::timeout();
  }
  if (answered.size() == 1 && attempts.size() == 1) return *attempts.front().outcome;

  rdf::ResultSet merged;
  merged.columns = answered.front()->columns;
  merged.truncated = timeouts > 0 || !errors.empty();
  std::set<std::vector<rdf::Term>> seen;
  for (const auto* rs : answered) {
    merged.truncated = merged.truncated || rs->truncated;
    if (rs->columns != merged.columns) throw MalformedResponse("endpoints disagree on result columns");
    for (const auto& row : rs->rows) {
      if (seen.insert(row).second) merged.rows.push_back(row);
    }
  }
  if (query.modifiers.limit && merged.rows.size() > *query.modifiers.limit) merged.rows.resize(*query.modifiers.limit);
  return rdf::QueryOutcome::answered(std::move(merged));
}

rdf::QueryOutcome executeFederated(const Registry& registry, const rdf::StructuredQuery& query) {
  return executeFederated(registry.all(), query);
}

std::optional<Prefetched> prefetchQuery(const std::vector<rdf::EndpointPtr>& endpoints,
                                        const rdf::StructuredQuery& query, std::size_t rowCap) {
  try {
    auto outcome = executeFederated(endpoints, query);
    if (outcome.timedOut()) return std::nullopt;
    auto& rs = outcome.rows();
    if (rs.rows.empty()) return std::nullopt;
    if (query.count && query.modifiers.groupBy.empty() && rs.rows.size() == 1 && !rs.rows[0].empty()) {
      const auto& c = rs.rows[0].back();
      if (c.isLiteral() && c.value() == "0") return std::nullopt;
    }
    Prefetched p;
    p.answerCount = rs.rows.size();
    p.rows = std::move(rs);
    if (p.rows.rows.size() > rowCap) {
      p.rows.rows.resize(rowCap);
      p.rows.truncated = true;
    }
    return p;
  } catch (const Error& e) {
    spdlog::debug("candidate query dropped: {}", e.what());
    return std::nullopt;
  }
}

std::vector<qsm::SuggestedQuery> prefetch(const std::vector<rdf::EndpointPtr>& endpoints,
                                          std::vector<qsm::SuggestedQuery> suggestions, std::size_t rowCap) {
  std::vector<qsm::SuggestedQuery> out;
  for (auto& s : suggestions) {
    if (auto p = prefetchQuery(endpoints, s.query, rowCap)) {
      s.answerCount = p->answerCount;
      s.prefetched = std::move(p->rows);
      out.push_back(std::move(s));
    }
  }
  return out;
}

}  // namespace scribe::fed
