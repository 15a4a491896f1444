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
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "scribe/qsm/suggestion.hpp"
#include "scribe/rdf/endpoint.hpp"

namespace scribe::fed {

/// Registered endpoints by id. Mutations apply to later queries only.
class Registry {
 public:
  /// Replaces an endpoint with the same id.
  void add(rdf::EndpointPtr endpoint);
  bool remove(const std::string& id);
  rdf::EndpointPtr find(const std::string& id) const;
  /// Snapshot ordered by id.
  std::vector<rdf::EndpointPtr> all() const;
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::vector<rdf::EndpointPtr> endpoints_;
};

/// Sends the query to every endpoint concurrently and unions the rows,
/// dropping duplicates when more than one endpoint answers. Endpoints that
/// time out mark the result truncated; if all of them time out the outcome
/// is a timeout. Throws AllEndpointsFailed when every endpoint failed and at
/// least one raised an error, InvalidQuery when no endpoint is given.
rdf::QueryOutcome executeFederated(const std::vector<rdf::EndpointPtr>& endpoints, const rdf::StructuredQuery& query);
rdf::QueryOutcome executeFederated(const Registry& registry, const rdf::StructuredQuery& query);

inline constexpr std::size_t kPrefetchRowCap = 1000;

struct Prefetched {
  std::size_t answerCount = 0;
  rdf::ResultSet rows;
};

/// Runs a candidate query once. Returns nothing when it has no answers,
/// times out, or fails. A lone COUNT row of zero counts as no answers.
std::optional<Prefetched> prefetchQuery(const std::vector<rdf::EndpointPtr>& endpoints,
                                        const rdf::StructuredQuery& query, std::size_t rowCap = kPrefetchRowCap);

/// Fills answerCount and prefetched rows; drops suggestions without answers.
std::vector<qsm::SuggestedQuery> prefetch(const std::vector<rdf::EndpointPtr>& endpoints,
                                          std::vector<qsm::SuggestedQuery> suggestions,
                                          std::size_t rowCap = kPrefetchRowCap);

}  // namespace scribe::fed
