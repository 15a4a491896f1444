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

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stop_token>
#include <string>
#include <vector>

#include <json.hpp>

#include "scribe/fed/federation.hpp"
#include "scribe/index/literal_index.hpp"
#include "scribe/init/snapshot.hpp"
#include "scribe/qcm/qcm.hpp"
#include "scribe/qsm/relax.hpp"
#include "scribe/qsm/terms.hpp"
#include "scribe/similarity/lexicon.hpp"
#include "scribe/util/worker_pool.hpp"

namespace scribe::service {

struct ServiceOptions {
  /// Snapshots and indexes are written here after registration when set.
  std::optional<std::filesystem::path> snapshotDir;
  similarity::Lexicon lexicon;
  std::size_t qcmThreads = 4;
  std::size_t qsmThreads = 4;
  std::chrono::minutes sessionTtl{30};
  qsm::QsmConfig qsm;
  qsm::RelaxOptions relax;
  std::size_t gamma = 10;
  /// Wraps endpoints built from registration requests (metering in tests).
  std::function<rdf::EndpointPtr(rdf::EndpointPtr)> wrapEndpoint;
};

/// JSON reply with an HTTP status.
struct Reply {
  int status = 200;
  nlohmann::json body;
};

/// Registered endpoint with its cache.
struct EndpointState {
  rdf::EndpointPtr endpoint;
  std::shared_ptr<const index::LiteralIndex> index;
  init::InitStats stats;
  std::size_t predicateCount = 0;
};

/// Engine behind the HTTP API. Methods are thread-safe; requests of one
/// session are serialized.
class Service {
 public:
  explicit Service(ServiceOptions options = {});
  ~Service();

  /// {id?, url | localFile, timeoutMs?, config?}
  Reply registerEndpoint(const nlohmann::json& request);
  /// Registers an endpoint whose cache is already built.
  void registerPrepared(const std::string& id, rdf::EndpointPtr endpoint, const init::CacheSnapshot& snapshot,
                        index::LiteralIndex index);
  Reply listEndpoints() const;

  /// {endpointId, slot, text, k?, gamma?, sessionId?, seq?}. `onTree`
  /// receives the tree phase before the bin scan.
  Reply complete(const nlohmann::json& request, const std::function<void(const nlohmann::json&)>& onTree = {});

  /// {endpointId | endpointIds, query, sessionId?, k?}
  Reply execute(const nlohmann::json& request);

  /// {sessionId, suggestionIndex, suggestionSet?}
  Reply accept(const nlohmann::json& request);

  std::shared_ptr<const EndpointState> endpoint(const std::string& id) const;
  std::size_t sessionCount() const;
  /// Drops sessions idle for longer than the TTL relative to `now`.
  void expireSessions(std::chrono::steady_clock::time_point now = std::chrono::steady_clock::now());

 private:
  struct Session {
    std::mutex mu;
    rdf::StructuredQuery currentQuery;
    std::optional<rdf::ResultSet> lastResult;
    std::vector<qsm::SuggestedQuery> pending;
    std::uint64_t suggestionSet = 0;
    std::chrono::steady_clock::time_point lastUsed;
  };
  struct CompletionTicket {
    std::uint64_t seq = 0;
    std::stop_source stop;
  };

  std::shared_ptr<Session> session(const std::string& id, bool create, std::string* assigned = nullptr);

  ServiceOptions options_;
  WorkerPool qcmPool_;
  WorkerPool qsmPool_;
  fed::Registry registry_;
  mutable std::shared_mutex endpointsMu_;
  std::map<std::string, std::shared_ptr<const EndpointState>> endpoints_;
  mutable std::mutex sessionsMu_;
  std::map<std::string, std::shared_ptr<Session>> sessions_;
  std::uint64_t nextSession_ = 0;
  std::mutex ticketsMu_;
  std::map<std::string, CompletionTicket> tickets_;
};

nlohmann::json suggestionToJson(const qsm::SuggestedQuery& s, std::size_t index);
nlohmann::json initStatsToJson(const init::InitStats& stats);

}  // namespace scribe::service
