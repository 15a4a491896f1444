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

#include <atomic>
#include <chrono>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "scribe/rdf/query.hpp"
#include "scribe/rdf/result_set.hpp"
#include "scribe/rdf/triple_store.hpp"

namespace scribe::rdf {

/// Result of sending a query to an endpoint. A timeout is an ordinary
/// outcome; transport failures are thrown as NetworkError/MalformedResponse.
class QueryOutcome {
 public:
  static QueryOutcome answered(ResultSet rs) { return QueryOutcome(std::move(rs)); }
  static QueryOutcome timeout() { return QueryOutcome(); }

  bool timedOut() const noexcept { return !rows_.has_value(); }
  const ResultSet& rows() const;
  ResultSet& rows();

 private:
  QueryOutcome() = default;
  explicit QueryOutcome(ResultSet rs) : rows_(std::move(rs)) {}

  std::optional<ResultSet> rows_;
};

/// A registered SPARQL endpoint. Implementations must allow concurrent
/// execute() calls.
class Endpoint {
 public:
  virtual ~Endpoint() = default;

  virtual const std::string& id() const = 0;
  virtual QueryOutcome execute(std::string_view sparql) = 0;
  virtual std::chrono::milliseconds timeout() const = 0;
};

using EndpointPtr = std::shared_ptr<Endpoint>;

/// Sends a query to an endpoint.
inline QueryOutcome executeRemote(Endpoint& endpoint, std::string_view sparql) { return endpoint.execute(sparql); }

struct LocalEndpointOptions {
  std::chrono::milliseconds timeout{30000};
  /// Artificial latency added to every query; a delay at or beyond the
  /// timeout yields a timeout after `timeout` has elapsed.
  std::chrono::milliseconds delay{0};
};

/// Evaluates queries against an in-memory store.
class LocalEndpoint : public Endpoint {
 public:
  LocalEndpoint(std::string id, std::shared_ptr<const TripleStore> store, LocalEndpointOptions options = {});

  const std::string& id() const override { return id_; }
  QueryOutcome execute(std::string_view sparql) override;
  std::chrono::milliseconds timeout() const override { return options_.timeout; }

  const TripleStore& store() const { return *store_; }
  std::shared_ptr<const TripleStore> sharedStore() const { return store_; }

 private:
  std::string id_;
  std::shared_ptr<const TripleStore> store_;
  LocalEndpointOptions options_;
};

/// SPARQL Protocol client: GET (or POST for long queries) with a `query`
/// parameter, Accept: application/sparql-results+json.
class HttpEndpoint : public Endpoint {
 public:
  HttpEndpoint(std::string id, std::string url, std::chrono::milliseconds timeout);

  const std::string& id() const override { return id_; }
  QueryOutcome execute(std::string_view sparql) override;
  std::chrono::milliseconds timeout() const override { return timeout_; }

  const std::string& url() const { return url_; }

 private:
  std::string id_;
  std::string url_;
  std::string scheme_host_port_;
  std::string path_;
  std::chrono::milliseconds timeout_;
};

/// Counts queries passed through to the wrapped endpoint and optionally
/// records their text.
class MeteredEndpoint : public Endpoint {
 public:
  explicit MeteredEndpoint(EndpointPtr inner, bool recordQueries = false);

  const std::string& id() const override { return inner_->id(); }
  QueryOutcome execute(std::string_view sparql) override;
  std::chrono::milliseconds timeout() const override { return inner_->timeout(); }

  std::size_t count() const noexcept { return count_.load(); }
  std::size_t timeouts() const noexcept { return timeouts_.load(); }
  std::vector<std::string> log() const;
  void reset();

 private:
  EndpointPtr inner_;
  bool record_;
  std::atomic<std::size_t> count_{0};
  std::atomic<std::size_t> timeouts_{0};
  mutable std::mutex mu_;
  std::vector<std::string> log_;
};

/// Test double: decides per parsed query whether to time out, and can add
/// per-query latency. Queries that do not time out go to the wrapped endpoint.
class ScriptedEndpoint : public Endpoint {
 public:
  using TimeoutPolicy = std::function<bool(const StructuredQuery&)>;

  ScriptedEndpoint(EndpointPtr inner, TimeoutPolicy policy, std::chrono::milliseconds latency = {});

  const std::string& id() const override { return inner_->id(); }
  QueryOutcome execute(std::string_view sparql) override;
  std::chrono::milliseconds timeout() const override { return inner_->timeout(); }

 private:
  EndpointPtr inner_;
  TimeoutPolicy policy_;
  std::chrono::milliseconds latency_;
};

/// Endpoint registration record.
struct EndpointSpec {
  std::string id;
  /// http(s) URL of a remote endpoint, or empty for a local store.
  std::string url;
  /// N-Triples file backing a local endpoint.
  std::string localFile;
  std::chrono::milliseconds timeout{30000};
  std::optional<std::size_t> maxInitQueries;
};

/// Builds an endpoint from a spec. Throws InvalidQuery for a spec that names
/// neither a usable URL nor a local file, and Error if the file cannot be read.
EndpointPtr makeEndpoint(const EndpointSpec& spec);

}  // namespace scribe::rdf
