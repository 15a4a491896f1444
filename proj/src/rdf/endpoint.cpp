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

#include "scribe/rdf/endpoint.hpp"

#include <thread>

#include <httplib.h>
#include <spdlog/spdlog.h>

#include "scribe/rdf/evaluator.hpp"
#include "scribe/rdf/ntriples.hpp"
#include "scribe/rdf/sparql.hpp"
#include "scribe/util/errors.hpp"

namespace scribe::rdf {

const ResultSet& QueryOutcome::rows() const {
  if (!rows_) throw Error("query timed out; no rows");
  return *rows_;
}

ResultSet& QueryOutcome::rows() {
  if (!rows_) throw Error("query timed out; no rows");
  return *rows_;
}

LocalEndpoint::LocalEndpoint(std::string id, std::shared_ptr<const TripleStore> store, LocalEndpointOptions options)
    : id_(std::move(id)), store_(std::move(store)), options_(options) {
  if (options_.timeout.count() <= 0) throw InvalidQuery("endpoint timeout must be positive");
}

QueryOutcome LocalEndpoint::execute(std::string_view sparql) {
  auto query = parseSparql(sparql);
  if (options_.delay.count() > 0) {
    if (options_.delay >= options_.timeout) {
      std::this_thread::sleep_for(options_.timeout);
      return QueryOutcome::timeout();
    }
    std::this_thread::sleep_for(options_.delay);
  }
  return QueryOutcome::answered(evaluate(*store_, query));
}

namespace {

std::pair<std::string, std::string> splitUrl(const std::string& url) {
  auto scheme = url.find("://");
  if (scheme == std::string::npos) throw InvalidQuery("endpoint URL lacks a scheme: " + url);
  auto schemeName = url.substr(0, scheme);
  if (schemeName != "http" && schemeName != "https") throw InvalidQuery("unsupported URL scheme: " + schemeName);
  auto slash = url.find('/', scheme + 3);
  if (slash == scheme + 3) throw InvalidQuery("endpoint URL lacks a host: " + url);
  if (slash == std::string::npos) return {url, "/"};
  return {url.substr(0, slash), url.substr(slash)};
}

}  // namespace

HttpEndpoint::HttpEndpoint(std::string id, std::string url, std::chrono::milliseconds timeout)
    : id_(std::move(id)), url_(std::move(url)), timeout_(timeout) {
  if (timeout_.count() <= 0) throw InvalidQuery("endpoint timeout must be positive");
  std::tie(scheme_host_port_, path_) = splitUrl(url_);
}

QueryOutcome HttpEndpoint::execute(std::string_view sparql) {
  httplib::Client client(scheme_host_port_);
  auto secs = timeout_.count() / 1000;
  auto usecs = (timeout_.count() % 1000) * 1000;
  client.set_connection_timeout(secs, usecs);
  client.set_read_timeout(secs, usecs);
  client.set_write_timeout(secs, usecs);
  httplib::Headers headers = {{"Accept", "application/sparql-results+json"}};
  auto start = std::chrono::steady_clock::now();
  httplib::Result res;
  if (sparql.size() < 1500) {
    res = client.Get(path_, httplib::Params{{"query", std::string(sparql)}}, headers);
  } else {
    res = client.Post(path_, headers, httplib::Params{{"query", std::string(sparql)}});
  }
  auto elapsed = std::chrono::steady_clock::now() - start;
  if (!res) {
    auto err = res.error();
    bool slow = elapsed >= timeout_ * 9 / 10;
    if (err == httplib::Error::ConnectionTimeout || (err == httplib::Error::Read && slow)) {
      return QueryOutcome::timeout();
    }
    throw NetworkError("request to " + url_ + " failed: " + httplib::to_string(err));
  }
  if (res->status == 504 || res->status == 408) return QueryOutcome::timeout();
  if (res->status != 200) {
    throw NetworkError("endpoint " + url_ + " answered HTTP " + std::to_string(res->status) + ": " +
                       res->body.substr(0, 200));
  }
  return QueryOutcome::answered(parseSparqlJson(res->body));
}

MeteredEndpoint::MeteredEndpoint(EndpointPtr inner, bool recordQueries) : inner_(std::move(inner)), record_(recordQueries) {}

QueryOutcome MeteredEndpoint::execute(std::string_view sparql) {
  ++count_;
  if (record_) {
    std::lock_guard lock(mu_);
    log_.emplace_back(sparql);
  }
  auto out = inner_->execute(sparql);
  if (out.timedOut()) ++timeouts_;
  return out;
}

std::vector<std::string> MeteredEndpoint::log() const {
  std::lock_guard lock(mu_);
  return log_;
}

void MeteredEndpoint::reset() {
  std::lock_guard lock(mu_);
  count_ = 0;
  timeouts_ = 0;
  log_.clear();
}

ScriptedEndpoint::ScriptedEndpoint(EndpointPtr inner, TimeoutPolicy policy, std::chrono::milliseconds latency)
    : inner_(std::move(inner)), policy_(std::move(policy)), latency_(latency) {}

QueryOutcome ScriptedEndpoint::execute(std::string_view sparql) {
  if (latency_.count() > 0) std::this_thread::sleep_for(latency_);
  if (policy_ && policy_(parseSparql(sparql))) return QueryOutcome::timeout();
  return inner_->execute(sparql);
}

EndpointPtr makeEndpoint(const EndpointSpec& spec) {
  if (spec.id.empty()) throw InvalidQuery("endpoint id must not be empty");
  if (!spec.url.empty()) return std::make_shared<HttpEndpoint>(spec.id, spec.url, spec.timeout);
  if (spec.localFile.empty()) throw InvalidQuery("endpoint needs a url or a local file");
  auto store = std::make_shared<const TripleStore>(loadNTriples(spec.localFile));
  spdlog::info("loaded {} triples for endpoint '{}'", store->size(), spec.id);
  return std::make_shared<LocalEndpoint>(spec.id, std::move(store), LocalEndpointOptions{spec.timeout, {}});
}

}  // namespace scribe::rdf
