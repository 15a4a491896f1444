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

#include "scribe/service/service.hpp"

#include <cctype>
#include <future>

#include <spdlog/spdlog.h>

#include "scribe/init/initializer.hpp"
#include "scribe/rdf/sparql.hpp"
#include "scribe/util/errors.hpp"

namespace scribe::service {

using nlohmann::json;

namespace {

Reply error(int status, const std::string& message) { return {status, json{{"error", message}}}; }

double msSince(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

init::InitConfig parseInitConfig(const json& j) {
  init::InitConfig c;
  if (!j.is_object()) return c;
  c.maxLiteralLength = j.value("maxLiteralLength", c.maxLiteralLength);
  c.language = j.value("language", c.language);
  if (j.contains("queryBudget") && !j["queryBudget"].is_null()) c.queryBudget = j["queryBudget"].get<std::size_t>();
  c.pageSize = j.value("pageSize", c.pageSize);
  c.significantLiteralCount = j.value("significantLiteralCount", c.significantLiteralCount);
  c.warehouseMode = j.value("warehouseMode", c.warehouseMode);
  c.validate();
  return c;
}

json suggestionsToJson(const std::vector<qcm::Suggestion>& list) {
  json out = json::array();
  for (const auto& s : list) {
    out.push_back({{"display", s.display},
                   {"kind", s.kind == index::EntryKind::Predicate ? "predicate" : "literal"},
                   {"term", rdf::termToJson(s.term)}});
  }
  return out;
}

std::string requireString(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string()) throw InvalidQuery(std::string("missing string field '") + key + "'");
  return j[key].get<std::string>();
}

}  // namespace

json initStatsToJson(const init::InitStats& s) {
  return {{"queriesIssued", s.queriesIssued}, {"queriesTimedOut", s.queriesTimedOut},
          {"literalCount", s.literalCount},   {"budgetUsed", s.budgetUsed},
          {"budgetExhausted", s.budgetExhausted}};
}

json suggestionToJson(const qsm::SuggestedQuery& s, std::size_t index) {
  json j{{"index", index},
         {"kind", qsm::changeKindName(s.kind)},
         {"message", s.message},
         {"query", rdf::serializeSparql(s.query)},
         {"answerCount", s.answerCount}};
  if (s.alternative) {
    j["alternative"] = {{"original", rdf::termToJson(s.alternative->original)},
                        {"replacement", rdf::termToJson(s.alternative->replacement)},
                        {"score", s.alternative->score},
                        {"patternIndex", s.patternIndex}};
  }
  return j;
}

Service::Service(ServiceOptions options)
    : options_(std::move(options)), qcmPool_(options_.qcmThreads), qsmPool_(options_.qsmThreads) {}

Service::~Service() = default;

void Service::registerPrepared(const std::string& id, rdf::EndpointPtr endpoint, const init::CacheSnapshot& snapshot,
                               index::LiteralIndex index) {
  auto state = std::make_shared<EndpointState>();
  state->endpoint = std::move(endpoint);
  state->stats = snapshot.stats;
  state->predicateCount = snapshot.predicates.size();
  state->index = std::make_shared<const index::LiteralIndex>(std::move(index));
  registry_.add(state->endpoint);
  std::unique_lock lock(endpointsMu_);
  endpoints_[id] = std::move(state);
}

Reply Service::registerEndpoint(const json& request) {
  rdf::EndpointSpec spec;
  init::InitConfig config;
  try {
    if (!request.is_object()) throw InvalidQuery("request body must be an object");
    spec.url = request.value("url", "");
    spec.localFile = request.value("localFile", "");
    spec.id = request.value("id", spec.url.empty() ? spec.localFile : spec.url);
    if (request.contains("timeoutMs")) spec.timeout = std::chrono::milliseconds(request["timeoutMs"].get<long>());
    config = parseInitConfig(request.value("config", json::object()));
    if (!spec.url.empty() && spec.url.rfind("http://", 0) != 0 && spec.url.rfind("https://", 0) != 0) {
      throw InvalidQuery("endpoint url must be http(s): " + spec.url);
    }
  } catch (const json::exception& e) {
    return error(400, e.what());
  } catch (const InvalidQuery& e) {
    return error(400, e.what());
  }

  rdf::EndpointPtr endpoint;
  try {
    endpoint = rdf::makeEndpoint(spec);
  } catch (const InvalidQuery& e) {
    return error(400, e.what());
  } catch (const std::exception& e) {
    return error(400, e.what());
  }
  if (options_.wrapEndpoint) endpoint = options_.wrapEndpoint(endpoint);

  init::CacheSnapshot snapshot;
  try {
    snapshot = init::initialize(*endpoint, config);
  } catch (const InitFailure& e) {
    return error(502, e.what());
  } catch (const NetworkError& e) {
    return error(502, e.what());
  } catch (const MalformedResponse& e) {
    return error(502, e.what());
  }
  snapshot.endpointId = spec.id;
  auto index = index::buildIndex(snapshot, config.significantLiteralCount);
  if (options_.snapshotDir) {
    std::filesystem::create_directories(*options_.snapshotDir);
    std::string stem = spec.id;
    for (auto& c : stem) {
      if (!std::isalnum(static_cast<unsigned char>(c)) && c != '-' && c != '.') c = '_';
    }
    init::writeSnapshot(snapshot, *options_.snapshotDir / (stem + ".snapshot.jsonl"));
    index.save(*options_.snapshotDir / (stem + ".index.jsonl"));
  }
  auto stats = snapshot.stats;
  auto predicates = snapshot.predicates.size();
  registerPrepared(spec.id, endpoint, snapshot, std::move(index));
  spdlog::info("registered endpoint '{}': {} literals, {} predicates", spec.id, stats.literalCount, predicates);
  return {200, json{{"endpointId", spec.id}, {"initStats", initStatsToJson(stats)}, {"predicateCount", predicates}}};
}

Reply Service::listEndpoints() const {
  json out = json::array();
  std::shared_lock lock(endpointsMu_);
  for (const auto& [id, state] : endpoints_) {
    out.push_back({{"endpointId", id}, {"initStats", initStatsToJson(state->stats)}});
  }
  return {200, json{{"endpoints", out}}};
}

std::shared_ptr<const EndpointState> Service::endpoint(const std::string& id) const {
  std::shared_lock lock(endpointsMu_);
  auto it = endpoints_.find(id);
  return it == endpoints_.end() ? nullptr : it->second;
}

Reply Service::complete(const json& request, const std::function<void(const json&)>& onTree) {
  qcm::CompletionRequest req;
  std::string endpointId;
  std::string key;
  std::optional<std::uint64_t> seq;
  try {
    endpointId = requireString(request, "endpointId");
    req.slot = qcm::parseSlot(requireString(request, "slot"));
    req.t = requireString(request, "text");
    req.k = request.value("k", req.k);
    req.gamma = request.value("gamma", options_.gamma);
    if (request.contains("seq")) seq = request["seq"].get<std::uint64_t>();
    key = request.value("sessionId", "") + "\n" + qcm::slotName(req.slot);
    req.validate();
  } catch (const json::exception& e) {
    return error(400, e.what());
  } catch (const Error& e) {
    return error(400, e.what());
  }
  auto state = endpoint(endpointId);
  if (!state) return error(404, "unknown endpoint '" + endpointId + "'");

  std::stop_token stop;
  if (seq) {
    std::lock_guard lock(ticketsMu_);
    auto& ticket = tickets_[key];
    if (*seq < ticket.seq) {
      return {200, json{{"fromTree", json::array()}, {"fromBins", json::array()}, {"seq", *seq}, {"cancelled", true}}};
    }
    ticket.stop.request_stop();
    ticket = CompletionTicket{*seq, std::stop_source{}};
    stop = ticket.stop.get_token();
  }

  qcm::TreeCallback treeCallback;
  if (onTree) {
    treeCallback = [&](const std::vector<qcm::Suggestion>& tree) {
      onTree(json{{"fromTree", suggestionsToJson(tree)}, {"seq", seq ? json(*seq) : json(nullptr)}});
    };
  }
  auto response = qcm::complete(*state->index, req, qcmPool_.size(), qcmPool_, stop, treeCallback);
  return {200, json{{"fromTree", suggestionsToJson(response.fromTree)},
                    {"fromBins", suggestionsToJson(response.fromBins)},
                    {"seq", seq ? json(*seq) : json(nullptr)},
                    {"cancelled", response.cancelled}}};
}

std::shared_ptr<Service::Session> Service::session(const std::string& id, bool create, std::string* assigned) {
  std::lock_guard lock(sessionsMu_);
  if (!id.empty()) {
    auto it = sessions_.find(id);
    if (it != sessions_.end()) {
      if (assigned) *assigned = id;
      return it->second;
    }
    if (!create) return nullptr;
  }
  if (!create) return nullptr;
  std::string name = id.empty() ? "s" + std::to_string(++nextSession_) : id;
  auto s = std::make_shared<Session>();
  s->lastUsed = std::chrono::steady_clock::now();
  sessions_[name] = s;
  if (assigned) *assigned = name;
  return s;
}

std::size_t Service::sessionCount() const {
  std::lock_guard lock(sessionsMu_);
  return sessions_.size();
}

void Service::expireSessions(std::chrono::steady_clock::time_point now) {
  std::lock_guard lock(sessionsMu_);
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    std::unique_lock sessionLock(it->second->mu, std::try_to_lock);
    if (sessionLock.owns_lock() && now - it->second->lastUsed > options_.sessionTtl) {
      sessionLock.unlock();
      it = sessions_.erase(it);
    } else {
      ++it;
    }
  }
}

Reply Service::execute(const json& request) {
  expireSessions();
  std::vector<std::string> ids;
  rdf::StructuredQuery query;
  std::size_t k = options_.qsm.k;
  try {
    if (!request.is_object()) throw InvalidQuery("request body must be an object");
    if (request.contains("endpointIds")) {
      ids = request["endpointIds"].get<std::vector<std::string>>();
    } else {
      ids.push_back(requireString(request, "endpointId"));
    }
    if (ids.empty()) throw InvalidQuery("no endpoint given");
    query = rdf::parseSparql(requireString(request, "query"));
    rdf::validate(query);
    k = request.value("k", k);
  } catch (const json::exception& e) {
    return error(400, e.what());
  } catch (const Error& e) {
    return error(400, e.what());
  }

  std::vector<std::shared_ptr<const EndpointState>> states;
  std::vector<rdf::EndpointPtr> endpoints;
  for (const auto& id : ids) {
    auto state = endpoint(id);
    if (!state) return error(404, "unknown endpoint '" + id + "'");
    states.push_back(state);
    endpoints.push_back(state->endpoint);
  }

  std::string sessionId;
  auto s = session(request.value("sessionId", ""), true, &sessionId);
  std::lock_guard sessionLock(s->mu);
  s->lastUsed = std::chrono::steady_clock::now();

  // Suggestions draw on the first endpoint's cache.
  qsm::QsmContext ctx{*states.front()->index, options_.lexicon, endpoints, qsmPool_, options_.qsm};
  auto start = std::chrono::steady_clock::now();
  double termsMs = 0, relaxMs = 0;
  auto terms = std::async(std::launch::async, [&] {
    auto t0 = std::chrono::steady_clock::now();
    auto out = qsm::suggestTermQueries(query, ctx, k);
    termsMs = msSince(t0);
    return out;
  });
  auto relax = std::async(std::launch::async, [&] {
    auto t0 = std::chrono::steady_clock::now();
    auto out = qsm::suggestRelaxations(query, ctx, options_.relax);
    relaxMs = msSince(t0);
    return out;
  });

  std::optional<rdf::QueryOutcome> outcome;
  std::optional<Reply> failure;
  try {
    outcome = fed::executeFederated(endpoints, query);
  } catch (const AllEndpointsFailed& e) {
    failure = error(502, e.what());
  } catch (const Error& e) {
    failure = error(400, e.what());
  }
  double executeMs = msSince(start);

  std::vector<qsm::SuggestedQuery> suggestions;
  try {
    suggestions = terms.get();
    for (auto& r : relax.get()) suggestions.push_back(std::move(r));
  } catch (const std::exception& e) {
    spdlog::warn("suggestion failed: {}", e.what());
  }
  if (failure) return *failure;

  s->currentQuery = query;
  s->lastResult = outcome->timedOut() ? std::nullopt : std::optional(outcome->rows());
  s->pending = std::move(suggestions);
  ++s->suggestionSet;

  json list = json::array();
  for (std::size_t i = 0; i < s->pending.size(); ++i) list.push_back(suggestionToJson(s->pending[i], i));
  json result = s->lastResult ? rdf::toSparqlJson(*s->lastResult) : json(nullptr);
  return {200, json{{"sessionId", sessionId},
                    {"suggestionSet", s->suggestionSet},
                    {"timedOut", outcome->timedOut()},
                    {"result", result},
                    {"suggestions", list},
                    {"timings", {{"executeMs", executeMs}, {"termsMs", termsMs}, {"relaxMs", relaxMs},
                                 {"totalMs", msSince(start)}}}}};
}

Reply Service::accept(const json& request) {
  std::string id;
  long index = 0;
  std::optional<std::uint64_t> set;
  try {
    id = requireString(request, "sessionId");
    index = request.at("suggestionIndex").get<long>();
    if (request.contains("suggestionSet")) set = request["suggestionSet"].get<std::uint64_t>();
  } catch (const json::exception& e) {
    return error(400, e.what());
  } catch (const Error& e) {
    return error(400, e.what());
  }
  auto s = session(id, false);
  if (!s) return error(404, "unknown session '" + id + "'");
  std::lock_guard lock(s->mu);
  s->lastUsed = std::chrono::steady_clock::now();
  if (set && *set != s->suggestionSet) return error(409, "suggestion set is stale");
  if (index < 0 || static_cast<std::size_t>(index) >= s->pending.size()) {
    return error(409, "no pending suggestion " + std::to_string(index));
  }
  auto chosen = std::move(s->pending[static_cast<std::size_t>(index)]);
  s->pending.clear();
  ++s->suggestionSet;
  s->currentQuery = chosen.query;
  s->lastResult = chosen.prefetched;
  return {200, json{{"sessionId", id},
                    {"suggestionSet", s->suggestionSet},
                    {"query", rdf::serializeSparql(chosen.query)},
                    {"answerCount", chosen.answerCount},
                    {"result", rdf::toSparqlJson(chosen.prefetched)}}};
}

}  // namespace scribe::service
