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

#include <doctest.h>
#include <httplib.h>

#include <sstream>

#include "scribe/service/http_server.hpp"
#include "support.hpp"

using namespace scribe;
using nlohmann::json;

namespace {

struct Harness {
  std::shared_ptr<service::Service> svc;
  std::unique_ptr<service::HttpServer> server;
  std::unique_ptr<httplib::Client> client;
  std::shared_ptr<rdf::MeteredEndpoint> meter;

  explicit Harness(service::ServiceOptions options = {}) {
    options.lexicon = similarity::Lexicon::load(testing::dataPath("lexicon/sample.json"));
    options.qcmThreads = 2;
    options.qsmThreads = 2;
    options.wrapEndpoint = [this](rdf::EndpointPtr inner) {
      meter = std::make_shared<rdf::MeteredEndpoint>(std::move(inner));
      return meter;
    };
    svc = std::make_shared<service::Service>(std::move(options));
    server = std::make_unique<service::HttpServer>(svc);
    int port = server->start();
    client = std::make_unique<httplib::Client>("127.0.0.1", port);
    client->set_read_timeout(60, 0);
  }

  std::pair<int, json> post(const std::string& path, const json& body) {
    auto res = client->Post(path, body.dump(), "application/json");
    REQUIRE(res);
    return {res->status, json::parse(res->body)};
  }

  std::string registerFixture(const std::string& name, const std::string& id = "local") {
    auto [status, body] = post("/endpoints", {{"id", id}, {"localFile", testing::dataPath("fixtures/" + name).string()}});
    REQUIRE(status == 200);
    return body["endpointId"];
  }
};

json stripTimings(json j) {
  j.erase("timings");
  return j;
}

}  // namespace

TEST_CASE("POST /endpoints") {
  Harness h;
  SUBCASE("literal count matches a scan of the fixture") {
    auto [status, body] = h.post("/endpoints", {{"id", "kerouac"},
                                               {"localFile", testing::dataPath("fixtures/kerouac.nt").string()}});
    REQUIRE(status == 200);
    CHECK(body["endpointId"] == "kerouac");
    auto store = testing::fixture("kerouac.nt");
    CHECK(body["initStats"]["literalCount"] == testing::filteredLiterals(store, "en", 80).size());
  }
  SUBCASE("registering again replaces") {
    h.registerFixture("kerouac.nt", "x");
    auto [status, body] =
        h.post("/endpoints", {{"id", "x"}, {"localFile", testing::dataPath("fixtures/kennedy.nt").string()}});
    CHECK(status == 200);
    auto store = testing::fixture("kennedy.nt");
    CHECK(body["initStats"]["literalCount"] == testing::filteredLiterals(store, "en", 80).size());
    auto list = h.client->Get("/endpoints");
    REQUIRE(list);
    CHECK(json::parse(list->body)["endpoints"].size() == 1);
  }
  SUBCASE("bad input") {
    CHECK(h.post("/endpoints", {{"url", "ftp::nowhere"}}).first == 400);
    CHECK(h.post("/endpoints", json::object()).first == 400);
    CHECK(h.post("/endpoints", {{"localFile", "/nonexistent/file.nt"}}).first == 400);
    CHECK(h.post("/endpoints", {{"localFile", "x.nt"}, {"config", {{"pageSize", 0}}}}).first == 400);
    auto raw = h.client->Post("/endpoints", "{not json", "application/json");
    REQUIRE(raw);
    CHECK(raw->status == 400);
  }
  SUBCASE("unreachable endpoint fails initialization") {
    auto [status, body] = h.post("/endpoints", {{"url", "http://127.0.0.1:1/sparql"}, {"timeoutMs", 500}});
    CHECK(status == 502);
  }
}

TEST_CASE("POST /complete") {
  Harness h;
  auto id = h.registerFixture("kerouac.nt");
  SUBCASE("a variable gets no completions") {
    auto [status, body] = h.post("/complete", {{"endpointId", id}, {"slot", "object"}, {"text", "?x"}});
    CHECK(status == 200);
    CHECK(body["fromTree"].empty());
    CHECK(body["fromBins"].empty());
  }
  SUBCASE("tree matches") {
    auto store = testing::fixture("kerouac.nt");
    std::size_t expected = 0;
    for (const auto& l : testing::filteredLiterals(store, "en", 80)) expected += l.find("Viking Press") != l.npos;
    REQUIRE(expected == 2);
    auto [status, body] = h.post("/complete", {{"endpointId", id}, {"slot", "object"}, {"text", "Viking Press"}});
    CHECK(status == 200);
    CHECK(body["fromTree"].size() == 2);
    CHECK(body["fromTree"][0]["display"] == "Viking Press");
  }
  SUBCASE("k = 1") {
    auto [status, body] = h.post("/complete", {{"endpointId", id}, {"slot", "object"}, {"text", "o"}, {"k", 1}});
    CHECK(status == 200);
    CHECK(body["fromTree"].size() + body["fromBins"].size() == 1);
  }
  SUBCASE("predicate slot") {
    auto [status, body] = h.post("/complete", {{"endpointId", id}, {"slot", "predicate"}, {"text", "writ"}});
    CHECK(status == 200);
    REQUIRE(!body["fromTree"].empty());
    CHECK(body["fromTree"][0]["kind"] == "predicate");
  }
  SUBCASE("errors") {
    CHECK(h.post("/complete", {{"endpointId", "nope"}, {"slot", "object"}, {"text", "a"}}).first == 404);
    CHECK(h.post("/complete", {{"endpointId", id}, {"slot", "graph"}, {"text", "a"}}).first == 400);
    CHECK(h.post("/complete", {{"endpointId", id}, {"slot", "object"}}).first == 400);
  }
  SUBCASE("stale sequence numbers are cancelled") {
    json req{{"endpointId", id}, {"slot", "object"}, {"text", "Jack"}, {"sessionId", "s"}};
    req["seq"] = 5;
    auto fresh = h.post("/complete", req).second;
    CHECK(fresh["cancelled"] == false);
    CHECK(fresh["fromTree"].size() == 1);
    req["seq"] = 4;
    auto stale = h.post("/complete", req).second;
    CHECK(stale["cancelled"] == true);
    CHECK(stale["fromTree"].empty());
    req["sessionId"] = "other";
    CHECK(h.post("/complete", req).second["cancelled"] == false);
  }
  SUBCASE("streamed response sends tree matches first") {
    json req{{"endpointId", id}, {"slot", "object"}, {"text", "Viking"}, {"stream", true}};
    auto res = h.client->Post("/complete", req.dump(), "application/json");
    REQUIRE(res);
    CHECK(res->status == 200);
    std::istringstream in(res->body);
    std::vector<json> lines;
    for (std::string line; std::getline(in, line);) lines.push_back(json::parse(line));
    REQUIRE(lines.size() == 2);
    CHECK(lines[0].contains("fromTree"));
    CHECK(!lines[0].contains("fromBins"));
    CHECK(lines[1].contains("fromBins"));
    auto plain = h.post("/complete", {{"endpointId", id}, {"slot", "object"}, {"text", "Viking"}}).second;
    CHECK(lines[0]["fromTree"] == plain["fromTree"]);
    CHECK(lines[1]["fromBins"] == plain["fromBins"]);
  }
}

TEST_CASE("POST /execute and /accept") {
  Harness h;
  auto id = h.registerFixture("kennedy.nt");
  const std::string kennedys = "SELECT ?person WHERE { ?person foaf:surname \"Kennedys\"@en }";

  SUBCASE("empty result with a Kennedy suggestion") {
    auto [status, body] = h.post("/execute", {{"endpointId", id}, {"query", kennedys}});
    REQUIRE(status == 200);
    CHECK(body["result"]["results"]["bindings"].empty());
    REQUIRE(!body["suggestions"].empty());
    bool found = false;
    for (const auto& s : body["suggestions"]) {
      if (s["kind"] == "literal" && s["alternative"]["replacement"]["value"] == "Kennedy") {
        found = true;
        CHECK(s["answerCount"] == 12);
        CHECK(s["message"].get<std::string>().find("did you mean Kennedy instead of Kennedys? There are 12 answers") !=
              std::string::npos);
      }
    }
    CHECK(found);
  }
  SUBCASE("answered query also gets suggestions") {
    auto [status, body] = h.post("/execute", {{"endpointId", id},
                                              {"query", "SELECT ?person WHERE { ?person foaf:surname \"Kennedy\"@en }"}});
    REQUIRE(status == 200);
    CHECK(body["result"]["results"]["bindings"].size() == 12);
    CHECK(!body["suggestions"].empty());
  }
  SUBCASE("errors") {
    CHECK(h.post("/execute", {{"endpointId", id}, {"query", "SELECT ?x WHERE { ?x }"}}).first == 400);
    CHECK(h.post("/execute", {{"endpointId", id}, {"query", "SELECT ?y WHERE { ?x ?p ?o }"}}).first == 400);
    CHECK(h.post("/execute", {{"endpointId", "nope"}, {"query", kennedys}}).first == 404);
    CHECK(h.post("/accept", {{"sessionId", "nope"}, {"suggestionIndex", 0}}).first == 404);
  }
  SUBCASE("accept serves prefetched rows without endpoint queries") {
    auto [status, body] = h.post("/execute", {{"endpointId", id}, {"query", kennedys}});
    REQUIRE(status == 200);
    REQUIRE(!body["suggestions"].empty());
    std::string session = body["sessionId"];
    auto before = h.meter->count();
    auto [astatus, accepted] = h.post("/accept", {{"sessionId", session}, {"suggestionIndex", 0}});
    REQUIRE(astatus == 200);
    CHECK(h.meter->count() == before);
    CHECK(accepted["result"]["results"]["bindings"].size() == body["suggestions"][0]["answerCount"]);
    CHECK(accepted["query"] == body["suggestions"][0]["query"]);
    // Accepting clears the pending list.
    CHECK(h.post("/accept", {{"sessionId", session}, {"suggestionIndex", 0}}).first == 409);
  }
  SUBCASE("stale or out-of-range index") {
    auto first = h.post("/execute", {{"endpointId", id}, {"query", kennedys}}).second;
    std::string session = first["sessionId"];
    auto n = first["suggestions"].size();
    CHECK(h.post("/accept", {{"sessionId", session}, {"suggestionIndex", n}}).first == 409);
    CHECK(h.post("/accept", {{"sessionId", session}, {"suggestionIndex", -1}}).first == 409);
    auto second = h.post("/execute", {{"endpointId", id}, {"query", kennedys}, {"sessionId", session}}).second;
    CHECK(second["sessionId"] == session);
    CHECK(h.post("/accept", {{"sessionId", session}, {"suggestionIndex", 0}, {"suggestionSet", first["suggestionSet"]}})
              .first == 409);
    CHECK(h.post("/accept", {{"sessionId", session}, {"suggestionIndex", 0}, {"suggestionSet", second["suggestionSet"]}})
              .first == 200);
  }
  SUBCASE("identical request sequences give identical bodies") {
    auto run = [&] {
      Harness other;
      other.registerFixture("kennedy.nt");
      std::vector<json> bodies;
      bodies.push_back(stripTimings(other.post("/execute", {{"endpointId", "local"}, {"query", kennedys}}).second));
      bodies.push_back(other.post("/accept", {{"sessionId", "s1"}, {"suggestionIndex", 0}}).second);
      bodies.push_back(other.post("/complete", {{"endpointId", "local"}, {"slot", "object"}, {"text", "Ken"}}).second);
      return bodies;
    };
    CHECK(run() == run());
  }
}

TEST_CASE("federated execution and relaxation through the service") {
  Harness h;
  h.registerFixture("kerouac.nt", "a");
  h.registerFixture("kennedy.nt", "b");
  auto [status, body] = h.post(
      "/execute", {{"endpointIds", {"a", "b"}}, {"query", "SELECT ?s WHERE { ?s ?p \"Jack Kerouac\"@en }"}});
  REQUIRE(status == 200);
  CHECK(!body["result"]["results"]["bindings"].empty());

  auto [fstatus, kerouac] = h.post(
      "/execute", {{"endpointId", "a"},
                   {"query",
                    "SELECT ?book WHERE { ?book dbo:writer \"Jack Kerouac\"@en . ?book dbo:publisher \"Viking Press\"@en . }"}});
  REQUIRE(fstatus == 200);
  CHECK(kerouac["result"]["results"]["bindings"].empty());
  bool structural = false;
  for (const auto& s : kerouac["suggestions"]) structural |= s["kind"] == "structure";
  CHECK(structural);
}

TEST_CASE("sessions expire") {
  service::ServiceOptions options;
  options.sessionTtl = std::chrono::minutes(30);
  Harness h(std::move(options));
  h.registerFixture("kennedy.nt");
  h.post("/execute", {{"endpointId", "local"}, {"query", "SELECT ?p WHERE { ?p foaf:surname \"Kennedy\"@en }"}});
  CHECK(h.svc->sessionCount() == 1);
  h.svc->expireSessions(std::chrono::steady_clock::now() + std::chrono::minutes(29));
  CHECK(h.svc->sessionCount() == 1);
  h.svc->expireSessions(std::chrono::steady_clock::now() + std::chrono::minutes(31));
  CHECK(h.svc->sessionCount() == 0);
}
