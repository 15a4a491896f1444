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

#include "scribe/rdf/sparql_server.hpp"

#include <httplib.h>
#include <spdlog/spdlog.h>

#include "scribe/util/errors.hpp"

namespace scribe::rdf {

SparqlHttpServer::SparqlHttpServer(EndpointPtr backend)
    : backend_(std::move(backend)), server_(std::make_unique<httplib::Server>()) {
  auto handler = [this](const httplib::Request& req, httplib::Response& res) {
    if (!req.has_param("query")) {
      res.status = 400;
      res.set_content("missing query parameter", "text/plain");
      return;
    }
    try {
      auto outcome = backend_->execute(req.get_param_value("query"));
      if (outcome.timedOut()) {
        res.status = 504;
        res.set_content("query timed out", "text/plain");
        return;
      }
      res.set_content(toSparqlJsonText(outcome.rows()), "application/sparql-results+json");
    } catch (const ParseError& e) {
      res.status = 400;
      res.set_content(e.what(), "text/plain");
    } catch (const UnsupportedFeature& e) {
      res.status = 400;
      res.set_content(e.what(), "text/plain");
    } catch (const std::exception& e) {
      res.status = 500;
      res.set_content(e.what(), "text/plain");
    }
  };
  server_->Get("/sparql", handler);
  server_->Post("/sparql", handler);
}

SparqlHttpServer::~SparqlHttpServer() { stop(); }

int SparqlHttpServer::start(const std::string& host, int port) {
  host_ = host;
  port_ = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
  if (port_ < 0) throw Error("cannot bind " + host + ":" + std::to_string(port));
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return port_;
}

void SparqlHttpServer::listen(const std::string& host, int port) {
  host_ = host;
  port_ = port;
  spdlog::info("serving SPARQL on http://{}:{}/sparql", host, port);
  if (!server_->listen(host, port)) throw Error("cannot listen on " + host + ":" + std::to_string(port));
}

void SparqlHttpServer::stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

std::string SparqlHttpServer::url() const { return "http://" + host_ + ":" + std::to_string(port_) + "/sparql"; }

}  // namespace scribe::rdf
