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

#include "scribe/service/http_server.hpp"

#include <httplib.h>
#include <spdlog/spdlog.h>

#include "scribe/util/errors.hpp"

namespace scribe::service {

using nlohmann::json;

namespace {

void send(httplib::Response& res, const Reply& reply) {
  res.status = reply.status;
  res.set_content(reply.body.dump(), "application/json");
}

/// Parses the body or answers 400.
std::optional<json> body(const httplib::Request& req, httplib::Response& res) {
  auto parsed = json::parse(req.body, nullptr, false);
  if (parsed.is_discarded()) {
    send(res, {400, json{{"error", "request body is not valid JSON"}}});
    return std::nullopt;
  }
  return parsed;
}

template <class F>
httplib::Server::Handler guarded(F f) {
  return [f](const httplib::Request& req, httplib::Response& res) {
    try {
      f(req, res);
    } catch (const std::exception& e) {
      spdlog::error("{} {}: {}", req.method, req.path, e.what());
      send(res, {500, json{{"error", e.what()}}});
    }
  };
}

}  // namespace

HttpServer::HttpServer(std::shared_ptr<Service> service)
    : service_(std::move(service)), server_(std::make_unique<httplib::Server>()) {
  auto& svc = *service_;
  server_->Get("/health", [](const httplib::Request&, httplib::Response& res) {
    res.set_content("{\"status\":\"ok\"}", "application/json");
  });
  server_->Get("/endpoints", guarded([&svc](const httplib::Request&, httplib::Response& res) {
    send(res, svc.listEndpoints());
  }));
  server_->Post("/endpoints", guarded([&svc](const httplib::Request& req, httplib::Response& res) {
    if (auto b = body(req, res)) send(res, svc.registerEndpoint(*b));
  }));
  server_->Post("/execute", guarded([&svc](const httplib::Request& req, httplib::Response& res) {
    if (auto b = body(req, res)) send(res, svc.execute(*b));
  }));
  server_->Post("/accept", guarded([&svc](const httplib::Request& req, httplib::Response& res) {
    if (auto b = body(req, res)) send(res, svc.accept(*b));
  }));
  server_->Post("/complete", guarded([&svc](const httplib::Request& req, httplib::Response& res) {
    auto b = body(req, res);
    if (!b) return;
    if (!b->value("stream", false)) {
      send(res, svc.complete(*b));
      return;
    }
    // Tree matches are written as the first line before the bin scan runs.
    auto request = std::make_shared<json>(std::move(*b));
    res.set_chunked_content_provider("application/x-ndjson", [&svc, request](std::size_t, httplib::DataSink& sink) {
      auto reply = svc.complete(*request, [&sink](const json& tree) {
        auto line = tree.dump() + "\n";
        sink.write(line.data(), line.size());
      });
      json tail = reply.body;
      if (reply.status == 200) tail.erase("fromTree");
      tail["status"] = reply.status;
      auto line = tail.dump() + "\n";
      sink.write(line.data(), line.size());
      sink.done();
      return true;
    });
  }));
}

HttpServer::~HttpServer() { stop(); }

bool HttpServer::mountStatic(const std::string& dir) { return server_->set_mount_point("/", dir); }

int HttpServer::start(const std::string& host, int port) {
  int bound = port == 0 ? server_->bind_to_any_port(host) : (server_->bind_to_port(host, port) ? port : -1);
  if (bound < 0) throw Error("cannot bind " + host + ":" + std::to_string(port));
  thread_ = std::thread([this] { server_->listen_after_bind(); });
  server_->wait_until_ready();
  return bound;
}

void HttpServer::listen(const std::string& host, int port) {
  spdlog::info("serving on http://{}:{}", host, port);
  if (!server_->listen(host, port)) throw Error("cannot listen on " + host + ":" + std::to_string(port));
}

void HttpServer::stop() {
  if (server_) server_->stop();
  if (thread_.joinable()) thread_.join();
}

}  // namespace scribe::service
