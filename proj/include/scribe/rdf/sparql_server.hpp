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

#include <memory>
#include <string>
#include <thread>

#include "scribe/rdf/endpoint.hpp"

namespace httplib {
class Server;
}

namespace scribe::rdf {

/// Serves an endpoint over the SPARQL Protocol at `/sparql`. Timeouts map to
/// HTTP 504, parse errors to 400.
class SparqlHttpServer {
 public:
  explicit SparqlHttpServer(EndpointPtr backend);
  ~SparqlHttpServer();

  SparqlHttpServer(const SparqlHttpServer&) = delete;
  SparqlHttpServer& operator=(const SparqlHttpServer&) = delete;

  /// Binds to host:port (port 0 picks a free port) and serves on a
  /// background thread. Returns the bound port.
  int start(const std::string& host = "127.0.0.1", int port = 0);
  /// Blocks serving on the calling thread.
  void listen(const std::string& host, int port);
  void stop();

  std::string url() const;

 private:
  EndpointPtr backend_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
  std::string host_;
  int port_ = 0;
};

}  // namespace scribe::rdf
