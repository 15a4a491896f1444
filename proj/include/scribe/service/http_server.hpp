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

#include "scribe/service/service.hpp"

namespace httplib {
class Server;
}

namespace scribe::service {

/// HTTP binding: POST /endpoints, /complete, /execute, /accept and
/// GET /endpoints, /health. /complete answers NDJSON in two chunks (tree
/// matches, then bin matches) when the request sets "stream": true.
class HttpServer {
 public:
  explicit HttpServer(std::shared_ptr<Service> service);
  ~HttpServer();

  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  /// Serves on a background thread; port 0 picks a free port.
  int start(const std::string& host = "127.0.0.1", int port = 0);
  void listen(const std::string& host, int port);
  void stop();

  /// Serves static files under `dir` at /.
  bool mountStatic(const std::string& dir);

 private:
  std::shared_ptr<Service> service_;
  std::unique_ptr<httplib::Server> server_;
  std::thread thread_;
};

}  // namespace scribe::service
