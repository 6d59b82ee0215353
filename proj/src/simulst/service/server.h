// Copyright (c) 2026 The simulst Authors
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

#ifndef SIMULST_SERVICE_SERVER_H_
#define SIMULST_SERVICE_SERVER_H_

#include <atomic>
#include <list>
#include <memory>
#include <mutex>
#include <string>
#include <thread>

#include "simulst/model/model.h"
#include "simulst/service/socket.h"

namespace simulst {

struct ServerOptions {
  std::string host = "127.0.0.1";
  int port = 0;  // 0: ephemeral
  // Used when HELLO does not specify max_target_words.
  int default_max_target_words = 1024;
};

// Hosts the simultaneous policy behind the wire protocol. Each connection
// gets its own thread and each session its own model instance: from the HELLO
// "model" payload if present, else from the default factory.
class Server {
 public:
  Server(ModelFactory default_factory, ServerOptions options);
  ~Server();
  Server(const Server&) = delete;
  Server& operator=(const Server&) = delete;

  // Binds and starts accepting in the background.
  void Start();
  int port() const { return port_; }
  // Blocks until Stop() is called from elsewhere.
  void Wait();
  void Stop();

 private:
  struct Connection {
    Socket socket;
    std::thread thread;
    std::atomic<bool> finished{false};
  };

  void AcceptLoop();
  void Serve(Socket& socket);

  ModelFactory default_factory_;
  ServerOptions options_;
  Socket listener_;
  int port_ = 0;
  std::atomic<bool> stopping_{false};
  std::thread accept_thread_;
  std::mutex mu_;
  std::list<Connection> connections_;
};

}  // namespace simulst

#endif  // SIMULST_SERVICE_SERVER_H_
