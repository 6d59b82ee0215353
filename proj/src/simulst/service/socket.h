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

#ifndef SIMULST_SERVICE_SOCKET_H_
#define SIMULST_SERVICE_SOCKET_H_

#include <string>
#include <string_view>

namespace simulst {

// Owning TCP socket with newline-framed reads and writes. Errors throw
// Error(kNetwork).
class Socket {
 public:
  Socket() = default;
  explicit Socket(int fd) : fd_(fd) {}
  ~Socket() { Close(); }
  Socket(Socket&& other) noexcept;
  Socket& operator=(Socket&& other) noexcept;
  Socket(const Socket&) = delete;
  Socket& operator=(const Socket&) = delete;

  static Socket Connect(const std::string& host, int port, int timeout_ms);
  // Listening socket; port 0 picks an ephemeral port.
  static Socket Listen(const std::string& host, int port);

  int fd() const { return fd_; }
  bool valid() const { return fd_ >= 0; }
  int LocalPort() const;

  // Blocks for the next connection; returns an invalid socket once the
  // listener is shut down.
  Socket Accept();

  // False on orderly close before a full line.
  bool ReadLine(std::string& line);
  void WriteLine(std::string_view line);
  void SetReceiveTimeout(int timeout_ms);
  // Unblocks any thread waiting on this socket.
  void Shutdown();
  void Close();

 private:
  int fd_ = -1;
  std::string buffer_;
};

}  // namespace simulst

#endif  // SIMULST_SERVICE_SOCKET_H_
