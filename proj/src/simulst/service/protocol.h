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

#ifndef SIMULST_SERVICE_PROTOCOL_H_
#define SIMULST_SERVICE_PROTOCOL_H_

#include <string>
#include <string_view>
#include <unordered_set>

#include "json.hpp"
#include "simulst/error.h"

namespace simulst {

// Newline-delimited JSON over TCP, one message per line:
//   {"kind":str,"session":str,"payload":...,"t_client_ms":float,"t_server_ms":float}
//
// Client -> server: HELLO (payload: {"policy": PolicyConfig, "frame_ms": int,
//   "model": optional mock config}), CHUNK ({"frames": [[float...]...]}),
//   EOS_SRC.
// Server -> client: READ (ready for the next chunk), WORD ({"word", "tokens",
//   "ideal_ms", "compute_ms"}), EOS_TGT ({"truncated": bool}), ERROR
//   ({"message": str}).
//
// Per session: HELLO (CHUNK | READ | WORD)* EOS_SRC WORD* EOS_TGT. A
// connection may carry several sessions back to back, each with a new id.
enum class WireKind { kHello, kChunk, kRead, kWord, kEosSrc, kEosTgt, kError };

const char* WireKindName(WireKind kind);
WireKind ParseWireKind(std::string_view name);
bool SentByClient(WireKind kind);

struct WireMessage {
  WireKind kind = WireKind::kHello;
  std::string session;
  nlohmann::json payload;
  double t_client_ms = 0.0;
  double t_server_ms = 0.0;
};

class ProtocolError : public Error {
 public:
  explicit ProtocolError(const std::string& message)
      : Error(ErrorCode::kProtocol, "protocol: " + message) {}
};

// One line of JSON, no trailing newline.
std::string EncodeMessage(const WireMessage& m);
// Throws ProtocolError on malformed input.
WireMessage DecodeMessage(std::string_view line);

// Checks the order of message kinds on one connection, both directions
// interleaved as they happen.
class SessionProtocol {
 public:
  enum class Phase { kAwaitHello, kStreaming, kDraining };

  // Throws ProtocolError if `kind` may not come next; otherwise advances.
  void Accept(WireKind kind, const std::string& session);
  Phase phase() const { return phase_; }
  const std::string& session() const { return session_; }

 private:
  Phase phase_ = Phase::kAwaitHello;
  std::string session_;
  std::unordered_set<std::string> used_ids_;
};

}  // namespace simulst

#endif  // SIMULST_SERVICE_PROTOCOL_H_
