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

#include "simulst/service/protocol.h"

#include "fmt/format.h"

namespace simulst {

using nlohmann::json;

const char* WireKindName(WireKind kind) {
  switch (kind) {
    case WireKind::kHello:
      return "HELLO";
    case WireKind::kChunk:
      return "CHUNK";
    case WireKind::kRead:
      return "READ";
    case WireKind::kWord:
      return "WORD";
    case WireKind::kEosSrc:
      return "EOS_SRC";
    case WireKind::kEosTgt:
      return "EOS_TGT";
    case WireKind::kError:
      return "ERROR";
  }
  return "?";
}

WireKind ParseWireKind(std::string_view name) {
  for (WireKind k : {WireKind::kHello, WireKind::kChunk, WireKind::kRead,
                     WireKind::kWord, WireKind::kEosSrc, WireKind::kEosTgt,
                     WireKind::kError}) {
    if (name == WireKindName(k)) return k;
  }
  throw ProtocolError(fmt::format("unknown message kind '{}'", std::string(name)));
}

bool SentByClient(WireKind kind) {
  return kind == WireKind::kHello || kind == WireKind::kChunk ||
         kind == WireKind::kEosSrc;
}

std::string EncodeMessage(const WireMessage& m) {
  json j = {{"kind", WireKindName(m.kind)},
            {"session", m.session},
            {"payload", m.payload},
            {"t_client_ms", m.t_client_ms},
            {"t_server_ms", m.t_server_ms}};
  return j.dump();
}

WireMessage DecodeMessage(std::string_view line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw ProtocolError(fmt::format("malformed message ({})", e.what()));
  }
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw ProtocolError("message without a kind");
  }
  WireMessage m;
  m.kind = ParseWireKind(j["kind"].get<std::string>());
  try {
    m.session = j.value("session", std::string());
    m.payload = j.value("payload", json());
    m.t_client_ms = j.value("t_client_ms", 0.0);
    m.t_server_ms = j.value("t_server_ms", 0.0);
  } catch (const json::exception& e) {
    throw ProtocolError(fmt::format("malformed message ({})", e.what()));
  }
  return m;
}

void SessionProtocol::Accept(WireKind kind, const std::string& session) {
  if (kind == WireKind::kError) {
    phase_ = Phase::kAwaitHello;
    return;
  }
  switch (phase_) {
    case Phase::kAwaitHello:
      if (kind != WireKind::kHello) throw ProtocolError("expected HELLO");
      if (!used_ids_.insert(session).second) {
        throw ProtocolError(fmt::format("session id '{}' already used", session));
      }
      session_ = session;
      phase_ = Phase::kStreaming;
      return;
    case Phase::kStreaming:
      if (session != session_) {
        throw ProtocolError(fmt::format("message for unknown session '{}'", session));
      }
      if (kind == WireKind::kChunk || kind == WireKind::kRead ||
          kind == WireKind::kWord) {
        return;
      }
      if (kind == WireKind::kEosSrc) {
        phase_ = Phase::kDraining;
        return;
      }
      throw ProtocolError(fmt::format("unexpected {} while streaming", WireKindName(kind)));
    case Phase::kDraining:
      if (session != session_) {
        throw ProtocolError(fmt::format("message for unknown session '{}'", session));
      }
      if (kind == WireKind::kWord) return;
      if (kind == WireKind::kEosTgt) {
        phase_ = Phase::kAwaitHello;
        return;
      }
      throw ProtocolError(fmt::format("unexpected {} after EOS_SRC", WireKindName(kind)));
  }
}

}  // namespace simulst
