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

#include "simulst/service/client.h"

#include <atomic>
#include <chrono>
#include <thread>

#include <unistd.h>

#include "fmt/format.h"
#include "simulst/core/segment.h"
#include "simulst/service/protocol.h"
#include "simulst/service/socket.h"

namespace simulst {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

double MsSince(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

std::string NextSessionId() {
  static std::atomic<uint64_t> counter{0};
  return fmt::format("s{}-{}", static_cast<long>(::getpid()), counter++);
}

class Exchange {
 public:
  Exchange(Socket& socket, std::string session, Clock::time_point origin)
      : socket_(socket), session_(std::move(session)), origin_(origin) {}

  void Send(WireKind kind, json payload) {
    WireMessage m;
    m.kind = kind;
    m.session = session_;
    m.payload = std::move(payload);
    m.t_client_ms = MsSince(origin_);
    socket_.WriteLine(EncodeMessage(m));
  }

  WireMessage Receive() {
    std::string line;
    if (!socket_.ReadLine(line)) {
      throw Error(ErrorCode::kNetwork, "server closed the connection");
    }
    WireMessage m = DecodeMessage(line);
    if (m.kind == WireKind::kError) {
      const std::string what =
          m.payload.is_object() ? m.payload.value("message", std::string("error"))
                                : std::string("error");
      throw Error(ErrorCode::kProtocol, "server error: " + what);
    }
    if (m.session != session_) throw ProtocolError("reply for another session");
    return m;
  }

 private:
  Socket& socket_;
  std::string session_;
  Clock::time_point origin_;
};

json HelloPayload(const ClientOptions& options, const PolicyConfig& cfg,
                  int frame_ms) {
  json p = {{"policy", cfg.ToJson()}, {"frame_ms", frame_ms}};
  if (options.model) p["model"] = options.model->ToJson();
  return p;
}

UtteranceOutcome StreamOne(const ClientOptions& options, const Utterance& u,
                           const PolicyConfig& base) {
  UtteranceOutcome o;
  o.id = u.id;
  o.reference = u.reference;
  if (u.reference.empty()) {
    o.error = "empty reference";
    return o;
  }
  try {
    PolicyConfig cfg = base;
    cfg.max_target_words = ResolveMaxTargetWords(base, u);
    const auto chunks = SegmentStream(u, cfg.step_ms);

    Socket socket = Socket::Connect(options.host, options.port, options.timeout_ms);
    Exchange ex(socket, NextSessionId(), Clock::now());

    ex.Send(WireKind::kHello, HelloPayload(options, cfg, u.frame_ms));
    if (ex.Receive().kind != WireKind::kRead) throw ProtocolError("expected READ");

    const SubwordConvention convention =
        options.model ? options.model->target_convention
                      : SubwordConvention::kBpeSuffix;
    const auto stream_start = Clock::now();
    double waited_ms = 0.0;

    // Sends one message and collects WORDs until `until` arrives.
    auto exchange = [&](WireKind kind, json payload, WireKind until) {
      const auto sent = Clock::now();
      ex.Send(kind, std::move(payload));
      while (true) {
        WireMessage m = ex.Receive();
        if (m.kind == WireKind::kWord) {
          Event e;
          e.kind = EventKind::kWrite;
          e.word = m.payload.at("word").get<std::string>();
          e.tokens = m.payload.at("tokens").get<std::vector<std::string>>();
          e.ideal_ms = m.payload.at("ideal_ms").get<int64_t>();
          e.wall_ms = options.realtime ? MsSince(stream_start)
                                       : static_cast<double>(e.ideal_ms) +
                                             waited_ms + MsSince(sent);
          for (const auto& t : e.tokens) {
            o.hypothesis.tokens.push_back({t, convention});
          }
          o.hypothesis.words.push_back(e.word);
          o.log.push_back(std::move(e));
          continue;
        }
        if (m.kind == until) {
          waited_ms += MsSince(sent);
          return m;
        }
        throw ProtocolError(fmt::format("unexpected {} from server",
                                        WireKindName(m.kind)));
      }
    };

    for (const FrameChunk& c : chunks) {
      if (options.realtime) {
        std::this_thread::sleep_until(
            stream_start + std::chrono::milliseconds(
                               static_cast<int64_t>(c.end) * u.frame_ms));
      }
      json frames = json::array();
      for (const Frame& f : c.frames) frames.push_back(f.features);
      Event read;
      read.kind = EventKind::kRead;
      read.chunk_begin = c.begin;
      read.chunk_end = c.end;
      read.ideal_ms = static_cast<int64_t>(c.end) * u.frame_ms;
      read.wall_ms = options.realtime ? MsSince(stream_start)
                                      : static_cast<double>(read.ideal_ms) + waited_ms;
      o.log.push_back(read);
      exchange(WireKind::kChunk, {{"frames", std::move(frames)}}, WireKind::kRead);
    }
    const WireMessage end = exchange(WireKind::kEosSrc, json::object(), WireKind::kEosTgt);
    o.truncated = end.payload.is_object() && end.payload.value("truncated", false);
    ScoreOutcome(o, u.duration_ms());
    o.ok = true;
  } catch (const std::exception& e) {
    o.error = e.what();
  }
  return o;
}

}  // namespace

EvalResult ClientEvaluate(const ClientOptions& options, const Manifest& manifest,
                          const PolicyConfig& cfg) {
  cfg.Validate();
  std::vector<UtteranceOutcome> outcomes;
  outcomes.reserve(manifest.size());
  for (const Utterance& u : manifest.utterances) {
    outcomes.push_back(StreamOne(options, u, cfg));
  }
  return Summarize(std::move(outcomes), cfg, true);
}

double MeasureRoundTrip(const ClientOptions& options, const PolicyConfig& cfg) {
  Socket socket = Socket::Connect(options.host, options.port, options.timeout_ms);
  Exchange ex(socket, NextSessionId(), Clock::now());
  PolicyConfig c = cfg;
  if (c.max_target_words == 0) c.max_target_words = 1;
  const auto start = Clock::now();
  ex.Send(WireKind::kHello, HelloPayload(options, c, kDefaultFrameMs));
  ex.Receive();
  return MsSince(start);
}

}  // namespace simulst
