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

#include "simulst/service/server.h"

#include <chrono>
#include <optional>

#include "spdlog/spdlog.h"
#include "simulst/model/lexicon_mock.h"
#include "simulst/policy/policy.h"
#include "simulst/service/protocol.h"

namespace simulst {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

std::vector<Frame> FramesFromPayload(const json& payload, int frame_ms) {
  if (!payload.is_object() || !payload.contains("frames") ||
      !payload["frames"].is_array()) {
    throw ProtocolError("CHUNK payload needs a 'frames' array");
  }
  std::vector<Frame> frames;
  try {
    for (const auto& row : payload["frames"]) {
      frames.push_back({row.get<std::vector<float>>(), frame_ms});
    }
  } catch (const json::exception&) {
    throw ProtocolError("CHUNK frames must be arrays of numbers");
  }
  return frames;
}

// State of the session currently open on a connection.
struct ActiveSession {
  std::string id;
  std::unique_ptr<Model> model;
  std::unique_ptr<SimultaneousSession> session;
  int frame_ms = kDefaultFrameMs;
  Clock::time_point start;
};

}  // namespace

Server::Server(ModelFactory default_factory, ServerOptions options)
    : default_factory_(std::move(default_factory)), options_(std::move(options)) {}

Server::~Server() { Stop(); }

void Server::Start() {
  listener_ = Socket::Listen(options_.host, options_.port);
  port_ = listener_.LocalPort();
  accept_thread_ = std::thread([this] { AcceptLoop(); });
  spdlog::info("listening on {}:{}", options_.host, port_);
}

void Server::Wait() {
  if (accept_thread_.joinable()) accept_thread_.join();
}

void Server::Stop() {
  if (stopping_.exchange(true)) {
    Wait();
    return;
  }
  listener_.Shutdown();
  Wait();
  std::list<Connection> conns;
  {
    std::lock_guard<std::mutex> lock(mu_);
    for (auto& c : connections_) c.socket.Shutdown();
    conns.swap(connections_);
  }
  for (auto& c : conns) {
    if (c.thread.joinable()) c.thread.join();
  }
  listener_.Close();
}

void Server::AcceptLoop() {
  while (!stopping_) {
    Socket s = listener_.Accept();
    if (!s.valid()) break;
    std::lock_guard<std::mutex> lock(mu_);
    if (stopping_) break;
    for (auto it = connections_.begin(); it != connections_.end();) {
      if (it->finished) {
        it->thread.join();
        it = connections_.erase(it);
      } else {
        ++it;
      }
    }
    Connection& c = connections_.emplace_back();
    c.socket = std::move(s);
    c.thread = std::thread([this, &c] {
      Serve(c.socket);
      c.finished = true;
    });
  }
}

void Server::Serve(Socket& socket) {
  SessionProtocol protocol;
  std::optional<ActiveSession> active;

  auto send = [&](WireKind kind, json payload, double t_client) {
    WireMessage m;
    m.kind = kind;
    m.session = active ? active->id : protocol.session();
    m.payload = std::move(payload);
    m.t_client_ms = t_client;
    m.t_server_ms = active ? std::chrono::duration<double, std::milli>(
                                 Clock::now() - active->start)
                                 .count()
                           : 0.0;
    protocol.Accept(kind, m.session);
    socket.WriteLine(EncodeMessage(m));
  };
  auto send_words = [&](const std::vector<Event>& events, double t_client) {
    for (const Event& e : events) {
      if (e.kind != EventKind::kWrite) continue;
      send(WireKind::kWord,
           {{"word", e.word},
            {"tokens", e.tokens},
            {"ideal_ms", e.ideal_ms},
            {"compute_ms", e.wall_ms - static_cast<double>(e.ideal_ms)}},
           t_client);
    }
  };

  std::string line;
  try {
    while (socket.ReadLine(line)) {
      WireMessage msg;
      try {
        msg = DecodeMessage(line);
        if (!SentByClient(msg.kind)) {
          throw ProtocolError(std::string("unexpected ") + WireKindName(msg.kind) +
                              " from client");
        }
        protocol.Accept(msg.kind, msg.session);

        switch (msg.kind) {
          case WireKind::kHello: {
            ActiveSession s;
            s.id = msg.session;
            s.start = Clock::now();
            const json& p = msg.payload.is_object() ? msg.payload : json::object();
            PolicyConfig cfg = PolicyConfig::FromJson(p.value("policy", json::object()));
            s.frame_ms = p.value("frame_ms", kDefaultFrameMs);
            s.model = p.contains("model")
                          ? std::make_unique<LexiconMockModel>(
                                LexiconConfig::FromJson(p["model"]))
                          : default_factory_();
            const int max_words = cfg.max_target_words > 0
                                      ? cfg.max_target_words
                                      : options_.default_max_target_words;
            s.session = std::make_unique<SimultaneousSession>(*s.model, cfg,
                                                              s.frame_ms, max_words);
            active = std::move(s);
            send(WireKind::kRead, json::object(), msg.t_client_ms);
            break;
          }
          case WireKind::kChunk: {
            auto frames = FramesFromPayload(msg.payload, active->frame_ms);
            if (!active->session->done()) {
              send_words(active->session->PushChunk(frames), msg.t_client_ms);
            }
            send(WireKind::kRead, json::object(), msg.t_client_ms);
            break;
          }
          case WireKind::kEosSrc: {
            send_words(active->session->FinishSource(), msg.t_client_ms);
            send(WireKind::kEosTgt,
                 {{"truncated", active->session->state().truncated}},
                 msg.t_client_ms);
            active.reset();
            break;
          }
          default:
            break;
        }
      } catch (const SimulationError& e) {
        json partial = json::array();
        for (const Event& ev : e.partial_log()) partial.push_back(EventToJson(ev));
        send(WireKind::kError, {{"message", e.what()}, {"partial_log", partial}},
             msg.t_client_ms);
        active.reset();
        break;
      } catch (const Error& e) {
        if (e.code() == ErrorCode::kNetwork) throw;
        send(WireKind::kError, {{"message", e.what()}}, msg.t_client_ms);
        active.reset();
        break;
      } catch (const json::exception& e) {
        send(WireKind::kError,
             {{"message", std::string("protocol: bad payload (") + e.what() + ")"}},
             msg.t_client_ms);
        active.reset();
        break;
      }
    }
  } catch (const std::exception& e) {
    if (!stopping_) spdlog::warn("connection dropped: {}", e.what());
  }
  socket.Shutdown();
}

}  // namespace simulst
