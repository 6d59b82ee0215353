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

#ifndef SIMULST_SERVICE_CLIENT_H_
#define SIMULST_SERVICE_CLIENT_H_

#include <optional>
#include <string>

#include "simulst/harness/evaluate.h"
#include "simulst/model/lexicon_mock.h"

namespace simulst {

struct ClientOptions {
  std::string host = "127.0.0.1";
  int port = 0;
  // Real-time pacing sends each chunk once its audio would have been spoken;
  // otherwise chunks go out as soon as the server asks for them.
  bool realtime = false;
  // Sent in HELLO so the server builds this model for the session.
  std::optional<LexiconConfig> model;
  int timeout_ms = 30000;
};

// Streams every utterance to a server (one connection each) and scores the
// returned words exactly like the local harness. Ideal delays come from the
// server. Wall-clock delays are the ideal delay plus the time spent waiting on
// the server (as-fast-as-possible), or the real elapsed time since the stream
// started (real-time). Unreachable servers and timeouts fail the utterance.
EvalResult ClientEvaluate(const ClientOptions& options, const Manifest& manifest,
                          const PolicyConfig& cfg);

// Round trip of a HELLO/READ exchange, in ms. Throws on failure.
double MeasureRoundTrip(const ClientOptions& options, const PolicyConfig& cfg);

}  // namespace simulst

#endif  // SIMULST_SERVICE_CLIENT_H_
