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

#ifndef SIMULST_HARNESS_EVALUATE_H_
#define SIMULST_HARNESS_EVALUATE_H_

#include <string>
#include <vector>

#include "simulst/core/manifest.h"
#include "simulst/metrics/report.h"
#include "simulst/model/model.h"
#include "simulst/policy/policy.h"

namespace simulst {

struct UtteranceOutcome {
  std::string id;
  bool ok = false;
  std::string error;
  Hypothesis hypothesis;
  std::vector<std::string> reference;
  ActionLog log;
  bool truncated = false;
  DelaySequence delays;
  UtteranceLatency latency;
};

struct EvalOptions {
  // Workers > 1 each own a model instance; wall-clock metrics are then
  // dropped from the report since calls overlap.
  int threads = 1;
};

struct EvalResult {
  PolicyConfig config;
  MetricsReport report;
  std::vector<UtteranceOutcome> utterances;

  bool ok() const { return report.n_failed == 0; }
};

// One delay per WRITE event, in emission order.
DelaySequence DelaysFromLog(const ActionLog& log, int64_t source_ms, int ref_len);

// Fills delays and latency of a successful outcome from its log.
void ScoreOutcome(UtteranceOutcome& outcome, int64_t source_ms);

// Aggregates outcomes into a report; failed ones are counted, not scored.
EvalResult Summarize(std::vector<UtteranceOutcome> outcomes,
                     const PolicyConfig& cfg, bool include_ca);

// Runs every utterance through RunSimultaneous. A failing utterance is
// recorded in its outcome and the corpus run continues.
EvalResult EvaluateCorpus(const Manifest& manifest, const ModelFactory& factory,
                          const PolicyConfig& cfg, const EvalOptions& options = {});

// Offline greedy reference: full encode, decode to EOS. Every word is
// emitted at T.
EvalResult EvaluateOffline(const Manifest& manifest, const ModelFactory& factory,
                           const PolicyConfig& cfg);

}  // namespace simulst

#endif  // SIMULST_HARNESS_EVALUATE_H_
