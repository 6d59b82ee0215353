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

#ifndef SIMULST_METRICS_REPORT_H_
#define SIMULST_METRICS_REPORT_H_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "simulst/metrics/latency.h"
#include "simulst/metrics/stats.h"

namespace simulst {

struct UtteranceLatency {
  std::optional<double> al, laal, al_ca, laal_ca;  // nullopt: no hypothesis
};

UtteranceLatency ComputeLatency(const DelaySequence& d);

struct MetricsReport {
  double bleu = 0.0;
  double al_ms = 0.0;
  double laal_ms = 0.0;
  // Absent when wall-clock timing was not honest (parallel evaluation).
  std::optional<double> al_ca_ms;
  std::optional<double> laal_ca_ms;
  Regime regime = Regime::kLow;
  double len_diff = 0.0;
  int n_utts = 0;
  int n_failed = 0;
  int n_no_hypothesis = 0;

  // {"bleu","AL","LAAL","AL_CA","LAAL_CA","regime","len_diff","n_utts", ...}
  nlohmann::json ToJson() const;
  static MetricsReport FromJson(const nlohmann::json& j);
};

// Unweighted means over utterances with a hypothesis; BLEU and length
// difference over all scored utterances. Regime is classified on LAAL.
MetricsReport AggregateMetrics(const std::vector<WordSeq>& hyps,
                               const std::vector<WordSeq>& refs,
                               const std::vector<UtteranceLatency>& latencies,
                               bool include_ca);

}  // namespace simulst

#endif  // SIMULST_METRICS_REPORT_H_
