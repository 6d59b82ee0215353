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

#include "simulst/metrics/report.h"

#include "spdlog/spdlog.h"
#include "simulst/error.h"
#include "simulst/metrics/bleu.h"

namespace simulst {

using nlohmann::json;

UtteranceLatency ComputeLatency(const DelaySequence& d) {
  UtteranceLatency l;
  l.al = AverageLagging(d, false);
  l.laal = LengthAdaptiveAverageLagging(d, false);
  if (d.wall_ms.size() == d.ideal_ms.size()) {
    l.al_ca = AverageLagging(d, true);
    l.laal_ca = LengthAdaptiveAverageLagging(d, true);
  }
  return l;
}

namespace {

json OptionalNumber(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

std::optional<double> ReadOptional(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<double>();
}

double Mean(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

}  // namespace

json MetricsReport::ToJson() const {
  return {{"bleu", bleu},
          {"AL", al_ms},
          {"LAAL", laal_ms},
          {"AL_CA", OptionalNumber(al_ca_ms)},
          {"LAAL_CA", OptionalNumber(laal_ca_ms)},
          {"regime", RegimeName(regime)},
          {"len_diff", len_diff},
          {"n_utts", n_utts},
          {"n_failed", n_failed},
          {"n_no_hypothesis", n_no_hypothesis}};
}

MetricsReport MetricsReport::FromJson(const json& j) {
  MetricsReport r;
  r.bleu = j.at("bleu").get<double>();
  r.al_ms = j.at("AL").get<double>();
  r.laal_ms = j.at("LAAL").get<double>();
  r.al_ca_ms = ReadOptional(j, "AL_CA");
  r.laal_ca_ms = ReadOptional(j, "LAAL_CA");
  r.regime = LatencyRegime(r.laal_ms);
  r.len_diff = j.at("len_diff").get<double>();
  r.n_utts = j.at("n_utts").get<int>();
  r.n_failed = j.value("n_failed", 0);
  r.n_no_hypothesis = j.value("n_no_hypothesis", 0);
  return r;
}

MetricsReport AggregateMetrics(const std::vector<WordSeq>& hyps,
                               const std::vector<WordSeq>& refs,
                               const std::vector<UtteranceLatency>& latencies,
                               bool include_ca) {
  if (hyps.size() != latencies.size()) {
    throw InvalidArgument("one latency entry per hypothesis is required");
  }
  MetricsReport r;
  r.n_utts = static_cast<int>(hyps.size());
  if (hyps.empty()) return r;

  r.bleu = Bleu(hyps, refs);
  r.len_diff = LengthDifference(hyps, refs);

  std::vector<double> al, laal, al_ca, laal_ca;
  for (const auto& l : latencies) {
    if (!l.laal) {
      ++r.n_no_hypothesis;
      continue;
    }
    al.push_back(*l.al);
    laal.push_back(*l.laal);
    if (l.al_ca) al_ca.push_back(*l.al_ca);
    if (l.laal_ca) laal_ca.push_back(*l.laal_ca);
  }
  if (r.n_no_hypothesis > 0) {
    spdlog::warn("{} utterance(s) without a hypothesis excluded from latency means",
                 r.n_no_hypothesis);
  }
  r.al_ms = Mean(al);
  r.laal_ms = Mean(laal);
  if (include_ca && laal_ca.size() == laal.size()) {
    r.al_ca_ms = Mean(al_ca);
    r.laal_ca_ms = Mean(laal_ca);
  }
  r.regime = LatencyRegime(r.laal_ms);
  return r;
}

}  // namespace simulst
