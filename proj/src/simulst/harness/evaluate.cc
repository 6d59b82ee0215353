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

#include "simulst/harness/evaluate.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "spdlog/spdlog.h"
#include "simulst/model/offline.h"

namespace simulst {

DelaySequence DelaysFromLog(const ActionLog& log, int64_t source_ms, int ref_len) {
  DelaySequence d;
  d.source_ms = static_cast<double>(source_ms);
  d.ref_len = ref_len;
  for (const Event& e : log) {
    if (e.kind != EventKind::kWrite) continue;
    d.ideal_ms.push_back(static_cast<double>(e.ideal_ms));
    d.wall_ms.push_back(e.wall_ms);
  }
  return d;
}

void ScoreOutcome(UtteranceOutcome& o, int64_t source_ms) {
  o.delays = DelaysFromLog(o.log, source_ms, static_cast<int>(o.reference.size()));
  o.latency = ComputeLatency(o.delays);
}

EvalResult Summarize(std::vector<UtteranceOutcome> outcomes,
                     const PolicyConfig& cfg, bool include_ca) {
  EvalResult result;
  result.config = cfg;
  std::vector<WordSeq> hyps, refs;
  std::vector<UtteranceLatency> lat;
  int failed = 0;
  for (const auto& o : outcomes) {
    if (!o.ok) {
      ++failed;
      spdlog::error("utterance '{}' failed: {}", o.id, o.error);
      continue;
    }
    hyps.push_back(o.hypothesis.words);
    refs.push_back(o.reference);
    lat.push_back(o.latency);
  }
  result.report = AggregateMetrics(hyps, refs, lat, include_ca);
  result.report.n_failed = failed;
  result.utterances = std::move(outcomes);
  return result;
}

namespace {

UtteranceOutcome RunOne(Model& model, const Utterance& u, const PolicyConfig& cfg) {
  UtteranceOutcome o;
  o.id = u.id;
  o.reference = u.reference;
  if (u.reference.empty()) {
    o.error = "empty reference";
    return o;
  }
  try {
    SimulationResult sim = RunSimultaneous(model, u, cfg);
    o.hypothesis = std::move(sim.hypothesis);
    o.log = std::move(sim.log);
    o.truncated = sim.truncated;
    ScoreOutcome(o, u.duration_ms());
    o.ok = true;
  } catch (const SimulationError& e) {
    o.error = e.what();
    o.log = e.partial_log();
  } catch (const std::exception& e) {
    o.error = e.what();
  }
  return o;
}

}  // namespace

EvalResult EvaluateCorpus(const Manifest& manifest, const ModelFactory& factory,
                          const PolicyConfig& cfg, const EvalOptions& options) {
  cfg.Validate();
  const size_t n = manifest.utterances.size();
  std::vector<UtteranceOutcome> outcomes(n);
  const int threads = std::max(1, std::min<int>(options.threads, static_cast<int>(n)));

  if (threads == 1) {
    auto model = factory();
    for (size_t i = 0; i < n; ++i) {
      outcomes[i] = RunOne(*model, manifest.utterances[i], cfg);
    }
  } else {
    // Models are built here so a failing factory surfaces in the caller.
    std::vector<std::unique_ptr<Model>> models;
    for (int w = 0; w < threads; ++w) models.push_back(factory());
    std::atomic<size_t> next{0};
    std::vector<std::jthread> workers;
    for (int w = 0; w < threads; ++w) {
      workers.emplace_back([&, model = models[w].get()] {
        for (size_t i = next++; i < n; i = next++) {
          outcomes[i] = RunOne(*model, manifest.utterances[i], cfg);
        }
      });
    }
  }
  return Summarize(std::move(outcomes), cfg, threads == 1);
}

EvalResult EvaluateOffline(const Manifest& manifest, const ModelFactory& factory,
                           const PolicyConfig& cfg) {
  auto model = factory();
  std::vector<UtteranceOutcome> outcomes;
  for (const Utterance& u : manifest.utterances) {
    UtteranceOutcome o;
    o.id = u.id;
    o.reference = u.reference;
    if (u.reference.empty()) {
      o.error = "empty reference";
      outcomes.push_back(std::move(o));
      continue;
    }
    try {
      const auto start = std::chrono::steady_clock::now();
      OfflineResult r = OfflineGreedyTranslate(*model, u, ResolveMaxTargetWords(cfg, u));
      const double compute_ms = std::chrono::duration<double, std::milli>(
                                    std::chrono::steady_clock::now() - start)
                                    .count();
      o.hypothesis = std::move(r.hypothesis);
      o.truncated = r.truncated;
      for (const auto& w : o.hypothesis.words) {
        Event e;
        e.kind = EventKind::kWrite;
        e.word = w;
        e.ideal_ms = u.duration_ms();
        e.wall_ms = static_cast<double>(u.duration_ms()) + compute_ms;
        o.log.push_back(std::move(e));
      }
      ScoreOutcome(o, u.duration_ms());
      o.ok = true;
    } catch (const std::exception& e) {
      o.error = e.what();
    }
    outcomes.push_back(std::move(o));
  }
  return Summarize(std::move(outcomes), cfg, true);
}

}  // namespace simulst
