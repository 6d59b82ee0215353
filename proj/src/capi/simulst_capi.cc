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

#include "simulst/simulst.h"

#include <memory>
#include <string>
#include <vector>

#include "spdlog/spdlog.h"
#include "simulst/core/manifest.h"
#include "simulst/core/subword.h"
#include "simulst/error.h"
#include "simulst/harness/evaluate.h"
#include "simulst/harness/output.h"
#include "simulst/harness/sweep.h"
#include "simulst/harness/synth.h"
#include "simulst/metrics/stats.h"
#include "simulst/model/lexicon_mock.h"
#include "simulst/service/client.h"
#include "simulst/service/server.h"

struct simulst_manifest {
  simulst::Manifest manifest;
};

struct simulst_model {
  simulst::LexiconConfig config;
};

struct simulst_eval_result {
  simulst::EvalResult result;
  std::string metrics_json;
  std::vector<std::string> hypotheses;
};

struct simulst_sweep_result {
  simulst::SweepResult result;
};

struct simulst_server {
  std::unique_ptr<simulst::Server> server;
};

namespace {

thread_local std::string g_last_error;

simulst_status StatusFor(simulst::ErrorCode code) {
  switch (code) {
    case simulst::ErrorCode::kInvalidArgument: return SIMULST_ERR_INVALID_ARGUMENT;
    case simulst::ErrorCode::kIo: return SIMULST_ERR_IO;
    case simulst::ErrorCode::kParse: return SIMULST_ERR_PARSE;
    case simulst::ErrorCode::kModel: return SIMULST_ERR_MODEL;
    case simulst::ErrorCode::kProtocol: return SIMULST_ERR_PROTOCOL;
    case simulst::ErrorCode::kNetwork: return SIMULST_ERR_NETWORK;
    case simulst::ErrorCode::kInternal: return SIMULST_ERR_INTERNAL;
  }
  return SIMULST_ERR_INTERNAL;
}

template <typename F>
simulst_status Guard(F&& f) {
  g_last_error.clear();
  try {
    f();
    return SIMULST_OK;
  } catch (const simulst::Error& e) {
    g_last_error = e.what();
    return StatusFor(e.code());
  } catch (const nlohmann::json::exception& e) {
    g_last_error = e.what();
    return SIMULST_ERR_PARSE;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SIMULST_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown error";
    return SIMULST_ERR_INTERNAL;
  }
}

void Require(bool cond, const char* what) {
  if (!cond) throw simulst::InvalidArgument(what);
}

simulst::PolicyConfig ToPolicy(const simulst_policy_config& c) {
  simulst::PolicyConfig p;
  p.k_test = c.k_test;
  p.detection = c.detection == SIMULST_DETECTION_ADAPTIVE
                    ? simulst::Detection::kAdaptive
                    : simulst::Detection::kFixed;
  p.step_ms = c.step_ms;
  p.avg_word_ms = c.avg_word_ms;
  p.force_finish = c.force_finish != 0;
  p.avoid_eos_while_reading = c.avoid_eos_while_reading != 0;
  p.max_target_words = c.max_target_words;
  return p;
}

simulst_policy_config FromPolicy(const simulst::PolicyConfig& p) {
  simulst_policy_config c;
  c.k_test = p.k_test;
  c.detection = p.detection == simulst::Detection::kAdaptive
                    ? SIMULST_DETECTION_ADAPTIVE
                    : SIMULST_DETECTION_FIXED;
  c.step_ms = p.step_ms;
  c.avg_word_ms = p.avg_word_ms;
  c.force_finish = p.force_finish ? 1 : 0;
  c.avoid_eos_while_reading = p.avoid_eos_while_reading ? 1 : 0;
  c.max_target_words = p.max_target_words;
  return c;
}

simulst::ModelFactory FactoryFor(const simulst_model* model) {
  if (model == nullptr) {
    return []() -> std::unique_ptr<simulst::Model> {
      throw simulst::Error(simulst::ErrorCode::kModel,
                           "no model configured; send one in HELLO");
    };
  }
  return simulst::LexiconMockFactory(model->config);
}

simulst_eval_result* Wrap(simulst::EvalResult r) {
  auto out = std::make_unique<simulst_eval_result>();
  out->result = std::move(r);
  nlohmann::json j = out->result.report.ToJson();
  j["config"] = out->result.config.ToJson();
  out->metrics_json = j.dump(2);
  for (const auto& u : out->result.utterances) {
    out->hypotheses.push_back(simulst::JoinWords(u.hypothesis.words));
  }
  return out.release();
}

simulst::ClientOptions ToClient(const simulst_client_options* o,
                                const simulst_model* model) {
  Require(o != nullptr, "client options are required");
  simulst::ClientOptions c;
  if (o->host != nullptr) c.host = o->host;
  c.port = o->port;
  c.realtime = o->realtime != 0;
  if (o->timeout_ms > 0) c.timeout_ms = o->timeout_ms;
  if (model != nullptr) c.model = model->config;
  return c;
}

}  // namespace

extern "C" {

const char* simulst_last_error(void) { return g_last_error.c_str(); }

const char* simulst_version(void) { return "0.1.0"; }

void simulst_set_log_level(int level) {
  if (level < 0) level = 0;
  if (level > 6) level = 6;
  spdlog::set_level(static_cast<spdlog::level::level_enum>(level));
}

void simulst_policy_config_init(simulst_policy_config* cfg,
                                simulst_detection detection, int64_t k_test) {
  if (cfg == nullptr) return;
  *cfg = FromPolicy(simulst::PolicyConfig::Defaults(
      detection == SIMULST_DETECTION_ADAPTIVE ? simulst::Detection::kAdaptive
                                              : simulst::Detection::kFixed,
      k_test));
}

simulst_status simulst_manifest_load(const char* path, simulst_manifest** out) {
  return Guard([&] {
    Require(path != nullptr && out != nullptr, "path and out are required");
    auto m = std::make_unique<simulst_manifest>();
    m->manifest = simulst::LoadManifest(path);
    *out = m.release();
  });
}

size_t simulst_manifest_size(const simulst_manifest* manifest) {
  return manifest == nullptr ? 0 : manifest->manifest.size();
}

void simulst_manifest_free(simulst_manifest* manifest) { delete manifest; }

simulst_status simulst_model_load(const char* config_path, simulst_model** out) {
  return Guard([&] {
    Require(config_path != nullptr && out != nullptr,
            "config path and out are required");
    auto m = std::make_unique<simulst_model>();
    m->config = simulst::LexiconConfig::Load(config_path);
    *out = m.release();
  });
}

void simulst_model_free(simulst_model* model) { delete model; }

simulst_status simulst_evaluate(const simulst_manifest* manifest,
                                const simulst_model* model,
                                const simulst_policy_config* cfg, int threads,
                                simulst_eval_result** out) {
  return Guard([&] {
    Require(manifest && model && cfg && out, "null argument");
    simulst::EvalOptions opts;
    opts.threads = threads < 1 ? 1 : threads;
    *out = Wrap(simulst::EvaluateCorpus(manifest->manifest, FactoryFor(model),
                                        ToPolicy(*cfg), opts));
  });
}

simulst_status simulst_evaluate_offline(const simulst_manifest* manifest,
                                        const simulst_model* model,
                                        const simulst_policy_config* cfg,
                                        simulst_eval_result** out) {
  return Guard([&] {
    Require(manifest && model && cfg && out, "null argument");
    *out = Wrap(simulst::EvaluateOffline(manifest->manifest, FactoryFor(model),
                                         ToPolicy(*cfg)));
  });
}

void simulst_eval_result_metrics(const simulst_eval_result* result,
                                 simulst_metrics* out) {
  if (result == nullptr || out == nullptr) return;
  const auto& r = result->result.report;
  out->bleu = r.bleu;
  out->al_ms = r.al_ms;
  out->laal_ms = r.laal_ms;
  out->has_ca = r.al_ca_ms.has_value() && r.laal_ca_ms.has_value();
  out->al_ca_ms = r.al_ca_ms.value_or(0.0);
  out->laal_ca_ms = r.laal_ca_ms.value_or(0.0);
  out->regime = simulst::RegimeName(r.regime);
  out->len_diff = r.len_diff;
  out->n_utts = r.n_utts;
  out->n_failed = r.n_failed;
  out->n_no_hypothesis = r.n_no_hypothesis;
}

const char* simulst_eval_result_metrics_json(const simulst_eval_result* result) {
  return result == nullptr ? "" : result->metrics_json.c_str();
}

size_t simulst_eval_result_size(const simulst_eval_result* result) {
  return result == nullptr ? 0 : result->result.utterances.size();
}

simulst_status simulst_eval_result_utterance(const simulst_eval_result* result,
                                             size_t index, const char** id,
                                             int* ok, const char** hypothesis,
                                             const char** error) {
  return Guard([&] {
    Require(result != nullptr, "null result");
    Require(index < result->result.utterances.size(), "index out of range");
    const auto& u = result->result.utterances[index];
    if (id) *id = u.id.c_str();
    if (ok) *ok = u.ok ? 1 : 0;
    if (hypothesis) *hypothesis = result->hypotheses[index].c_str();
    if (error) *error = u.error.c_str();
  });
}

simulst_status simulst_eval_result_write(const simulst_eval_result* result,
                                         const char* dir) {
  return Guard([&] {
    Require(result && dir, "null argument");
    simulst::WriteEvalOutput(result->result, dir);
  });
}

void simulst_eval_result_free(simulst_eval_result* result) { delete result; }

simulst_status simulst_sweep(const simulst_manifest* manifest,
                             const simulst_model* model,
                             const simulst_sweep_spec* spec,
                             simulst_sweep_result** out) {
  return Guard([&] {
    Require(manifest && model && spec && out, "null argument");
    simulst::SweepSpec s;
    if (spec->n_k_values > 0) {
      Require(spec->k_values != nullptr, "k_values is null");
      s.k_values.assign(spec->k_values, spec->k_values + spec->n_k_values);
    }
    if (spec->n_strategies > 0) {
      Require(spec->strategies != nullptr, "strategies is null");
      s.strategies.clear();
      for (size_t i = 0; i < spec->n_strategies; ++i) {
        s.strategies.push_back(spec->strategies[i] == SIMULST_DETECTION_ADAPTIVE
                                   ? simulst::Detection::kAdaptive
                                   : simulst::Detection::kFixed);
      }
    }
    s.runs_per_point = spec->runs_per_point;
    s.base = ToPolicy(spec->base);
    if (spec->avoid_eos_while_reading >= 0) {
      s.avoid_eos_while_reading = spec->avoid_eos_while_reading != 0;
    }
    auto r = std::make_unique<simulst_sweep_result>();
    r->result = simulst::Sweep(manifest->manifest, FactoryFor(model), s);
    *out = r.release();
  });
}

size_t simulst_sweep_result_size(const simulst_sweep_result* result) {
  return result == nullptr ? 0 : result->result.points.size();
}

simulst_status simulst_sweep_result_point(const simulst_sweep_result* result,
                                          size_t index,
                                          simulst_curve_point* out) {
  return Guard([&] {
    Require(result && out, "null argument");
    Require(index < result->result.points.size(), "index out of range");
    const auto& p = result->result.points[index];
    out->strategy = p.strategy.c_str();
    out->k = p.k;
    out->bleu = p.bleu;
    out->al_ms = p.al_ms;
    out->laal_ms = p.laal_ms;
    out->al_ca_ms = p.al_ca_ms;
    out->laal_ca_ms = p.laal_ca_ms;
  });
}

size_t simulst_sweep_result_num_errors(const simulst_sweep_result* result) {
  return result == nullptr ? 0 : result->result.errors.size();
}

const char* simulst_sweep_result_error(const simulst_sweep_result* result,
                                       size_t index) {
  if (result == nullptr || index >= result->result.errors.size()) return "";
  return result->result.errors[index].c_str();
}

simulst_status simulst_sweep_result_write(const simulst_sweep_result* result,
                                          const char* dir) {
  return Guard([&] {
    Require(result && dir, "null argument");
    simulst::WriteSweepOutput(result->result, dir);
  });
}

void simulst_sweep_result_free(simulst_sweep_result* result) { delete result; }

simulst_status simulst_server_start(const simulst_model* model, const char* host,
                                    int port, simulst_server** out) {
  return Guard([&] {
    Require(out != nullptr, "out is required");
    simulst::ServerOptions opts;
    if (host != nullptr) opts.host = host;
    opts.port = port;
    auto s = std::make_unique<simulst_server>();
    s->server = std::make_unique<simulst::Server>(FactoryFor(model), opts);
    s->server->Start();
    *out = s.release();
  });
}

int simulst_server_port(const simulst_server* server) {
  return server == nullptr ? 0 : server->server->port();
}

void simulst_server_stop(simulst_server* server) {
  if (server != nullptr) server->server->Stop();
}

void simulst_server_free(simulst_server* server) { delete server; }

simulst_status simulst_client_evaluate(const simulst_client_options* options,
                                       const simulst_manifest* manifest,
                                       const simulst_model* model,
                                       const simulst_policy_config* cfg,
                                       simulst_eval_result** out) {
  return Guard([&] {
    Require(manifest && cfg && out, "null argument");
    *out = Wrap(simulst::ClientEvaluate(ToClient(options, model),
                                        manifest->manifest, ToPolicy(*cfg)));
  });
}

simulst_status simulst_client_round_trip(const simulst_client_options* options,
                                         const simulst_model* model,
                                         double* out_ms) {
  return Guard([&] {
    Require(out_ms != nullptr, "out is required");
    *out_ms = simulst::MeasureRoundTrip(ToClient(options, model),
                                        simulst::PolicyConfig{});
  });
}

void simulst_synth_spec_init(simulst_synth_spec* spec) {
  if (spec == nullptr) return;
  const simulst::SynthSpec d;
  spec->n_utts = d.n_utts;
  spec->min_words = d.min_words;
  spec->max_words = d.max_words;
  spec->vocab_size = d.vocab_size;
  spec->word_ms = d.word_ms;
  spec->jitter_ms = d.jitter_ms;
  spec->pause_prob = d.pause_prob;
  spec->pause_ms = d.pause_ms;
  spec->frame_ms = d.frame_ms;
  spec->compute_delay_ms = d.compute_delay_ms;
  spec->seed = d.seed;
}

simulst_status simulst_synth_write(const simulst_synth_spec* spec,
                                   const char* dir) {
  return Guard([&] {
    Require(spec && dir, "null argument");
    simulst::SynthSpec s;
    s.n_utts = spec->n_utts;
    s.min_words = spec->min_words;
    s.max_words = spec->max_words;
    s.vocab_size = spec->vocab_size;
    s.word_ms = spec->word_ms;
    s.jitter_ms = spec->jitter_ms;
    s.pause_prob = spec->pause_prob;
    s.pause_ms = spec->pause_ms;
    s.frame_ms = spec->frame_ms;
    s.compute_delay_ms = spec->compute_delay_ms;
    s.seed = spec->seed;
    simulst::WriteSynthCorpus(simulst::SynthesizeCorpus(s), dir);
  });
}

}  // extern "C"
