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

// simulharness: evaluation front end over the simulst C API.
//
// Exit codes: 0 success, 1 some utterances or sweep points failed,
// 2 configuration error (bad flags, unreadable manifest or model config).

#include <csignal>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "simulst/simulst.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPartial = 1;
constexpr int kExitConfig = 2;

struct PolicyFlags {
  std::string k = "3";
  std::string detection = "fixed";
  int step_ms = 280;
  int avg_word_ms = 280;
  bool force_finish = false;
  bool no_force_finish = false;
  bool avoid_eos = false;
  bool no_avoid_eos = false;
  int max_target_words = 0;

  void Register(CLI::App* app, bool with_k) {
    if (with_k) {
      app->add_option("--k", k, "k_test (integer, or 'inf')")->capture_default_str();
      app->add_option("--detection", detection, "word detection")
          ->check(CLI::IsMember({"fixed", "adaptive"}))
          ->capture_default_str();
    }
    app->add_option("--step-ms", step_ms, "source chunk length")->capture_default_str();
    app->add_option("--avg-word-ms", avg_word_ms, "fixed detection word length")
        ->capture_default_str();
    auto* ff = app->add_flag("--force-finish", force_finish,
                             "suppress EOS before the source ends (default)");
    app->add_flag("--no-force-finish", no_force_finish)->excludes(ff);
    auto* ae = app->add_flag("--avoid-eos-while-reading", avoid_eos,
                             "take the best non-EOS token instead of reading "
                             "(default for adaptive detection)");
    app->add_flag("--no-avoid-eos-while-reading", no_avoid_eos)->excludes(ae);
    app->add_option("--max-target-words", max_target_words,
                    "per-utterance cap, 0 derives it from the source");
  }
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

simulst_detection ParseDetection(const std::string& name) {
  return name == "adaptive" ? SIMULST_DETECTION_ADAPTIVE : SIMULST_DETECTION_FIXED;
}

int64_t ParseK(const std::string& text) {
  if (text == "inf" || text == "infinity") return SIMULST_K_INFINITE;
  try {
    size_t used = 0;
    const long long k = std::stoll(text, &used);
    if (used == text.size() && k >= 1) return k;
  } catch (const std::exception&) {
  }
  throw ConfigError("invalid k '" + text + "'");
}

simulst_policy_config BuildPolicy(const PolicyFlags& f, simulst_detection det,
                                  int64_t k) {
  simulst_policy_config cfg;
  simulst_policy_config_init(&cfg, det, k);
  cfg.step_ms = f.step_ms;
  cfg.avg_word_ms = f.avg_word_ms;
  if (f.no_force_finish) cfg.force_finish = 0;
  if (f.force_finish) cfg.force_finish = 1;
  if (f.avoid_eos) cfg.avoid_eos_while_reading = 1;
  if (f.no_avoid_eos) cfg.avoid_eos_while_reading = 0;
  cfg.max_target_words = f.max_target_words;
  return cfg;
}

simulst_policy_config BuildPolicy(const PolicyFlags& f) {
  return BuildPolicy(f, ParseDetection(f.detection), ParseK(f.k));
}

// Owning wrappers so every early return releases its handle.
template <typename T, void (*Free)(T*)>
struct Handle {
  T* ptr = nullptr;
  Handle() = default;
  Handle(const Handle&) = delete;
  Handle& operator=(const Handle&) = delete;
  ~Handle() {
    if (ptr != nullptr) Free(ptr);
  }
};
using ManifestHandle = Handle<simulst_manifest, simulst_manifest_free>;
using ModelHandle = Handle<simulst_model, simulst_model_free>;
using EvalHandle = Handle<simulst_eval_result, simulst_eval_result_free>;
using SweepHandle = Handle<simulst_sweep_result, simulst_sweep_result_free>;
using ServerHandle = Handle<simulst_server, simulst_server_free>;

void Check(simulst_status s, const std::string& what) {
  if (s != SIMULST_OK) {
    throw ConfigError(what + ": " + simulst_last_error());
  }
}

// Runtime failures (I/O while writing results) are not configuration errors.
bool Report(simulst_status s, const std::string& what) {
  if (s == SIMULST_OK) return true;
  std::fprintf(stderr, "error: %s: %s\n", what.c_str(), simulst_last_error());
  return false;
}

int FinishEval(const simulst_eval_result* result, const std::string& out) {
  bool ok = true;
  if (!out.empty()) ok = Report(simulst_eval_result_write(result, out.c_str()), "write");
  std::printf("%s\n", simulst_eval_result_metrics_json(result));
  simulst_metrics m;
  simulst_eval_result_metrics(result, &m);
  if (m.n_failed > 0) {
    std::fprintf(stderr, "%d of %zu utterances failed\n", m.n_failed,
                 simulst_eval_result_size(result));
  }
  return (m.n_failed > 0 || !ok) ? kExitPartial : kExitOk;
}

std::vector<int64_t> ParseKList(const std::string& text) {
  std::vector<int64_t> ks;
  size_t start = 0;
  while (start <= text.size()) {
    const size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    ks.push_back(ParseK(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return ks;
}

std::vector<simulst_detection> ParseStrategies(const std::string& text) {
  std::vector<simulst_detection> out;
  size_t start = 0;
  while (true) {
    const size_t comma = text.find(',', start);
    const std::string item =
        text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    if (item != "fixed" && item != "adaptive") {
      throw ConfigError("unknown detection strategy '" + item + "'");
    }
    out.push_back(ParseDetection(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int WaitForSignal() {
  sigset_t set;
  sigemptyset(&set);
  sigaddset(&set, SIGINT);
  sigaddset(&set, SIGTERM);
  int sig = 0;
  sigwait(&set, &sig);
  return sig;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simultaneous speech translation evaluation harness"};
  app.require_subcommand(1);
  app.fallthrough();
  int log_level = 2;
  app.add_option("--log-level", log_level, "0 trace ... 6 off")->capture_default_str();

  std::string manifest_path, model_path, out_dir;
  int threads = 1;
  auto add_corpus = [&](CLI::App* sub, bool model_required) {
    sub->add_option("--manifest", manifest_path, "utterance manifest (JSONL)")->required();
    auto* m = sub->add_option("--model-config", model_path, "model configuration (JSON)");
    if (model_required) m->required();
  };

  // eval
  PolicyFlags eval_flags;
  auto* eval = app.add_subcommand("eval", "evaluate one policy configuration");
  add_corpus(eval, true);
  eval_flags.Register(eval, true);
  eval->add_option("--threads", threads, "worker threads (drops wall-clock metrics)");
  eval->add_option("--out", out_dir, "output directory")->required();

  // sweep
  PolicyFlags sweep_flags;
  std::string k_list = "3,5,7,9,11";
  std::string strategies = "fixed,adaptive";
  int runs = 1;
  auto* sweep = app.add_subcommand("sweep", "quality-latency curve over k");
  add_corpus(sweep, true);
  sweep_flags.Register(sweep, false);
  sweep->add_option("--k-list", k_list, "comma separated k values")->capture_default_str();
  sweep->add_option("--strategies", strategies, "comma separated detections")
      ->capture_default_str();
  sweep->add_option("--runs", runs, "runs per point, wall-clock metrics are averaged")
      ->capture_default_str();
  sweep->add_option("--out", out_dir, "output directory")->required();

  // offline
  int beam = 1;
  int offline_max_words = 0;
  auto* offline = app.add_subcommand("offline", "greedy offline reference");
  add_corpus(offline, true);
  offline->add_option("--beam", beam, "beam size (only greedy, 1, is supported)")
      ->capture_default_str();
  offline->add_option("--max-target-words", offline_max_words);
  offline->add_option("--out", out_dir, "output directory")->required();

  // serve
  std::string host = "127.0.0.1";
  int port = 0;
  auto* serve = app.add_subcommand("serve", "host the policy over TCP");
  serve->add_option("--model-config", model_path,
                    "default model, used when a session sends none");
  serve->add_option("--host", host)->capture_default_str();
  serve->add_option("--port", port, "0 picks a free port")->capture_default_str();

  // client
  PolicyFlags client_flags;
  bool realtime = false;
  int timeout_ms = 30000;
  auto* client = app.add_subcommand("client", "evaluate against a running server");
  add_corpus(client, false);
  client_flags.Register(client, true);
  client->add_option("--host", host)->capture_default_str();
  client->add_option("--port", port)->required();
  client->add_flag("--realtime", realtime, "pace chunks at speaking rate");
  client->add_option("--timeout-ms", timeout_ms)->capture_default_str();
  client->add_option("--out", out_dir, "output directory");

  // synth
  simulst_synth_spec synth_spec;
  simulst_synth_spec_init(&synth_spec);
  auto* synth = app.add_subcommand("synth", "write a synthetic corpus and mock model");
  synth->add_option("--utts", synth_spec.n_utts)->capture_default_str();
  synth->add_option("--min-words", synth_spec.min_words)->capture_default_str();
  synth->add_option("--max-words", synth_spec.max_words)->capture_default_str();
  synth->add_option("--vocab", synth_spec.vocab_size)->capture_default_str();
  synth->add_option("--word-ms", synth_spec.word_ms)->capture_default_str();
  synth->add_option("--jitter-ms", synth_spec.jitter_ms)->capture_default_str();
  synth->add_option("--pause-prob", synth_spec.pause_prob)->capture_default_str();
  synth->add_option("--pause-ms", synth_spec.pause_ms)->capture_default_str();
  synth->add_option("--frame-ms", synth_spec.frame_ms)->capture_default_str();
  synth->add_option("--compute-delay-ms", synth_spec.compute_delay_ms)
      ->capture_default_str();
  synth->add_option("--seed", synth_spec.seed)->capture_default_str();
  synth->add_option("--out", out_dir, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfig;
  }
  simulst_set_log_level(log_level);

  try {
    ManifestHandle manifest;
    ModelHandle model;
    auto load_corpus = [&] {
      Check(simulst_manifest_load(manifest_path.c_str(), &manifest.ptr), "manifest");
    };
    auto load_model = [&] {
      if (!model_path.empty()) {
        Check(simulst_model_load(model_path.c_str(), &model.ptr), "model config");
      }
    };

    if (*eval) {
      const simulst_policy_config cfg = BuildPolicy(eval_flags);
      load_corpus();
      load_model();
      EvalHandle result;
      Check(simulst_evaluate(manifest.ptr, model.ptr, &cfg, threads, &result.ptr),
            "eval");
      return FinishEval(result.ptr, out_dir);
    }

    if (*offline) {
      if (beam != 1) throw ConfigError("only greedy decoding (--beam 1) is supported");
      simulst_policy_config cfg;
      simulst_policy_config_init(&cfg, SIMULST_DETECTION_FIXED, SIMULST_K_INFINITE);
      cfg.max_target_words = offline_max_words;
      load_corpus();
      load_model();
      EvalHandle result;
      Check(simulst_evaluate_offline(manifest.ptr, model.ptr, &cfg, &result.ptr),
            "offline");
      return FinishEval(result.ptr, out_dir);
    }

    if (*sweep) {
      const std::vector<int64_t> ks = ParseKList(k_list);
      const std::vector<simulst_detection> dets = ParseStrategies(strategies);
      simulst_sweep_spec spec;
      spec.k_values = ks.data();
      spec.n_k_values = ks.size();
      spec.strategies = dets.data();
      spec.n_strategies = dets.size();
      spec.runs_per_point = runs;
      spec.base = BuildPolicy(sweep_flags, SIMULST_DETECTION_FIXED, 1);
      spec.avoid_eos_while_reading =
          sweep_flags.avoid_eos ? 1 : (sweep_flags.no_avoid_eos ? 0 : -1);
      load_corpus();
      load_model();
      SweepHandle result;
      Check(simulst_sweep(manifest.ptr, model.ptr, &spec, &result.ptr), "sweep");
      const bool wrote =
          Report(simulst_sweep_result_write(result.ptr, out_dir.c_str()), "write");
      std::printf("strategy,k,bleu,AL_ms,LAAL_ms,AL_CA_ms,LAAL_CA_ms\n");
      for (size_t i = 0; i < simulst_sweep_result_size(result.ptr); ++i) {
        simulst_curve_point p;
        simulst_sweep_result_point(result.ptr, i, &p);
        std::printf("%s,%lld,%.2f,%.1f,%.1f,%.1f,%.1f\n", p.strategy,
                    static_cast<long long>(p.k), p.bleu, p.al_ms, p.laal_ms,
                    p.al_ca_ms, p.laal_ca_ms);
      }
      const size_t n_errors = simulst_sweep_result_num_errors(result.ptr);
      for (size_t i = 0; i < n_errors; ++i) {
        std::fprintf(stderr, "error: %s\n", simulst_sweep_result_error(result.ptr, i));
      }
      return (n_errors > 0 || !wrote) ? kExitPartial : kExitOk;
    }

    if (*serve) {
      load_model();
      // Block the signals before any server thread exists so only sigwait
      // sees them.
      sigset_t set;
      sigemptyset(&set);
      sigaddset(&set, SIGINT);
      sigaddset(&set, SIGTERM);
      pthread_sigmask(SIG_BLOCK, &set, nullptr);
      ServerHandle server;
      Check(simulst_server_start(model.ptr, host.c_str(), port, &server.ptr), "serve");
      std::printf("listening on %s:%d\n", host.c_str(), simulst_server_port(server.ptr));
      std::fflush(stdout);
      WaitForSignal();
      simulst_server_stop(server.ptr);
      return kExitOk;
    }

    if (*client) {
      const simulst_policy_config cfg = BuildPolicy(client_flags);
      load_corpus();
      load_model();
      simulst_client_options opts{host.c_str(), port, realtime ? 1 : 0, timeout_ms};
      EvalHandle result;
      Check(simulst_client_evaluate(&opts, manifest.ptr, model.ptr, &cfg, &result.ptr),
            "client");
      return FinishEval(result.ptr, out_dir);
    }

    if (*synth) {
      Check(simulst_synth_write(&synth_spec, out_dir.c_str()), "synth");
      std::printf("wrote %s/manifest.jsonl and %s/model.json\n", out_dir.c_str(),
                  out_dir.c_str());
      return kExitOk;
    }
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitConfig;
  }
  return kExitConfig;
}
