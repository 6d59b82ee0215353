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

/* C interface to the simultaneous translation engine and its evaluation
 * harness. Objects are opaque handles released with their _free function.
 * Every call that can fail returns a simulst_status; on failure the message is
 * available from simulst_last_error() on the same thread. */

#ifndef SIMULST_SIMULST_H_
#define SIMULST_SIMULST_H_

#include <stddef.h>
#include <stdint.h>

#if defined(SIMULST_BUILDING_LIBRARY)
#define SIMULST_API __attribute__((visibility("default")))
#else
#define SIMULST_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SIMULST_OK = 0,
  SIMULST_ERR_INVALID_ARGUMENT = 1,
  SIMULST_ERR_IO = 2,
  SIMULST_ERR_PARSE = 3,
  SIMULST_ERR_MODEL = 4,
  SIMULST_ERR_PROTOCOL = 5,
  SIMULST_ERR_NETWORK = 6,
  SIMULST_ERR_INTERNAL = 7
} simulst_status;

/* Message of the last failed call on this thread; "" if none. */
SIMULST_API const char* simulst_last_error(void);
SIMULST_API const char* simulst_version(void);

/* 0 trace ... 6 off. */
SIMULST_API void simulst_set_log_level(int level);

typedef enum {
  SIMULST_DETECTION_FIXED = 0,
  SIMULST_DETECTION_ADAPTIVE = 1
} simulst_detection;

/* k_test = SIMULST_K_INFINITE waits for the whole source. */
#define SIMULST_K_INFINITE (INT64_MAX / 4)

typedef struct {
  int64_t k_test;
  simulst_detection detection;
  int step_ms;
  int avg_word_ms;
  int force_finish;
  int avoid_eos_while_reading;
  int max_target_words; /* 0: derived per utterance */
} simulst_policy_config;

/* Defaults for a strategy; avoid_eos_while_reading is on for adaptive. */
SIMULST_API void simulst_policy_config_init(simulst_policy_config* cfg,
                                            simulst_detection detection,
                                            int64_t k_test);

/* Corpus. */
typedef struct simulst_manifest simulst_manifest;
SIMULST_API simulst_status simulst_manifest_load(const char* path,
                                                 simulst_manifest** out);
SIMULST_API size_t simulst_manifest_size(const simulst_manifest* manifest);
SIMULST_API void simulst_manifest_free(simulst_manifest* manifest);

/* Model configuration; every evaluation builds its own instances from it. */
typedef struct simulst_model simulst_model;
SIMULST_API simulst_status simulst_model_load(const char* config_path,
                                              simulst_model** out);
SIMULST_API void simulst_model_free(simulst_model* model);

typedef struct {
  double bleu;
  double al_ms;
  double laal_ms;
  int has_ca; /* wall-clock metrics present */
  double al_ca_ms;
  double laal_ca_ms;
  const char* regime; /* "low", "medium" or "high" */
  double len_diff;
  int n_utts;
  int n_failed;
  int n_no_hypothesis;
} simulst_metrics;

/* Evaluation. */
typedef struct simulst_eval_result simulst_eval_result;

SIMULST_API simulst_status simulst_evaluate(const simulst_manifest* manifest,
                                            const simulst_model* model,
                                            const simulst_policy_config* cfg,
                                            int threads,
                                            simulst_eval_result** out);
SIMULST_API simulst_status simulst_evaluate_offline(
    const simulst_manifest* manifest, const simulst_model* model,
    const simulst_policy_config* cfg, simulst_eval_result** out);

SIMULST_API void simulst_eval_result_metrics(const simulst_eval_result* result,
                                             simulst_metrics* out);
/* metrics.json contents; owned by the result. */
SIMULST_API const char* simulst_eval_result_metrics_json(
    const simulst_eval_result* result);
SIMULST_API size_t simulst_eval_result_size(const simulst_eval_result* result);
/* Strings are owned by the result. error is "" for successful utterances. */
SIMULST_API simulst_status simulst_eval_result_utterance(
    const simulst_eval_result* result, size_t index, const char** id, int* ok,
    const char** hypothesis, const char** error);
SIMULST_API simulst_status simulst_eval_result_write(
    const simulst_eval_result* result, const char* dir);
SIMULST_API void simulst_eval_result_free(simulst_eval_result* result);

/* Latency-quality sweep. */
typedef struct {
  const int64_t* k_values;
  size_t n_k_values;
  const simulst_detection* strategies;
  size_t n_strategies;
  int runs_per_point;
  simulst_policy_config base;
  int avoid_eos_while_reading; /* -1: strategy default, else 0 or 1 */
} simulst_sweep_spec;

typedef struct {
  const char* strategy;
  int64_t k;
  double bleu;
  double al_ms;
  double laal_ms;
  double al_ca_ms;
  double laal_ca_ms;
} simulst_curve_point;

typedef struct simulst_sweep_result simulst_sweep_result;
SIMULST_API simulst_status simulst_sweep(const simulst_manifest* manifest,
                                         const simulst_model* model,
                                         const simulst_sweep_spec* spec,
                                         simulst_sweep_result** out);
SIMULST_API size_t simulst_sweep_result_size(const simulst_sweep_result* result);
SIMULST_API simulst_status simulst_sweep_result_point(
    const simulst_sweep_result* result, size_t index, simulst_curve_point* out);
SIMULST_API size_t simulst_sweep_result_num_errors(
    const simulst_sweep_result* result);
SIMULST_API const char* simulst_sweep_result_error(
    const simulst_sweep_result* result, size_t index);
SIMULST_API simulst_status simulst_sweep_result_write(
    const simulst_sweep_result* result, const char* dir);
SIMULST_API void simulst_sweep_result_free(simulst_sweep_result* result);

/* Streaming server. model may be NULL if every client sends its own. */
typedef struct simulst_server simulst_server;
SIMULST_API simulst_status simulst_server_start(const simulst_model* model,
                                                const char* host, int port,
                                                simulst_server** out);
SIMULST_API int simulst_server_port(const simulst_server* server);
SIMULST_API void simulst_server_stop(simulst_server* server);
SIMULST_API void simulst_server_free(simulst_server* server);

typedef struct {
  const char* host;
  int port;
  int realtime;
  int timeout_ms;
} simulst_client_options;

/* Streams the corpus to a server. If model is non-NULL its configuration is
 * sent with every session. */
SIMULST_API simulst_status simulst_client_evaluate(
    const simulst_client_options* options, const simulst_manifest* manifest,
    const simulst_model* model, const simulst_policy_config* cfg,
    simulst_eval_result** out);
SIMULST_API simulst_status simulst_client_round_trip(
    const simulst_client_options* options, const simulst_model* model,
    double* out_ms);

/* Synthetic corpus in the mock encoding. */
typedef struct {
  int n_utts;
  int min_words;
  int max_words;
  int vocab_size;
  int word_ms;
  int jitter_ms;
  double pause_prob;
  int pause_ms;
  int frame_ms;
  double compute_delay_ms;
  uint64_t seed;
} simulst_synth_spec;

SIMULST_API void simulst_synth_spec_init(simulst_synth_spec* spec);
/* Writes DIR/manifest.jsonl and DIR/model.json. */
SIMULST_API simulst_status simulst_synth_write(const simulst_synth_spec* spec,
                                               const char* dir);

#ifdef __cplusplus
}
#endif

#endif /* SIMULST_SIMULST_H_ */
