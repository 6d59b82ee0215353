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

#ifndef SIMULST_POLICY_POLICY_H_
#define SIMULST_POLICY_POLICY_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "simulst/core/types.h"
#include "simulst/detection/word_detection.h"
#include "simulst/error.h"
#include "simulst/model/model.h"
#include "simulst/policy/action_log.h"

namespace simulst {

enum class Detection { kFixed, kAdaptive };
enum class Action { kRead, kWrite };

const char* DetectionName(Detection d);
Detection ParseDetection(const std::string& name);

struct PolicyConfig {
  int64_t k_test = 3;
  Detection detection = Detection::kFixed;
  int step_ms = kDefaultAvgWordMs;
  int avg_word_ms = kDefaultAvgWordMs;
  bool force_finish = true;
  bool avoid_eos_while_reading = false;
  // 0 selects 2 * |transcript| + 16 per utterance.
  int max_target_words = 0;

  // force_finish on; avoid_eos_while_reading only for adaptive detection.
  static PolicyConfig Defaults(Detection detection, int64_t k_test = 3);

  void Validate() const;
  nlohmann::json ToJson() const;
  static PolicyConfig FromJson(const nlohmann::json& j);
};

int ResolveMaxTargetWords(const PolicyConfig& cfg, const Utterance& u);

struct SimulState {
  int64_t received_ms = 0;
  bool source_finished = false;
  DetectionResult detected;
  int emitted_words = 0;
  std::vector<SubwordToken> target_tokens;
  std::vector<int> target_ids;
  bool eos_emitted = false;
  bool truncated = false;
};

// WRITE once the source is over or k_test + emitted words are detected.
Action Decide(const SimulState& state, const PolicyConfig& cfg);

struct WordResult {
  std::string word;                 // empty if nothing was completed
  std::vector<SubwordToken> tokens;  // tokens making up `word`
  bool eos = false;                 // generation is over
  bool forced_read = false;         // EOS suppressed without a substitute
  bool truncated = false;
  int decoder_calls = 0;
};

// Runs decoder steps until one more target word is complete or EOS is
// accepted, appending to state.target_tokens. EOS proposed before the source
// is finished is handled per force_finish / avoid_eos_while_reading.
WordResult GenerateWord(Model& model, const EncoderOutput& encoded,
                        SimulState& state, const PolicyConfig& cfg,
                        int max_target_words);

// Thrown when the model fails mid-utterance.
class SimulationError : public Error {
 public:
  SimulationError(const std::string& message, ActionLog partial_log)
      : Error(ErrorCode::kModel, message), partial_log_(std::move(partial_log)) {}

  const ActionLog& partial_log() const { return partial_log_; }

 private:
  ActionLog partial_log_;
};

// Push-driven simultaneous decoder for one utterance. Each PushChunk is a READ
// followed by as many WRITEs as the policy allows; FinishSource signals the end
// of the stream and drains the decoder. The in-process runner and the network
// server both drive this class, so they emit identical word sequences.
class SimultaneousSession {
 public:
  SimultaneousSession(Model& model, PolicyConfig cfg, int frame_ms,
                      int max_target_words);

  std::vector<Event> PushChunk(std::span<const Frame> chunk);
  std::vector<Event> FinishSource();

  bool done() const { return done_; }
  const SimulState& state() const { return state_; }
  const ActionLog& log() const { return log_; }
  Hypothesis hypothesis() const;
  // Time spent inside model calls so far.
  double compute_ms() const { return compute_ms_; }

 private:
  std::vector<Event> RunWrites();
  void Encode();

  Model& model_;
  PolicyConfig cfg_;
  int frame_ms_;
  int max_target_words_;
  SimulState state_;
  std::vector<Frame> frames_;
  std::optional<EncoderOutput> encoded_;
  std::vector<std::string> words_;
  ActionLog log_;
  double compute_ms_ = 0.0;
  bool forced_read_ = false;
  bool done_ = false;
};

struct SimulationResult {
  Hypothesis hypothesis;
  ActionLog log;
  bool truncated = false;
};

// Streams u through the policy in step_ms chunks. Throws SimulationError with
// the partial log if the model fails.
SimulationResult RunSimultaneous(Model& model, const Utterance& u,
                                 const PolicyConfig& cfg);

}  // namespace simulst

#endif  // SIMULST_POLICY_POLICY_H_
