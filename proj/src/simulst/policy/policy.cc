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

#include "simulst/policy/policy.h"

#include <chrono>

#include "fmt/format.h"
#include "simulst/core/argmax.h"
#include "simulst/core/segment.h"
#include "simulst/core/subword.h"

namespace simulst {

using nlohmann::json;

const char* DetectionName(Detection d) {
  return d == Detection::kFixed ? "fixed" : "adaptive";
}

Detection ParseDetection(const std::string& name) {
  if (name == "fixed") return Detection::kFixed;
  if (name == "adaptive") return Detection::kAdaptive;
  throw InvalidArgument(fmt::format("unknown detection strategy '{}'", name));
}

PolicyConfig PolicyConfig::Defaults(Detection detection, int64_t k_test) {
  PolicyConfig c;
  c.k_test = k_test;
  c.detection = detection;
  c.avoid_eos_while_reading = detection == Detection::kAdaptive;
  return c;
}

void PolicyConfig::Validate() const {
  if (k_test < 1) throw InvalidArgument("k_test must be >= 1");
  if (step_ms <= 0) throw InvalidArgument("step_ms must be > 0");
  if (avg_word_ms <= 0) throw InvalidArgument("avg_word_ms must be > 0");
  if (max_target_words < 0) throw InvalidArgument("max_target_words must be >= 0");
}

json PolicyConfig::ToJson() const {
  return {{"k_test", k_test},
          {"detection", DetectionName(detection)},
          {"step_ms", step_ms},
          {"avg_word_ms", avg_word_ms},
          {"force_finish", force_finish},
          {"avoid_eos_while_reading", avoid_eos_while_reading},
          {"max_target_words", max_target_words}};
}

PolicyConfig PolicyConfig::FromJson(const json& j) {
  PolicyConfig c;
  try {
    c.detection = ParseDetection(j.value("detection", std::string("fixed")));
    c = Defaults(c.detection);
    c.k_test = j.value("k_test", c.k_test);
    c.step_ms = j.value("step_ms", c.step_ms);
    c.avg_word_ms = j.value("avg_word_ms", c.avg_word_ms);
    c.force_finish = j.value("force_finish", c.force_finish);
    c.avoid_eos_while_reading =
        j.value("avoid_eos_while_reading", c.avoid_eos_while_reading);
    c.max_target_words = j.value("max_target_words", c.max_target_words);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, fmt::format("bad policy config: {}", e.what()));
  }
  c.Validate();
  return c;
}

int ResolveMaxTargetWords(const PolicyConfig& cfg, const Utterance& u) {
  if (cfg.max_target_words > 0) return cfg.max_target_words;
  const int64_t source_words =
      u.transcript ? static_cast<int64_t>(u.transcript->size())
                   : (u.duration_ms() + cfg.avg_word_ms - 1) / cfg.avg_word_ms;
  return static_cast<int>(2 * source_words + 16);
}

Action Decide(const SimulState& state, const PolicyConfig& cfg) {
  if (state.source_finished) return Action::kWrite;
  return state.detected.word_count >= cfg.k_test + state.emitted_words
             ? Action::kWrite
             : Action::kRead;
}

WordResult GenerateWord(Model& model, const EncoderOutput& encoded,
                        SimulState& state, const PolicyConfig& cfg,
                        int max_target_words) {
  const TargetVocabulary& vocab = model.target_vocabulary();
  const SubwordConvention conv = vocab.convention;
  WordResult r;

  if (state.emitted_words >= max_target_words) {
    r.truncated = r.eos = true;
    state.truncated = state.eos_emitted = true;
    return r;
  }

  const size_t word_start =
      WordsFromSubwords(state.target_tokens, conv).tokens_in_complete_words;
  auto take_word = [&](const WordSplit& split) {
    r.word = split.complete_words[state.emitted_words];
    r.tokens.assign(state.target_tokens.begin() + word_start,
                    state.target_tokens.begin() + split.tokens_in_complete_words);
    ++state.emitted_words;
  };

  for (int generated = 0;; ++generated) {
    if (generated >= kMaxTokensPerWord) {
      r.truncated = r.eos = true;
      state.truncated = state.eos_emitted = true;
      return r;
    }
    const std::vector<float> scores = model.DecoderStep(encoded, state.target_ids);
    ++r.decoder_calls;
    if (scores.size() != vocab.tokens.size()) {
      throw Error(ErrorCode::kModel,
                  fmt::format("decoder returned {} scores for a vocabulary of {}",
                              scores.size(), vocab.tokens.size()));
    }
    int best = ArgmaxLowest(scores);

    if (best == vocab.eos_id) {
      if (state.source_finished || !cfg.force_finish) {
        std::vector<SubwordToken> closed = state.target_tokens;
        closed.push_back({std::string(kEndOfSequence), conv});
        const WordSplit split = WordsFromSubwords(closed, conv);
        if (static_cast<int>(split.complete_words.size()) > state.emitted_words) {
          r.word = split.complete_words[state.emitted_words];
          r.tokens.assign(state.target_tokens.begin() + word_start,
                          state.target_tokens.end());
          ++state.emitted_words;
        }
        r.eos = true;
        state.eos_emitted = true;
        return r;
      }
      if (!cfg.avoid_eos_while_reading) {
        r.forced_read = true;
        return r;
      }
      best = ArgmaxLowest(scores, vocab.eos_id);
      if (best < 0) throw Error(ErrorCode::kModel, "decoder has no non-EOS token");
    }

    state.target_ids.push_back(best);
    state.target_tokens.push_back({vocab.tokens[best], conv});
    const WordSplit split = WordsFromSubwords(state.target_tokens, conv);
    if (static_cast<int>(split.complete_words.size()) > state.emitted_words) {
      take_word(split);
      return r;
    }
  }
}

namespace {

using Clock = std::chrono::steady_clock;

double ElapsedMs(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

SimultaneousSession::SimultaneousSession(Model& model, PolicyConfig cfg,
                                         int frame_ms, int max_target_words)
    : model_(model),
      cfg_(std::move(cfg)),
      frame_ms_(frame_ms),
      max_target_words_(max_target_words) {
  cfg_.Validate();
  if (frame_ms_ <= 0) throw InvalidArgument("frame_ms must be > 0");
  if (max_target_words_ <= 0) throw InvalidArgument("max_target_words must be > 0");
}

void SimultaneousSession::Encode() {
  const auto start = Clock::now();
  encoded_ = model_.EncodePrefix(frames_);
  compute_ms_ += ElapsedMs(start);
}

std::vector<Event> SimultaneousSession::PushChunk(std::span<const Frame> chunk) {
  if (done_) throw InvalidArgument("session already finished");
  if (state_.source_finished) throw InvalidArgument("source already finished");
  const size_t begin = frames_.size();
  for (const Frame& f : chunk) {
    if (f.duration_ms != frame_ms_) {
      throw InvalidArgument(fmt::format("frame lasts {} ms, session expects {} ms",
                                        f.duration_ms, frame_ms_));
    }
    frames_.push_back(f);
  }
  state_.received_ms = static_cast<int64_t>(frames_.size()) * frame_ms_;
  forced_read_ = false;

  try {
    Encode();
  } catch (const SimulationError&) {
    throw;
  } catch (const std::exception& e) {
    throw SimulationError(e.what(), log_);
  }
  if (cfg_.detection == Detection::kFixed) {
    state_.detected = FixedWordCount(state_.received_ms, cfg_.avg_word_ms, frame_ms_);
  } else {
    const auto tokens = CtcGreedyCollapse(encoded_->ctc, model_.source_vocabulary(),
                                          model_.source_convention());
    state_.detected = AdaptiveWordCount(tokens, model_.source_convention());
  }

  Event read;
  read.kind = EventKind::kRead;
  read.chunk_begin = begin;
  read.chunk_end = frames_.size();
  read.detected = state_.detected.word_count;
  read.ideal_ms = state_.received_ms;
  read.wall_ms = state_.received_ms + compute_ms_;
  log_.push_back(read);

  std::vector<Event> out{read};
  auto writes = RunWrites();
  out.insert(out.end(), writes.begin(), writes.end());
  return out;
}

std::vector<Event> SimultaneousSession::FinishSource() {
  if (done_) return {};
  state_.source_finished = true;
  forced_read_ = false;
  return RunWrites();
}

std::vector<Event> SimultaneousSession::RunWrites() {
  std::vector<Event> out;
  try {
    while (!done_ && !forced_read_ && Decide(state_, cfg_) == Action::kWrite) {
      if (!encoded_) Encode();
      const auto start = Clock::now();
      WordResult r = GenerateWord(model_, *encoded_, state_, cfg_, max_target_words_);
      compute_ms_ += ElapsedMs(start);
      if (!r.word.empty()) {
        Event w;
        w.kind = EventKind::kWrite;
        w.word = r.word;
        for (const auto& t : r.tokens) w.tokens.push_back(t.surface);
        w.ideal_ms = state_.received_ms;
        w.wall_ms = state_.received_ms + compute_ms_;
        log_.push_back(w);
        words_.push_back(r.word);
        out.push_back(std::move(w));
      }
      if (r.eos) done_ = true;
      if (r.forced_read) forced_read_ = true;
    }
  } catch (const SimulationError&) {
    throw;
  } catch (const std::exception& e) {
    throw SimulationError(e.what(), log_);
  }
  return out;
}

Hypothesis SimultaneousSession::hypothesis() const {
  Hypothesis h;
  h.tokens = state_.target_tokens;
  h.words = words_;
  return h;
}

SimulationResult RunSimultaneous(Model& model, const Utterance& u,
                                 const PolicyConfig& cfg) {
  SimultaneousSession session(model, cfg, u.frame_ms, ResolveMaxTargetWords(cfg, u));
  for (const FrameChunk& chunk : SegmentStream(u, cfg.step_ms)) {
    if (session.done()) break;
    session.PushChunk(chunk.frames);
  }
  session.FinishSource();

  SimulationResult out;
  out.hypothesis = session.hypothesis();
  out.log = session.log();
  out.truncated = session.state().truncated;
  return out;
}

}  // namespace simulst
