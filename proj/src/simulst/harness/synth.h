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

#ifndef SIMULST_HARNESS_SYNTH_H_
#define SIMULST_HARNESS_SYNTH_H_

#include <cstdint>
#include <filesystem>
#include <vector>

#include "simulst/core/manifest.h"
#include "simulst/model/lexicon_mock.h"

namespace simulst {

struct SynthSpec {
  int n_utts = 10;
  int min_words = 12;
  int max_words = 24;
  int vocab_size = 50;
  // Every word lasts word_ms; with jitter_ms > 0 durations are drawn
  // uniformly from word_ms +- jitter_ms (rounded to frames).
  int word_ms = 280;
  int jitter_ms = 0;
  // Probability of a pause after each word, lasting pause_ms.
  double pause_prob = 0.0;
  int pause_ms = 560;
  int frame_ms = 10;
  double compute_delay_ms = 0.0;
  uint64_t seed = 1;
};

struct SynthCorpus {
  LexiconConfig model;
  Manifest manifest;
  std::vector<std::vector<int>> word_end_frames;  // per utterance
};

// Random word sequences over a 1:1 lexicon, rendered in the mock encoding.
// References are the exact lexicon translations.
SynthCorpus SynthesizeCorpus(const SynthSpec& spec);

// Writes DIR/manifest.jsonl and DIR/model.json.
void WriteSynthCorpus(const SynthCorpus& corpus, const std::filesystem::path& dir);

}  // namespace simulst

#endif  // SIMULST_HARNESS_SYNTH_H_
