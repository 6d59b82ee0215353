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

#include "simulst/harness/synth.h"

#include <random>

#include "fmt/format.h"
#include "simulst/error.h"
#include "simulst/harness/output.h"
#include "simulst/model/synthetic.h"

namespace simulst {

SynthCorpus SynthesizeCorpus(const SynthSpec& spec) {
  if (spec.n_utts < 0 || spec.min_words < 1 || spec.max_words < spec.min_words ||
      spec.vocab_size < 1 || spec.frame_ms <= 0 || spec.word_ms <= 0 ||
      spec.jitter_ms < 0 || spec.jitter_ms >= spec.word_ms ||
      spec.pause_prob < 0 || spec.pause_prob > 1 || spec.pause_ms <= 0) {
    throw InvalidArgument("invalid synthetic corpus specification");
  }
  SynthCorpus corpus;
  for (int i = 0; i < spec.vocab_size; ++i) {
    corpus.model.lexicon[fmt::format("w{:03d}", i)] = {fmt::format("t{:03d}", i)};
  }
  corpus.model.compute_delay_ms = spec.compute_delay_ms;
  const LexiconMockModel model(corpus.model);

  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> n_words(spec.min_words, spec.max_words);
  std::uniform_int_distribution<int> word(0, spec.vocab_size - 1);
  std::uniform_int_distribution<int> jitter(-spec.jitter_ms, spec.jitter_ms);
  std::bernoulli_distribution pause(spec.pause_prob);

  auto to_frames = [&](int ms) {
    const int frames = std::max(2, (ms + spec.frame_ms / 2) / spec.frame_ms);
    return frames * spec.frame_ms;
  };

  for (int u = 0; u < spec.n_utts; ++u) {
    std::vector<std::string> words;
    std::vector<int> durations;
    const int n = n_words(rng);
    for (int w = 0; w < n; ++w) {
      words.push_back(fmt::format("w{:03d}", word(rng)));
      durations.push_back(
          to_frames(spec.word_ms + (spec.jitter_ms > 0 ? jitter(rng) : 0)));
      if (spec.pause_prob > 0 && pause(rng)) {
        words.push_back(kSilenceWord);
        durations.push_back(to_frames(spec.pause_ms));
      }
    }
    SyntheticUtterance s = BuildSyntheticUtterance(
        words, durations, model, spec.frame_ms, fmt::format("utt{:04d}", u));
    if (!s.utterance.frames.empty()) {
      corpus.manifest.feature_dim = s.utterance.feature_dim();
    }
    corpus.word_end_frames.push_back(std::move(s.word_end_frames));
    corpus.manifest.utterances.push_back(std::move(s.utterance));
  }
  return corpus;
}

void WriteSynthCorpus(const SynthCorpus& corpus, const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  WriteManifest(corpus.manifest, dir / "manifest.jsonl");
  WriteTextFile(dir / "model.json", corpus.model.ToJson().dump(2) + "\n");
}

}  // namespace simulst
