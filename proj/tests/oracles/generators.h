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

#ifndef SIMULST_TESTS_ORACLES_GENERATORS_H_
#define SIMULST_TESTS_ORACLES_GENERATORS_H_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "fmt/format.h"
#include "simulst/metrics/latency.h"
#include "simulst/model/lexicon_mock.h"
#include "simulst/model/synthetic.h"

namespace simulst::testing {

using Rng = std::mt19937_64;

inline int Uniform(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline double UniformReal(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// w000 -> t000 and so on: every source word has a one-word translation.
inline LexiconConfig OneToOneLexicon(int vocab_size) {
  LexiconConfig c;
  for (int i = 0; i < vocab_size; ++i) {
    c.lexicon[fmt::format("w{:03d}", i)] = {fmt::format("t{:03d}", i)};
  }
  return c;
}

inline std::vector<std::string> RandomWords(Rng& rng, int n, int vocab_size) {
  std::vector<std::string> words;
  for (int i = 0; i < n; ++i) {
    words.push_back(fmt::format("w{:03d}", Uniform(rng, 0, vocab_size - 1)));
  }
  return words;
}

// n words of random length (multiples of frame_ms, at least two frames),
// optionally interleaved with silence runs.
inline SyntheticUtterance RandomUtterance(Rng& rng, const LexiconMockModel& model,
                                          int n_words, int vocab_size,
                                          double pause_prob, int frame_ms = 10) {
  std::vector<std::string> words;
  std::vector<int> durations;
  for (const auto& w : RandomWords(rng, n_words, vocab_size)) {
    if (UniformReal(rng, 0.0, 1.0) < pause_prob) {
      words.push_back(kSilenceWord);
      durations.push_back(frame_ms * Uniform(rng, 1, 40));
    }
    words.push_back(w);
    durations.push_back(frame_ms * Uniform(rng, 2, 60));
  }
  return BuildSyntheticUtterance(words, durations, model, frame_ms);
}

// Delay sequence satisfying the invariants: non-decreasing ideal delays
// bounded by T, wall delays no smaller than ideal ones.
inline DelaySequence RandomDelays(Rng& rng, int hyp_len, int ref_len,
                                  double source_ms) {
  DelaySequence d;
  d.source_ms = source_ms;
  d.ref_len = ref_len;
  for (int i = 0; i < hyp_len; ++i) {
    d.ideal_ms.push_back(UniformReal(rng, 0.0, source_ms));
  }
  std::sort(d.ideal_ms.begin(), d.ideal_ms.end());
  double extra = 0.0;
  for (double v : d.ideal_ms) {
    extra += UniformReal(rng, 0.0, 50.0);
    d.wall_ms.push_back(v + extra);
  }
  return d;
}

}  // namespace simulst::testing

#endif  // SIMULST_TESTS_ORACLES_GENERATORS_H_
