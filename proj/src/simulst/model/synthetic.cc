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

#include "simulst/model/synthetic.h"

#include "fmt/format.h"
#include "simulst/error.h"

namespace simulst {

SyntheticUtterance BuildSyntheticUtterance(const std::vector<std::string>& words,
                                           const std::vector<int>& per_word_ms,
                                           const LexiconMockModel& model,
                                           int frame_ms, std::string id) {
  if (words.size() != per_word_ms.size()) {
    throw InvalidArgument(fmt::format("{} words but {} durations", words.size(),
                                      per_word_ms.size()));
  }
  if (frame_ms <= 0) throw InvalidArgument("frame_ms must be > 0");

  SyntheticUtterance out;
  Utterance& u = out.utterance;
  u.id = std::move(id);
  u.frame_ms = frame_ms;
  std::vector<std::string> spoken;
  for (size_t i = 0; i < words.size(); ++i) {
    const int ms = per_word_ms[i];
    if (ms <= 0 || ms % frame_ms != 0) {
      throw InvalidArgument(fmt::format(
          "duration {} ms of word {} is not a positive multiple of {} ms", ms, i,
          frame_ms));
    }
    const int n = ms / frame_ms;
    const bool silence = words[i] == kSilenceWord;
    const int ctc_id = silence ? 0 : model.SourceWordId(words[i]);
    if (ctc_id < 0) {
      throw InvalidArgument(fmt::format("word '{}' not in lexicon", words[i]));
    }
    for (int f = 0; f < n; ++f) {
      u.frames.push_back({model.WordFeatures(ctc_id, f == n - 1), frame_ms});
    }
    if (!silence) {
      out.word_end_frames.push_back(static_cast<int>(u.frames.size()) - 1);
      spoken.push_back(words[i]);
    }
  }
  u.reference = model.Translate(spoken);
  u.transcript = std::move(spoken);
  return out;
}

}  // namespace simulst
