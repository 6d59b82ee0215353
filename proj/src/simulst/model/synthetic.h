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

#ifndef SIMULST_MODEL_SYNTHETIC_H_
#define SIMULST_MODEL_SYNTHETIC_H_

#include <string>
#include <vector>

#include "simulst/core/types.h"
#include "simulst/model/lexicon_mock.h"

namespace simulst {

// A pause in a synthetic stream: all-zero frames, blank under the mock CTC.
inline const std::string kSilenceWord = "<sil>";

struct SyntheticUtterance {
  Utterance utterance;
  // Last frame of each spoken (non-silence) word.
  std::vector<int> word_end_frames;
};

// Builds frames for `words` in the mock's source encoding, word i spanning
// per_word_ms[i]. Transcript is the spoken words; reference is their lexicon
// translation.
SyntheticUtterance BuildSyntheticUtterance(const std::vector<std::string>& words,
                                           const std::vector<int>& per_word_ms,
                                           const LexiconMockModel& model,
                                           int frame_ms = kDefaultFrameMs,
                                           std::string id = "synthetic");

}  // namespace simulst

#endif  // SIMULST_MODEL_SYNTHETIC_H_
