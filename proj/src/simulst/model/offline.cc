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

#include "simulst/model/offline.h"

#include "simulst/core/argmax.h"
#include "simulst/core/subword.h"
#include "simulst/error.h"

namespace simulst {

OfflineResult OfflineGreedyTranslate(Model& model, const Utterance& u,
                                     int max_target_words) {
  if (max_target_words <= 0) throw InvalidArgument("max_target_words must be > 0");
  const TargetVocabulary& vocab = model.target_vocabulary();
  const EncoderOutput encoded = model.EncodePrefix(u.frames);

  OfflineResult out;
  std::vector<int> prefix;
  while (true) {
    const WordSplit split = WordsFromSubwords(out.hypothesis.tokens, vocab.convention);
    if (static_cast<int>(split.complete_words.size()) >= max_target_words) {
      out.truncated = true;
      break;
    }
    if (prefix.size() >=
        static_cast<size_t>(max_target_words + 1) * kMaxTokensPerWord) {
      out.truncated = true;
      break;
    }
    const int best = ArgmaxLowest(model.DecoderStep(encoded, prefix));
    if (best < 0) throw Error(ErrorCode::kModel, "decoder returned no scores");
    if (best == vocab.eos_id) break;
    prefix.push_back(best);
    out.hypothesis.tokens.push_back({vocab.tokens.at(best), vocab.convention});
  }

  std::vector<SubwordToken> closed = out.hypothesis.tokens;
  closed.push_back({std::string(kEndOfSequence), vocab.convention});
  out.hypothesis.words = WordsFromSubwords(closed, vocab.convention).complete_words;
  if (out.truncated &&
      static_cast<int>(out.hypothesis.words.size()) > max_target_words) {
    out.hypothesis.words.resize(max_target_words);
  }
  return out;
}

}  // namespace simulst
