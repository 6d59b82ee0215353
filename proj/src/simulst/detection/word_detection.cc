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

#include "simulst/detection/word_detection.h"

#include "fmt/format.h"
#include "simulst/core/subword.h"
#include "simulst/error.h"

namespace simulst {

DetectionResult FixedWordCount(int64_t elapsed_ms, int avg_word_ms,
                               int frame_ms) {
  if (avg_word_ms <= 0 || frame_ms <= 0) {
    throw InvalidArgument(fmt::format(
        "avg_word_ms ({}) and frame_ms ({}) must be positive", avg_word_ms,
        frame_ms));
  }
  if (elapsed_ms < 0) throw InvalidArgument("elapsed_ms must be >= 0");
  DetectionResult r;
  r.word_count = static_cast<int>(elapsed_ms / avg_word_ms);
  r.word_end_frames.reserve(r.word_count);
  for (int64_t j = 1; j <= r.word_count; ++j) {
    const int64_t end_ms = j * avg_word_ms;
    r.word_end_frames.push_back(
        static_cast<int>((end_ms + frame_ms - 1) / frame_ms - 1));
  }
  return r;
}

DetectionResult AdaptiveWordCount(std::span<const AlignedToken> tokens,
                                  SubwordConvention convention) {
  DetectionResult r;
  bool pending = false;
  int pending_end = 0;
  for (const AlignedToken& t : tokens) {
    if (IsEndOfSequence(t.token)) break;
    const SubwordToken piece{t.token.surface, convention};
    if (convention == SubwordConvention::kBpeSuffix) {
      if (EndsWord(piece)) {
        r.word_end_frames.push_back(t.last_frame);
        pending = false;
      } else {
        pending = true;
      }
    } else {
      if (BeginsWord(piece) && pending) r.word_end_frames.push_back(pending_end);
      pending = true;
      pending_end = t.last_frame;
    }
  }
  r.word_count = static_cast<int>(r.word_end_frames.size());
  return r;
}

}  // namespace simulst
