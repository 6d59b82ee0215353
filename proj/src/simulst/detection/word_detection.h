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

#ifndef SIMULST_DETECTION_WORD_DETECTION_H_
#define SIMULST_DETECTION_WORD_DETECTION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "simulst/core/types.h"
#include "simulst/detection/ctc.h"

namespace simulst {

constexpr int kDefaultAvgWordMs = 280;

struct DetectionResult {
  int word_count = 0;
  std::vector<int> word_end_frames;  // strictly increasing, one per word

  bool operator==(const DetectionResult&) const = default;
};

// Fixed strategy: one word per avg_word_ms of received audio, whatever the
// audio contains. Word j (1-based) ends on the frame covering j*avg_word_ms.
DetectionResult FixedWordCount(int64_t elapsed_ms, int avg_word_ms,
                               int frame_ms = kDefaultFrameMs);

// Adaptive strategy: counts the complete words in the greedy CTC output. A
// trailing partial word is not counted.
DetectionResult AdaptiveWordCount(std::span<const AlignedToken> tokens,
                                  SubwordConvention convention);

}  // namespace simulst

#endif  // SIMULST_DETECTION_WORD_DETECTION_H_
