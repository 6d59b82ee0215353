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

#ifndef SIMULST_MODEL_ATTENTION_MASK_H_
#define SIMULST_MODEL_ATTENTION_MASK_H_

#include <cstdint>
#include <span>
#include <vector>

namespace simulst {

// Encoder-decoder attention mask for wait-k training. Every row is a prefix
// of the frames, so it is stored as the visible frame count per target word.
struct AttentionMask {
  size_t n_frames = 0;
  std::vector<size_t> visible;  // one entry per target position
  // Set when no word boundaries were known and every row was opened fully.
  bool boundaries_unknown = false;

  size_t n_target() const { return visible.size(); }
  bool allowed(size_t row, size_t frame) const { return frame < visible[row]; }
  std::vector<std::vector<bool>> ToDense() const;
};

// Target word i (0-based) may attend to frames up to and including the end of
// source word k_train + i (1-based), or to all frames once the detected words
// run out.
AttentionMask WaitkAttentionMask(std::span<const int> word_end_frames,
                                 int64_t k_train, size_t n_target,
                                 size_t n_frames);

}  // namespace simulst

#endif  // SIMULST_MODEL_ATTENTION_MASK_H_
