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

#include "simulst/model/attention_mask.h"

#include "fmt/format.h"
#include "simulst/error.h"

namespace simulst {

std::vector<std::vector<bool>> AttentionMask::ToDense() const {
  std::vector<std::vector<bool>> out(visible.size(), std::vector<bool>(n_frames));
  for (size_t i = 0; i < visible.size(); ++i) {
    for (size_t t = 0; t < visible[i]; ++t) out[i][t] = true;
  }
  return out;
}

AttentionMask WaitkAttentionMask(std::span<const int> word_end_frames,
                                 int64_t k_train, size_t n_target,
                                 size_t n_frames) {
  if (k_train < 1) throw InvalidArgument("k_train must be >= 1");
  if (n_target == 0 || n_frames == 0) {
    throw InvalidArgument("mask needs at least one target position and frame");
  }
  for (size_t j = 0; j < word_end_frames.size(); ++j) {
    const int e = word_end_frames[j];
    if (e < 0 || static_cast<size_t>(e) >= n_frames ||
        (j > 0 && e <= word_end_frames[j - 1])) {
      throw InvalidArgument(fmt::format(
          "word end frames must be strictly increasing and < {}", n_frames));
    }
  }

  AttentionMask mask;
  mask.n_frames = n_frames;
  mask.visible.resize(n_target, n_frames);
  if (word_end_frames.empty()) {
    mask.boundaries_unknown = true;
    return mask;
  }
  const auto n_words = static_cast<int64_t>(word_end_frames.size());
  for (size_t i = 0; i < n_target; ++i) {
    // 0-based index of the last source word visible to target word i.
    const int64_t last = k_train - 1 + static_cast<int64_t>(i);
    if (last < n_words) mask.visible[i] = static_cast<size_t>(word_end_frames[last]) + 1;
  }
  return mask;
}

}  // namespace simulst
