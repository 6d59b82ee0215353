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

#ifndef SIMULST_DETECTION_CTC_H_
#define SIMULST_DETECTION_CTC_H_

#include <span>
#include <string>
#include <vector>

#include "simulst/core/types.h"

namespace simulst {

// Frame-level CTC scores over the source vocabulary (n_frames x V, row-major).
class CtcPosterior {
 public:
  CtcPosterior() = default;
  explicit CtcPosterior(size_t vocab_size, int blank_id = 0);

  void AppendFrame(std::span<const float> scores);

  size_t num_frames() const { return vocab_size_ ? scores_.size() / vocab_size_ : 0; }
  size_t vocab_size() const { return vocab_size_; }
  int blank_id() const { return blank_id_; }
  std::span<const float> frame(size_t t) const {
    return std::span<const float>(scores_).subspan(t * vocab_size_, vocab_size_);
  }

 private:
  size_t vocab_size_ = 0;
  int blank_id_ = 0;
  std::vector<float> scores_;
};

struct AlignedToken {
  SubwordToken token;
  int id = 0;
  int last_frame = 0;  // last frame of the collapsed run

  bool operator==(const AlignedToken&) const = default;
};

// Greedy CTC path: per-frame argmax (ties to the lowest id), repeats merged,
// blanks dropped. A repeat separated by a blank is kept as a new token.
std::vector<AlignedToken> CtcGreedyCollapse(const CtcPosterior& posterior,
                                            std::span<const std::string> vocabulary,
                                            SubwordConvention convention);

}  // namespace simulst

#endif  // SIMULST_DETECTION_CTC_H_
