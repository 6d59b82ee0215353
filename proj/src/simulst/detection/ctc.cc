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

#include "simulst/detection/ctc.h"

#include "fmt/format.h"
#include "simulst/core/argmax.h"
#include "simulst/error.h"

namespace simulst {

CtcPosterior::CtcPosterior(size_t vocab_size, int blank_id)
    : vocab_size_(vocab_size), blank_id_(blank_id) {
  if (vocab_size == 0 || blank_id < 0 ||
      static_cast<size_t>(blank_id) >= vocab_size) {
    throw InvalidArgument(fmt::format(
        "CTC blank id {} outside vocabulary of size {}", blank_id, vocab_size));
  }
}

void CtcPosterior::AppendFrame(std::span<const float> scores) {
  if (scores.size() != vocab_size_) {
    throw InvalidArgument(fmt::format("CTC frame has {} scores, expected {}",
                                      scores.size(), vocab_size_));
  }
  scores_.insert(scores_.end(), scores.begin(), scores.end());
}

std::vector<AlignedToken> CtcGreedyCollapse(const CtcPosterior& posterior,
                                            std::span<const std::string> vocabulary,
                                            SubwordConvention convention) {
  if (posterior.num_frames() > 0 && vocabulary.size() != posterior.vocab_size()) {
    throw InvalidArgument(fmt::format(
        "CTC vocabulary has {} entries but posterior has {} columns",
        vocabulary.size(), posterior.vocab_size()));
  }
  std::vector<AlignedToken> out;
  int prev = -1;
  for (size_t t = 0; t < posterior.num_frames(); ++t) {
    const int id = ArgmaxLowest(posterior.frame(t));
    if (id == posterior.blank_id()) {
      prev = id;
      continue;
    }
    if (id == prev) {
      out.back().last_frame = static_cast<int>(t);
    } else {
      out.push_back({{vocabulary[id], convention}, id, static_cast<int>(t)});
    }
    prev = id;
  }
  return out;
}

}  // namespace simulst
