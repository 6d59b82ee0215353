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

#include "simulst/core/segment.h"

#include <algorithm>

#include "fmt/format.h"
#include "simulst/error.h"

namespace simulst {

void Utterance::Validate() const {
  if (frame_ms <= 0) {
    throw InvalidArgument(fmt::format("utterance '{}': frame_ms must be > 0", id));
  }
  const size_t dim = feature_dim();
  for (size_t i = 0; i < frames.size(); ++i) {
    if (frames[i].duration_ms != frame_ms) {
      throw InvalidArgument(fmt::format(
          "utterance '{}': frame {} lasts {} ms, expected {} ms", id, i,
          frames[i].duration_ms, frame_ms));
    }
    if (frames[i].features.size() != dim) {
      throw InvalidArgument(fmt::format(
          "utterance '{}': frame {} has dimension {}, expected {}", id, i,
          frames[i].features.size(), dim));
    }
  }
}

std::vector<FrameChunk> SegmentStream(const Utterance& u, int step_ms) {
  if (step_ms <= 0) {
    throw InvalidArgument(fmt::format("step_ms must be > 0, got {}", step_ms));
  }
  if (u.frame_ms <= 0 || step_ms % u.frame_ms != 0) {
    throw InvalidArgument(fmt::format(
        "step_ms {} is not a multiple of the {} ms frame duration", step_ms,
        u.frame_ms));
  }
  const size_t frames_per_step = static_cast<size_t>(step_ms / u.frame_ms);
  std::vector<FrameChunk> chunks;
  chunks.reserve(u.frames.size() / frames_per_step + 1);
  for (size_t begin = 0; begin < u.frames.size(); begin += frames_per_step) {
    const size_t end = std::min(u.frames.size(), begin + frames_per_step);
    FrameChunk c;
    c.begin = begin;
    c.end = end;
    c.frames = std::span<const Frame>(u.frames).subspan(begin, end - begin);
    c.duration_ms = static_cast<int64_t>(end - begin) * u.frame_ms;
    chunks.push_back(c);
  }
  return chunks;
}

}  // namespace simulst
