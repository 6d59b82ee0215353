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

#ifndef SIMULST_CORE_SEGMENT_H_
#define SIMULST_CORE_SEGMENT_H_

#include <cstdint>
#include <span>
#include <vector>

#include "simulst/core/types.h"

namespace simulst {

// A contiguous run of frames [begin, end) of one utterance.
struct FrameChunk {
  size_t begin = 0;
  size_t end = 0;
  std::span<const Frame> frames;
  int64_t duration_ms = 0;
};

// Splits the stream into step_ms chunks; only the last may be shorter.
// step_ms must be a positive multiple of the utterance frame duration. The
// chunks view into u.frames and are invalidated with it.
std::vector<FrameChunk> SegmentStream(const Utterance& u, int step_ms);

}  // namespace simulst

#endif  // SIMULST_CORE_SEGMENT_H_
