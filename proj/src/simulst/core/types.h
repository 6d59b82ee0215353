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

#ifndef SIMULST_CORE_TYPES_H_
#define SIMULST_CORE_TYPES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace simulst {

constexpr int kDefaultFrameMs = 10;

struct Frame {
  std::vector<float> features;
  int duration_ms = kDefaultFrameMs;
};

// One source stream plus its texts. All frames share dimension and duration;
// Validate() enforces that, and duration_ms() is |X| in the latency formulas.
struct Utterance {
  std::string id;
  std::vector<Frame> frames;
  int frame_ms = kDefaultFrameMs;
  std::optional<std::vector<std::string>> transcript;
  std::vector<std::string> reference;

  int64_t duration_ms() const {
    return static_cast<int64_t>(frames.size()) * frame_ms;
  }
  size_t feature_dim() const {
    return frames.empty() ? 0 : frames.front().features.size();
  }

  // Throws InvalidArgument on mixed frame durations or dimensions.
  void Validate() const;
};

enum class SubwordConvention {
  kBpeSuffix,  // "th@@ is": a trailing "@@" marks a non-final piece
  kSpPrefix,   // "▁th is": a leading "▁" marks a word-initial piece
};

struct SubwordToken {
  std::string surface;
  SubwordConvention convention = SubwordConvention::kBpeSuffix;

  bool operator==(const SubwordToken&) const = default;
};

struct Hypothesis {
  std::vector<SubwordToken> tokens;
  std::vector<std::string> words;
};

}  // namespace simulst

#endif  // SIMULST_CORE_TYPES_H_
