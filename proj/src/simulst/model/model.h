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

#ifndef SIMULST_MODEL_MODEL_H_
#define SIMULST_MODEL_MODEL_H_

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "simulst/core/types.h"
#include "simulst/detection/ctc.h"

namespace simulst {

// Stand-in for "k = infinity": large enough to never be reached, small enough
// that k + emitted cannot overflow.
constexpr int64_t kInfiniteK = std::numeric_limits<int64_t>::max() / 4;

// Guard for decoders that never close a word.
constexpr int kMaxTokensPerWord = 64;

struct EncoderOutput {
  std::vector<std::vector<float>> states;  // one row per received frame
  CtcPosterior ctc;
};

struct TargetVocabulary {
  std::vector<std::string> tokens;
  int eos_id = 0;
  SubwordConvention convention = SubwordConvention::kBpeSuffix;
};

// Incremental encoder-decoder contract the policy drives. EncodePrefix is
// called on the whole received prefix each time new audio arrives; its output
// on a longer prefix must agree with the shorter one except for the last
// lookahead_frames() states. DecoderStep returns one score per target
// vocabulary entry (EOS included) and must be deterministic.
//
// One evaluation thread at a time per instance; use a ModelFactory to give
// each worker its own.
class Model {
 public:
  virtual ~Model() = default;

  virtual int lookahead_frames() const { return 0; }

  virtual EncoderOutput EncodePrefix(std::span<const Frame> frames) = 0;
  virtual std::vector<float> DecoderStep(const EncoderOutput& encoded,
                                         std::span<const int> target_prefix) = 0;

  // CTC output columns, blank included.
  virtual const std::vector<std::string>& source_vocabulary() const = 0;
  virtual SubwordConvention source_convention() const = 0;
  virtual const TargetVocabulary& target_vocabulary() const = 0;
};

using ModelFactory = std::function<std::unique_ptr<Model>()>;

}  // namespace simulst

#endif  // SIMULST_MODEL_MODEL_H_
