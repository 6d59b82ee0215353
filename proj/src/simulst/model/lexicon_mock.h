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

#ifndef SIMULST_MODEL_LEXICON_MOCK_H_
#define SIMULST_MODEL_LEXICON_MOCK_H_

#include <atomic>
#include <filesystem>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"
#include "simulst/model/model.h"

namespace simulst {

// JSON: {"lexicon": {"src_word": ["tgt", ...]}, "eos_early": bool,
//        "compute_delay_ms": float,
//        "target_convention": "bpe" | "sp",            (optional)
//        "segmentation": {"tgt_word": ["piece", ...]}}  (optional)
struct LexiconConfig {
  std::map<std::string, std::vector<std::string>> lexicon;
  std::map<std::string, std::vector<std::string>> segmentation;
  SubwordConvention target_convention = SubwordConvention::kBpeSuffix;
  bool eos_early = false;
  double compute_delay_ms = 0.0;

  static LexiconConfig FromJson(const nlohmann::json& j);
  static LexiconConfig Load(const std::filesystem::path& path);
  nlohmann::json ToJson() const;
};

// Deterministic oracle model. Source words are encoded one-hot, one run of
// frames per word, with a word-end flag on the run's last frame:
//   features = [word_end, onehot(word_0), ..., onehot(word_{n-1})]
// All-zero frames are silence. The CTC head emits the word on its flagged
// frame and blank elsewhere, so word boundaries are known exactly. The decoder
// translates every source word completed so far through the lexicon and
// proposes EOS once that translation is exhausted.
class LexiconMockModel : public Model {
 public:
  explicit LexiconMockModel(LexiconConfig config);

  EncoderOutput EncodePrefix(std::span<const Frame> frames) override;
  std::vector<float> DecoderStep(const EncoderOutput& encoded,
                                 std::span<const int> target_prefix) override;

  const std::vector<std::string>& source_vocabulary() const override {
    return source_vocab_;
  }
  SubwordConvention source_convention() const override {
    return SubwordConvention::kBpeSuffix;
  }
  const TargetVocabulary& target_vocabulary() const override {
    return target_vocab_;
  }

  const LexiconConfig& config() const { return config_; }
  size_t feature_dim() const { return source_vocab_.size(); }
  // CTC id of a source word (>= 1), or -1 if not in the lexicon.
  int SourceWordId(const std::string& word) const;
  std::vector<float> WordFeatures(int ctc_id, bool word_end) const;
  std::vector<std::string> Translate(const std::vector<std::string>& source) const;

  int64_t decoder_calls() const { return decoder_calls_.load(); }

 private:
  LexiconConfig config_;
  std::vector<std::string> source_vocab_;  // [0] = blank
  std::unordered_map<std::string, int> source_ids_;
  TargetVocabulary target_vocab_;
  // Per CTC id: target token ids and whether each opens a target word.
  std::vector<std::vector<int>> target_ids_;
  std::vector<std::vector<bool>> target_word_start_;
  std::atomic<int64_t> decoder_calls_{0};
};

ModelFactory LexiconMockFactory(LexiconConfig config);

}  // namespace simulst

#endif  // SIMULST_MODEL_LEXICON_MOCK_H_
