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

#include "simulst/model/lexicon_mock.h"

#include <chrono>
#include <fstream>
#include <set>
#include <thread>

#include "fmt/format.h"
#include "simulst/core/subword.h"
#include "simulst/error.h"

namespace simulst {

using nlohmann::json;

namespace {

constexpr const char* kBlank = "<blank>";

}  // namespace

LexiconConfig LexiconConfig::FromJson(const json& j) {
  LexiconConfig c;
  try {
    if (!j.is_object() || !j.contains("lexicon")) {
      throw InvalidArgument("model config needs a 'lexicon' object");
    }
    c.lexicon = j.at("lexicon").get<std::map<std::string, std::vector<std::string>>>();
    c.eos_early = j.value("eos_early", false);
    c.compute_delay_ms = j.value("compute_delay_ms", 0.0);
    if (j.contains("segmentation")) {
      c.segmentation =
          j.at("segmentation").get<std::map<std::string, std::vector<std::string>>>();
    }
    const std::string conv = j.value("target_convention", std::string("bpe"));
    if (conv == "bpe") {
      c.target_convention = SubwordConvention::kBpeSuffix;
    } else if (conv == "sp") {
      c.target_convention = SubwordConvention::kSpPrefix;
    } else {
      throw InvalidArgument(fmt::format("unknown target_convention '{}'", conv));
    }
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, fmt::format("bad model config: {}", e.what()));
  }
  if (c.compute_delay_ms < 0) throw InvalidArgument("compute_delay_ms must be >= 0");
  return c;
}

LexiconConfig LexiconConfig::Load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::kIo,
                fmt::format("cannot open model config '{}'", path.string()));
  }
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParse, fmt::format("malformed model config '{}': {}",
                                               path.string(), e.what()));
  }
  return FromJson(j);
}

json LexiconConfig::ToJson() const {
  json j = {{"lexicon", lexicon},
            {"eos_early", eos_early},
            {"compute_delay_ms", compute_delay_ms},
            {"target_convention",
             target_convention == SubwordConvention::kBpeSuffix ? "bpe" : "sp"}};
  if (!segmentation.empty()) j["segmentation"] = segmentation;
  return j;
}

LexiconMockModel::LexiconMockModel(LexiconConfig config) : config_(std::move(config)) {
  source_vocab_.push_back(kBlank);
  for (const auto& [src, _] : config_.lexicon) {
    if (src.empty() || src.find(kBpeContinuation) != std::string::npos) {
      throw InvalidArgument(fmt::format("invalid source word '{}'", src));
    }
    source_ids_[src] = static_cast<int>(source_vocab_.size());
    source_vocab_.push_back(src);
  }

  auto pieces_of = [this](const std::string& word) {
    auto it = config_.segmentation.find(word);
    return it == config_.segmentation.end() ? std::vector<std::string>{word}
                                            : it->second;
  };

  std::set<std::string> surfaces;
  for (const auto& [_, targets] : config_.lexicon) {
    for (const auto& w : targets) {
      for (const auto& tok : MarkPieces(pieces_of(w), config_.target_convention)) {
        surfaces.insert(tok.surface);
      }
    }
  }
  target_vocab_.convention = config_.target_convention;
  target_vocab_.eos_id = 0;
  target_vocab_.tokens.push_back(std::string(kEndOfSequence));
  std::unordered_map<std::string, int> target_index;
  for (const auto& s : surfaces) {
    target_index[s] = static_cast<int>(target_vocab_.tokens.size());
    target_vocab_.tokens.push_back(s);
  }

  target_ids_.assign(source_vocab_.size(), {});
  target_word_start_.assign(source_vocab_.size(), {});
  for (const auto& [src, targets] : config_.lexicon) {
    const int sid = source_ids_.at(src);
    for (const auto& w : targets) {
      const auto toks = MarkPieces(pieces_of(w), config_.target_convention);
      for (size_t p = 0; p < toks.size(); ++p) {
        target_ids_[sid].push_back(target_index.at(toks[p].surface));
        target_word_start_[sid].push_back(p == 0);
      }
    }
  }
}

int LexiconMockModel::SourceWordId(const std::string& word) const {
  auto it = source_ids_.find(word);
  return it == source_ids_.end() ? -1 : it->second;
}

std::vector<float> LexiconMockModel::WordFeatures(int ctc_id, bool word_end) const {
  std::vector<float> f(feature_dim(), 0.0f);
  if (ctc_id > 0) {
    f[ctc_id] = 1.0f;
    f[0] = word_end ? 1.0f : 0.0f;
  }
  return f;
}

std::vector<std::string> LexiconMockModel::Translate(
    const std::vector<std::string>& source) const {
  std::vector<std::string> out;
  for (const auto& w : source) {
    auto it = config_.lexicon.find(w);
    if (it == config_.lexicon.end()) {
      throw Error(ErrorCode::kModel, fmt::format("word '{}' not in lexicon", w));
    }
    out.insert(out.end(), it->second.begin(), it->second.end());
  }
  return out;
}

EncoderOutput LexiconMockModel::EncodePrefix(std::span<const Frame> frames) {
  EncoderOutput out;
  out.ctc = CtcPosterior(source_vocab_.size(), 0);
  out.states.reserve(frames.size());
  std::vector<float> scores(source_vocab_.size());
  for (size_t t = 0; t < frames.size(); ++t) {
    const auto& f = frames[t].features;
    if (f.size() != feature_dim()) {
      throw Error(ErrorCode::kModel,
                  fmt::format("frame {} has dimension {}, mock expects {}", t,
                              f.size(), feature_dim()));
    }
    int word = 0;
    for (size_t i = 1; i < f.size(); ++i) {
      if (f[i] > 0.5f && (word == 0 || f[i] > f[word])) word = static_cast<int>(i);
    }
    std::fill(scores.begin(), scores.end(), 0.0f);
    const bool emits = word > 0 && f[0] > 0.5f;
    scores[emits ? word : 0] = 1.0f;
    out.ctc.AppendFrame(scores);
    out.states.push_back(f);
  }
  return out;
}

std::vector<float> LexiconMockModel::DecoderStep(const EncoderOutput& encoded,
                                                 std::span<const int> target_prefix) {
  decoder_calls_.fetch_add(1);
  if (config_.compute_delay_ms > 0) {
    std::this_thread::sleep_for(
        std::chrono::duration<double, std::milli>(config_.compute_delay_ms));
  }

  // Target tokens for every source word the CTC head has completed.
  const auto words = CtcGreedyCollapse(encoded.ctc, source_vocab_,
                                       SubwordConvention::kBpeSuffix);
  const size_t n = target_prefix.size();
  int next = -1;
  bool next_starts_word = false;
  size_t offset = 0;
  for (const auto& w : words) {
    const auto& ids = target_ids_[w.id];
    if (n < offset + ids.size()) {
      next = ids[n - offset];
      next_starts_word = target_word_start_[w.id][n - offset];
      break;
    }
    offset += ids.size();
  }

  std::vector<float> scores(target_vocab_.tokens.size(), 0.0f);
  const int eos = target_vocab_.eos_id;
  if (next < 0) {
    scores[eos] = 2.0f;
  } else {
    scores[next] = 2.0f;
    scores[eos] = (config_.eos_early && next_starts_word) ? 3.0f : 1.0f;
  }
  return scores;
}

ModelFactory LexiconMockFactory(LexiconConfig config) {
  auto shared = std::make_shared<const LexiconConfig>(std::move(config));
  return [shared]() -> std::unique_ptr<Model> {
    return std::make_unique<LexiconMockModel>(*shared);
  };
}

}  // namespace simulst
