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

#ifndef SIMULST_METRICS_BLEU_H_
#define SIMULST_METRICS_BLEU_H_

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace simulst {

constexpr int kBleuOrder = 4;

// The "13a" reference tokenizer (mteval-v13a): unescape a few SGML entities,
// then split punctuation and symbols off words. See docs/bleu.md.
std::string Tokenize13a(std::string_view line);

struct BleuScore {
  double score = 0.0;  // [0, 100]
  std::array<double, kBleuOrder> precisions{};
  std::array<int64_t, kBleuOrder> correct{};
  std::array<int64_t, kBleuOrder> total{};
  double brevity_penalty = 0.0;
  int64_t sys_len = 0;
  int64_t ref_len = 0;
};

// Corpus BLEU with one reference per segment: case-sensitive, 13a tokens,
// 4-gram precisions, exponential smoothing of zero-match orders, brevity
// penalty exp(1 - r/c) when c < r.
BleuScore CorpusBleu(const std::vector<std::string>& hyps,
                     const std::vector<std::string>& refs);

// Same over word sequences (joined with single spaces).
double Bleu(const std::vector<std::vector<std::string>>& hyps,
            const std::vector<std::vector<std::string>>& refs);

}  // namespace simulst

#endif  // SIMULST_METRICS_BLEU_H_
