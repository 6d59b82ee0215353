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

#include "simulst/metrics/bleu.h"

#include <cmath>
#include <regex>
#include <unordered_map>

#include "fmt/format.h"
#include "simulst/core/subword.h"
#include "simulst/error.h"

namespace simulst {

namespace {

void ReplaceAll(std::string& s, std::string_view from, std::string_view to) {
  size_t pos = 0;
  while ((pos = s.find(from, pos)) != std::string::npos) {
    s.replace(pos, from.size(), to);
    pos += to.size();
  }
}

struct TokenizerRules {
  std::regex symbols{R"(([{-~\[-` -&(-+:-@/]))"};
  std::regex period_comma_after_non_digit{R"(([^0-9])([.,]))"};
  std::regex period_comma_before_non_digit{R"(([.,])([^0-9]))"};
  std::regex dash_after_digit{R"(([0-9])(-))"};
};

const TokenizerRules& Rules() {
  static const TokenizerRules rules;
  return rules;
}

using NgramCounts = std::unordered_map<std::string, int64_t>;

std::array<NgramCounts, kBleuOrder> CountNgrams(const std::vector<std::string>& toks) {
  std::array<NgramCounts, kBleuOrder> counts;
  for (int n = 1; n <= kBleuOrder; ++n) {
    for (size_t i = 0; i + n <= toks.size(); ++i) {
      std::string key = toks[i];
      for (int j = 1; j < n; ++j) {
        key += ' ';
        key += toks[i + j];
      }
      ++counts[n - 1][key];
    }
  }
  return counts;
}

}  // namespace

std::string Tokenize13a(std::string_view line) {
  std::string s(line);
  ReplaceAll(s, "<skipped>", "");
  ReplaceAll(s, "-\n", "");
  ReplaceAll(s, "\n", " ");
  if (s.find('&') != std::string::npos) {
    ReplaceAll(s, "&quot;", "\"");
    ReplaceAll(s, "&amp;", "&");
    ReplaceAll(s, "&lt;", "<");
    ReplaceAll(s, "&gt;", ">");
  }
  s = " " + s + " ";
  const TokenizerRules& r = Rules();
  s = std::regex_replace(s, r.symbols, " $1 ");
  s = std::regex_replace(s, r.period_comma_after_non_digit, "$1 $2 ");
  s = std::regex_replace(s, r.period_comma_before_non_digit, " $1 $2");
  s = std::regex_replace(s, r.dash_after_digit, "$1 $2 ");
  return JoinWords(SplitWhitespace(s));
}

BleuScore CorpusBleu(const std::vector<std::string>& hyps,
                     const std::vector<std::string>& refs) {
  if (hyps.size() != refs.size()) {
    throw InvalidArgument(fmt::format("{} hypotheses but {} references",
                                      hyps.size(), refs.size()));
  }
  if (hyps.empty()) throw InvalidArgument("empty corpus");

  BleuScore b;
  for (size_t s = 0; s < hyps.size(); ++s) {
    const auto hyp = SplitWhitespace(Tokenize13a(hyps[s]));
    const auto ref = SplitWhitespace(Tokenize13a(refs[s]));
    b.sys_len += static_cast<int64_t>(hyp.size());
    b.ref_len += static_cast<int64_t>(ref.size());
    const auto hyp_counts = CountNgrams(hyp);
    const auto ref_counts = CountNgrams(ref);
    for (int n = 0; n < kBleuOrder; ++n) {
      if (hyp.size() > static_cast<size_t>(n)) {
        b.total[n] += static_cast<int64_t>(hyp.size()) - n;
      }
      for (const auto& [gram, c] : hyp_counts[n]) {
        auto it = ref_counts[n].find(gram);
        if (it != ref_counts[n].end()) b.correct[n] += std::min(c, it->second);
      }
    }
  }

  // Exponential smoothing: the k-th order with no matches gets 1 / (2^k * total).
  double smooth = 1.0;
  bool defined = true;
  for (int n = 0; n < kBleuOrder; ++n) {
    if (b.total[n] == 0) {
      defined = false;
      break;
    }
    if (b.correct[n] == 0) {
      smooth *= 2.0;
      b.precisions[n] = 100.0 / (smooth * static_cast<double>(b.total[n]));
    } else {
      b.precisions[n] = 100.0 * static_cast<double>(b.correct[n]) /
                        static_cast<double>(b.total[n]);
    }
  }

  if (b.sys_len < b.ref_len) {
    b.brevity_penalty =
        b.sys_len > 0 ? std::exp(1.0 - static_cast<double>(b.ref_len) /
                                           static_cast<double>(b.sys_len))
                      : 0.0;
  } else {
    b.brevity_penalty = 1.0;
  }

  if (!defined) {
    b.score = 0.0;
    return b;
  }
  double log_sum = 0.0;
  for (double p : b.precisions) log_sum += std::log(p);
  b.score = b.brevity_penalty * std::exp(log_sum / kBleuOrder);
  return b;
}

double Bleu(const std::vector<std::vector<std::string>>& hyps,
            const std::vector<std::vector<std::string>>& refs) {
  std::vector<std::string> h, r;
  h.reserve(hyps.size());
  r.reserve(refs.size());
  for (const auto& x : hyps) h.push_back(JoinWords(x));
  for (const auto& x : refs) r.push_back(JoinWords(x));
  return CorpusBleu(h, r).score;
}

}  // namespace simulst
