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

#ifndef SIMULST_CORE_SUBWORD_H_
#define SIMULST_CORE_SUBWORD_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simulst/core/types.h"

namespace simulst {

inline constexpr std::string_view kBpeContinuation = "@@";
inline constexpr std::string_view kSpWordStart = "\xE2\x96\x81";  // U+2581
inline constexpr std::string_view kEndOfSequence = "</s>";

struct WordSplit {
  std::vector<std::string> complete_words;
  bool has_trailing_partial = false;
  // Number of leading tokens consumed by complete_words. Tokens past this
  // index form the trailing partial word (or the next word's start).
  size_t tokens_in_complete_words = 0;

  bool operator==(const WordSplit&) const = default;
};

// True if the token is the explicit end-of-sequence marker.
bool IsEndOfSequence(const SubwordToken& token);

// Under BPE_SUFFIX a token ends its word unless it carries "@@". Under
// SP_PREFIX the answer depends on the next token, so this only reports
// whether the token itself opens a word.
bool EndsWord(const SubwordToken& token);
bool BeginsWord(const SubwordToken& token);

// Surface with the convention's marker removed.
std::string StripMarker(const SubwordToken& token);

// Groups subword tokens into words. A word is complete under BPE_SUFFIX once a
// token without "@@" closes it; under SP_PREFIX once the next word-start token
// arrives. An end-of-sequence token completes any pending word and stops the
// scan.
WordSplit WordsFromSubwords(std::span<const SubwordToken> tokens,
                            SubwordConvention convention);

// Inverse helper used by mocks and tests: marks the pieces of one word per the
// convention.
std::vector<SubwordToken> MarkPieces(const std::vector<std::string>& pieces,
                                     SubwordConvention convention);

std::string JoinWords(const std::vector<std::string>& words);
std::vector<std::string> SplitWhitespace(std::string_view text);

}  // namespace simulst

#endif  // SIMULST_CORE_SUBWORD_H_
