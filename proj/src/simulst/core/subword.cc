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

#include "simulst/core/subword.h"

#include <sstream>

namespace simulst {

namespace {

bool HasSuffix(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() &&
         s.substr(s.size() - suffix.size()) == suffix;
}

bool HasPrefix(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

}  // namespace

bool IsEndOfSequence(const SubwordToken& token) {
  return token.surface == kEndOfSequence;
}

bool EndsWord(const SubwordToken& token) {
  return !HasSuffix(token.surface, kBpeContinuation);
}

bool BeginsWord(const SubwordToken& token) {
  return HasPrefix(token.surface, kSpWordStart);
}

std::string StripMarker(const SubwordToken& token) {
  std::string_view s = token.surface;
  if (token.convention == SubwordConvention::kBpeSuffix) {
    if (HasSuffix(s, kBpeContinuation)) s.remove_suffix(kBpeContinuation.size());
  } else if (HasPrefix(s, kSpWordStart)) {
    s.remove_prefix(kSpWordStart.size());
  }
  return std::string(s);
}

WordSplit WordsFromSubwords(std::span<const SubwordToken> tokens,
                            SubwordConvention convention) {
  WordSplit out;
  std::string pending;
  bool has_pending = false;
  bool ended = false;
  size_t consumed = 0;
  size_t scan_end = tokens.size();

  for (size_t i = 0; i < tokens.size(); ++i) {
    const SubwordToken& tok = tokens[i];
    if (IsEndOfSequence(tok)) {
      ended = true;
      scan_end = i;
      break;
    }
    SubwordToken piece{tok.surface, convention};
    if (convention == SubwordConvention::kBpeSuffix) {
      pending += StripMarker(piece);
      has_pending = true;
      if (EndsWord(piece)) {
        out.complete_words.push_back(std::move(pending));
        pending.clear();
        has_pending = false;
        consumed = i + 1;
      }
    } else {
      if (BeginsWord(piece) && has_pending) {
        out.complete_words.push_back(std::move(pending));
        pending.clear();
        consumed = i;
      }
      pending += StripMarker(piece);
      has_pending = true;
    }
  }

  if (has_pending) {
    if (ended) {
      out.complete_words.push_back(std::move(pending));
      consumed = scan_end;
    } else {
      out.has_trailing_partial = true;
    }
  }
  out.tokens_in_complete_words = consumed;
  return out;
}

std::vector<SubwordToken> MarkPieces(const std::vector<std::string>& pieces,
                                     SubwordConvention convention) {
  std::vector<SubwordToken> out;
  out.reserve(pieces.size());
  for (size_t i = 0; i < pieces.size(); ++i) {
    std::string surface;
    if (convention == SubwordConvention::kBpeSuffix) {
      surface = pieces[i];
      if (i + 1 < pieces.size()) surface += kBpeContinuation;
    } else {
      if (i == 0) surface = kSpWordStart;
      surface += pieces[i];
    }
    out.push_back({std::move(surface), convention});
  }
  return out;
}

std::string JoinWords(const std::vector<std::string>& words) {
  std::string out;
  for (size_t i = 0; i < words.size(); ++i) {
    if (i) out += ' ';
    out += words[i];
  }
  return out;
}

std::vector<std::string> SplitWhitespace(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

}  // namespace simulst
