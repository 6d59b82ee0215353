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

#include "gtest/gtest.h"
#include "oracles/generators.h"
#include "simulst/core/subword.h"
#include "simulst/detection/ctc.h"
#include "simulst/detection/word_detection.h"
#include "simulst/error.h"

namespace simulst {
namespace {

const std::vector<std::string> kVocab = {"<blank>", "a", "b"};

CtcPosterior OneHotPosterior(const std::vector<int>& ids, size_t vocab = 3) {
  CtcPosterior p(vocab);
  for (int id : ids) {
    std::vector<float> row(vocab, 0.0f);
    row[id] = 1.0f;
    p.AppendFrame(row);
  }
  return p;
}

AlignedToken Tok(const std::string& s, int last_frame,
                 SubwordConvention conv = SubwordConvention::kBpeSuffix) {
  return {{s, conv}, 0, last_frame};
}

TEST(CtcTest, CollapsesRepeatsAndDropsBlanks) {
  const auto out = CtcGreedyCollapse(OneHotPosterior({1, 1, 0, 1, 2, 2}), kVocab,
                                     SubwordConvention::kBpeSuffix);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].token.surface, "a");
  EXPECT_EQ(out[1].token.surface, "a");
  EXPECT_EQ(out[2].token.surface, "b");
  EXPECT_EQ(out[0].last_frame, 1);
  EXPECT_EQ(out[1].last_frame, 3);
  EXPECT_EQ(out[2].last_frame, 5);
  EXPECT_EQ(out[2].id, 2);
}

TEST(CtcTest, AllBlankAndEmpty) {
  EXPECT_TRUE(CtcGreedyCollapse(OneHotPosterior({0, 0, 0}), kVocab,
                                SubwordConvention::kBpeSuffix)
                  .empty());
  EXPECT_TRUE(CtcGreedyCollapse(CtcPosterior(3), kVocab,
                                SubwordConvention::kBpeSuffix)
                  .empty());
}

TEST(CtcTest, TiesGoToLowestId) {
  CtcPosterior p(3);
  p.AppendFrame(std::vector<float>{0.2f, 0.4f, 0.4f});
  p.AppendFrame(std::vector<float>{0.5f, 0.5f, 0.0f});
  const auto out = CtcGreedyCollapse(p, kVocab, SubwordConvention::kBpeSuffix);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_EQ(out[0].id, 1);
  EXPECT_EQ(out[0].last_frame, 0);
}

TEST(CtcTest, RejectsBadShapes) {
  CtcPosterior p(3);
  EXPECT_THROW(p.AppendFrame(std::vector<float>{1.0f, 0.0f}), Error);
  const std::vector<std::string> short_vocab = {"<blank>", "a"};
  EXPECT_THROW(CtcGreedyCollapse(OneHotPosterior({1}), short_vocab,
                                 SubwordConvention::kBpeSuffix),
               Error);
}

TEST(FixedDetectionTest, FloorsElapsedTime) {
  const auto r = FixedWordCount(840, 280);
  EXPECT_EQ(r.word_count, 3);
  EXPECT_EQ(r.word_end_frames, (std::vector<int>{27, 55, 83}));
  EXPECT_EQ(FixedWordCount(839, 280).word_count, 2);
  EXPECT_EQ(FixedWordCount(0, 280).word_count, 0);
  EXPECT_EQ(FixedWordCount(1000, 300, 20).word_end_frames,
            (std::vector<int>{14, 29, 44}));
  EXPECT_THROW(FixedWordCount(100, 0), Error);
  EXPECT_THROW(FixedWordCount(-1, 280), Error);
}

TEST(AdaptiveDetectionTest, IgnoresTrailingPartialWord) {
  const std::vector<AlignedToken> toks = {Tok("th@@", 12), Tok("is", 20),
                                          Tok("ph@@", 55)};
  const auto r = AdaptiveWordCount(toks, SubwordConvention::kBpeSuffix);
  EXPECT_EQ(r.word_count, 1);
  EXPECT_EQ(r.word_end_frames, (std::vector<int>{20}));
}

TEST(AdaptiveDetectionTest, SentencePieceWordEndsBeforeNextStart) {
  const std::string sp(kSpWordStart);
  const auto conv = SubwordConvention::kSpPrefix;
  const std::vector<AlignedToken> toks = {Tok(sp + "th", 5, conv), Tok("is", 9, conv),
                                          Tok(sp + "is", 30, conv)};
  const auto r = AdaptiveWordCount(toks, conv);
  EXPECT_EQ(r.word_count, 1);
  EXPECT_EQ(r.word_end_frames, (std::vector<int>{9}));
  EXPECT_EQ(AdaptiveWordCount({}, conv).word_count, 0);
}

// Property: with exact CTC posteriors the adaptive count after t frames is the
// number of spoken words ending before t. Trailing silence leaves it unchanged
// while the fixed count keeps growing.
TEST(AdaptiveDetectionTest, MatchesWordSpansAndIgnoresSilence) {
  const int vocab = 30;
  LexiconMockModel model(testing::OneToOneLexicon(vocab));
  testing::Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto s = testing::RandomUtterance(rng, model, testing::Uniform(rng, 1, 12),
                                            vocab, 0.3);
    const auto& frames = s.utterance.frames;
    for (size_t t = 0; t <= frames.size(); t += 7) {
      const auto enc = model.EncodePrefix(std::span<const Frame>(frames).subspan(0, t));
      const auto toks = CtcGreedyCollapse(enc.ctc, model.source_vocabulary(),
                                          model.source_convention());
      const auto r = AdaptiveWordCount(toks, model.source_convention());
      int expected = 0;
      for (int end : s.word_end_frames) expected += end < static_cast<int>(t);
      ASSERT_EQ(r.word_count, expected) << "trial " << trial << " t " << t;
    }
    std::vector<Frame> padded = frames;
    const auto full = AdaptiveWordCount(
        CtcGreedyCollapse(model.EncodePrefix(padded).ctc, model.source_vocabulary(),
                          model.source_convention()),
        model.source_convention());
    padded.insert(padded.end(), 56, Frame{std::vector<float>(model.feature_dim(), 0.0f)});
    const auto more = AdaptiveWordCount(
        CtcGreedyCollapse(model.EncodePrefix(padded).ctc, model.source_vocabulary(),
                          model.source_convention()),
        model.source_convention());
    EXPECT_EQ(more, full);
    EXPECT_EQ(FixedWordCount(static_cast<int64_t>(padded.size()) * 10, 280).word_count,
              FixedWordCount(static_cast<int64_t>(frames.size()) * 10, 280).word_count + 2);
  }
}

}  // namespace
}  // namespace simulst
