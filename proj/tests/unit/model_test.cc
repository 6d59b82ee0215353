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

#include <filesystem>

#include "gtest/gtest.h"
#include "oracles/generators.h"
#include "simulst/core/subword.h"
#include "simulst/error.h"
#include "simulst/model/attention_mask.h"
#include "simulst/model/lexicon_mock.h"
#include "simulst/model/offline.h"
#include "simulst/model/synthetic.h"

namespace simulst {
namespace {

LexiconConfig AbConfig() {
  LexiconConfig c;
  c.lexicon = {{"a", {"x"}}, {"b", {"y", "z"}}};
  return c;
}

int TargetId(const LexiconMockModel& m, const std::string& surface) {
  const auto& toks = m.target_vocabulary().tokens;
  for (size_t i = 0; i < toks.size(); ++i) {
    if (toks[i] == surface) return static_cast<int>(i);
  }
  return -1;
}

TEST(LexiconMockTest, VocabulariesAreSorted) {
  LexiconMockModel m(AbConfig());
  EXPECT_EQ(m.source_vocabulary(), (std::vector<std::string>{"<blank>", "a", "b"}));
  EXPECT_EQ(m.target_vocabulary().tokens,
            (std::vector<std::string>{"</s>", "x", "y", "z"}));
  EXPECT_EQ(m.target_vocabulary().eos_id, 0);
  EXPECT_EQ(m.feature_dim(), 3u);
  EXPECT_EQ(m.SourceWordId("b"), 2);
  EXPECT_EQ(m.SourceWordId("c"), -1);
  EXPECT_EQ(m.lookahead_frames(), 0);
}

TEST(LexiconMockTest, EmitsOnFlaggedFrameOnly) {
  LexiconMockModel m(AbConfig());
  std::vector<Frame> frames = {{m.WordFeatures(1, false)},
                               {m.WordFeatures(1, true)},
                               {m.WordFeatures(0, false)},
                               {m.WordFeatures(2, true)}};
  const auto enc = m.EncodePrefix(frames);
  ASSERT_EQ(enc.ctc.num_frames(), 4u);
  EXPECT_EQ(enc.ctc.frame(0)[0], 1.0f);
  EXPECT_EQ(enc.ctc.frame(1)[1], 1.0f);
  EXPECT_EQ(enc.ctc.frame(2)[0], 1.0f);
  EXPECT_EQ(enc.ctc.frame(3)[2], 1.0f);
  frames.push_back({{1.0f, 0.0f}});
  EXPECT_THROW(m.EncodePrefix(frames), Error);
}

TEST(LexiconMockTest, DecoderFollowsCompletedWords) {
  LexiconMockModel m(AbConfig());
  const std::vector<Frame> frames = {{m.WordFeatures(2, true)}, {m.WordFeatures(1, true)}};
  const auto enc = m.EncodePrefix(frames);
  const int y = TargetId(m, "y"), z = TargetId(m, "z"), x = TargetId(m, "x");
  std::vector<int> prefix;
  for (int expected : {y, z, x}) {
    const auto s = m.DecoderStep(enc, prefix);
    ASSERT_EQ(s.size(), 4u);
    EXPECT_EQ(s[expected], 2.0f);
    EXPECT_EQ(s[0], 1.0f);
    prefix.push_back(expected);
  }
  const auto done = m.DecoderStep(enc, prefix);
  EXPECT_EQ(done[0], 2.0f);
  EXPECT_EQ(done[1] + done[2] + done[3], 0.0f);
  EXPECT_EQ(m.decoder_calls(), 4);
}

TEST(LexiconMockTest, EosEarlyBeatsWordStarts) {
  LexiconConfig c;
  c.lexicon = {{"a", {"this"}}};
  c.segmentation = {{"this", {"th", "is"}}};
  c.eos_early = true;
  LexiconMockModel m(c);
  const std::vector<Frame> frames = {{m.WordFeatures(1, true)}};
  const auto enc = m.EncodePrefix(frames);
  EXPECT_EQ(m.DecoderStep(enc, std::vector<int>{})[0], 3.0f);
  // Mid-word the next piece still wins.
  EXPECT_EQ(m.DecoderStep(enc, std::vector<int>{TargetId(m, "th@@")})[0], 1.0f);
}

TEST(LexiconMockTest, SegmentationAndSentencePiece) {
  LexiconConfig c;
  c.lexicon = {{"a", {"this"}}};
  c.segmentation = {{"this", {"th", "is"}}};
  c.target_convention = SubwordConvention::kSpPrefix;
  LexiconMockModel m(c);
  EXPECT_EQ(m.target_vocabulary().tokens,
            (std::vector<std::string>{"</s>", "is", std::string(kSpWordStart) + "th"}));
  c.target_convention = SubwordConvention::kBpeSuffix;
  LexiconMockModel b(c);
  EXPECT_EQ(b.target_vocabulary().tokens,
            (std::vector<std::string>{"</s>", "is", "th@@"}));
}

TEST(LexiconMockTest, ConfigJsonRoundTrip) {
  LexiconConfig c = AbConfig();
  c.eos_early = true;
  c.compute_delay_ms = 12.5;
  c.segmentation = {{"z", {"z"}}};
  c.target_convention = SubwordConvention::kSpPrefix;
  const LexiconConfig back = LexiconConfig::FromJson(c.ToJson());
  EXPECT_EQ(back.lexicon, c.lexicon);
  EXPECT_EQ(back.segmentation, c.segmentation);
  EXPECT_EQ(back.target_convention, c.target_convention);
  EXPECT_EQ(back.eos_early, c.eos_early);
  EXPECT_EQ(back.compute_delay_ms, c.compute_delay_ms);

  const auto loaded = LexiconConfig::Load(std::filesystem::path(SIMULST_TEST_DATA_DIR) /
                                          "tiny/model.json");
  EXPECT_EQ(loaded.lexicon.at("hello"), (std::vector<std::string>{"hallo"}));
  EXPECT_THROW(LexiconConfig::Load("/nonexistent/model.json"), Error);
  EXPECT_THROW(LexiconConfig::FromJson(nlohmann::json::parse(R"({"lexicon": 3})")),
               Error);
}

TEST(LexiconMockTest, RejectsBadSourceWords) {
  LexiconConfig c;
  c.lexicon = {{"ab@@", {"x"}}};
  EXPECT_THROW(LexiconMockModel{c}, Error);
}

// Property: encoding a prefix agrees with the full encoding on every frame.
TEST(LexiconMockTest, PrefixEncodingIsStable) {
  LexiconMockModel m(testing::OneToOneLexicon(20));
  testing::Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto s = testing::RandomUtterance(rng, m, 8, 20, 0.3);
    const auto& frames = s.utterance.frames;
    const auto full = m.EncodePrefix(frames);
    const size_t cut = testing::Uniform(rng, 0, static_cast<int>(frames.size()));
    const auto part = m.EncodePrefix(std::span<const Frame>(frames).subspan(0, cut));
    for (size_t t = 0; t < cut; ++t) {
      EXPECT_EQ(part.states[t], full.states[t]);
      const auto a = part.ctc.frame(t);
      const auto b = full.ctc.frame(t);
      EXPECT_TRUE(std::equal(a.begin(), a.end(), b.begin()));
    }
  }
}

TEST(AttentionMaskTest, RowsOpenThroughWordEnds) {
  const std::vector<int> ends = {9, 19, 29, 39, 49};
  const auto mask = WaitkAttentionMask(ends, 3, 4, 50);
  EXPECT_EQ(mask.visible, (std::vector<size_t>{30, 40, 50, 50}));
  EXPECT_FALSE(mask.boundaries_unknown);
  EXPECT_TRUE(mask.allowed(0, 29));
  EXPECT_FALSE(mask.allowed(0, 30));
  const auto dense = mask.ToDense();
  ASSERT_EQ(dense.size(), 4u);
  EXPECT_EQ(std::count(dense[1].begin(), dense[1].end(), true), 40);
}

TEST(AttentionMaskTest, InfiniteKAndUnknownBoundaries) {
  const std::vector<int> ends = {9, 19};
  for (bool b : {true}) {
    const auto all = WaitkAttentionMask(ends, kInfiniteK, 3, 20);
    for (const auto& row : all.ToDense()) {
      EXPECT_EQ(std::count(row.begin(), row.end(), b), 20);
    }
  }
  const auto none = WaitkAttentionMask({}, 2, 3, 20);
  EXPECT_TRUE(none.boundaries_unknown);
  EXPECT_EQ(none.visible, (std::vector<size_t>{20, 20, 20}));
}

TEST(AttentionMaskTest, RejectsBadInputs) {
  const std::vector<int> ends = {9, 19};
  EXPECT_THROW(WaitkAttentionMask(ends, 0, 3, 20), Error);
  EXPECT_THROW(WaitkAttentionMask(ends, 1, 0, 20), Error);
  EXPECT_THROW(WaitkAttentionMask(ends, 1, 3, 19), Error);
  const std::vector<int> unsorted = {9, 9};
  EXPECT_THROW(WaitkAttentionMask(unsorted, 1, 3, 20), Error);
}

// Property: rows are nested prefixes and never shrink as k grows.
TEST(AttentionMaskTest, RowsAreNestedPrefixes) {
  testing::Rng rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const size_t n_frames = testing::Uniform(rng, 1, 200);
    std::vector<int> ends;
    for (int f = 0; f < static_cast<int>(n_frames); ++f) {
      if (testing::Uniform(rng, 0, 9) == 0) ends.push_back(f);
    }
    const size_t n_target = testing::Uniform(rng, 1, 15);
    const int64_t k = testing::Uniform(rng, 1, 8);
    const auto m = WaitkAttentionMask(ends, k, n_target, n_frames);
    const auto wider = WaitkAttentionMask(ends, k + 1, n_target, n_frames);
    const auto dense = m.ToDense();
    for (size_t i = 0; i < n_target; ++i) {
      EXPECT_GE(m.visible[i], 1u);
      EXPECT_LE(m.visible[i], n_frames);
      EXPECT_GE(wider.visible[i], m.visible[i]);
      if (i > 0) {
        EXPECT_GE(m.visible[i], m.visible[i - 1]);
      }
      for (size_t t = 0; t < n_frames; ++t) {
        EXPECT_EQ(dense[i][t], t < m.visible[i]);
      }
    }
  }
}

TEST(SyntheticTest, WordEndsAndTexts) {
  LexiconConfig c;
  c.lexicon = {{"a", {"x"}}, {"b", {"y"}}};
  LexiconMockModel m(c);
  const auto s = BuildSyntheticUtterance({"a", "b"}, {280, 280}, m);
  EXPECT_EQ(s.word_end_frames, (std::vector<int>{27, 55}));
  EXPECT_EQ(s.utterance.frames.size(), 56u);
  EXPECT_EQ(s.utterance.reference, (std::vector<std::string>{"x", "y"}));
  EXPECT_EQ(*s.utterance.transcript, (std::vector<std::string>{"a", "b"}));
  EXPECT_EQ(s.utterance.frames[27].features, m.WordFeatures(1, true));
  EXPECT_EQ(s.utterance.frames[26].features, m.WordFeatures(1, false));

  const auto p = BuildSyntheticUtterance({"a", kSilenceWord, "b"}, {100, 50, 30}, m);
  EXPECT_EQ(p.word_end_frames, (std::vector<int>{9, 17}));
  EXPECT_EQ(*p.utterance.transcript, (std::vector<std::string>{"a", "b"}));

  EXPECT_THROW(BuildSyntheticUtterance({"a"}, {280, 280}, m), Error);
  EXPECT_THROW(BuildSyntheticUtterance({"a"}, {285}, m), Error);
  EXPECT_THROW(BuildSyntheticUtterance({"q"}, {280}, m), Error);
}

TEST(OfflineTest, TranslatesWholeUtterance) {
  LexiconMockModel m(AbConfig());
  const auto s = BuildSyntheticUtterance({"b", "a"}, {100, 100}, m);
  const auto r = OfflineGreedyTranslate(m, s.utterance, 10);
  EXPECT_FALSE(r.truncated);
  EXPECT_EQ(r.hypothesis.words, (std::vector<std::string>{"y", "z", "x"}));
  EXPECT_EQ(r.hypothesis.tokens.size(), 3u);

  const auto cut = OfflineGreedyTranslate(m, s.utterance, 2);
  EXPECT_TRUE(cut.truncated);
  EXPECT_EQ(cut.hypothesis.words, (std::vector<std::string>{"y", "z"}));
}

TEST(OfflineTest, EmptyUtteranceGivesEmptyHypothesis) {
  LexiconMockModel m(AbConfig());
  Utterance u;
  u.reference = {"x"};
  const auto r = OfflineGreedyTranslate(m, u, 10);
  EXPECT_TRUE(r.hypothesis.words.empty());
  EXPECT_FALSE(r.truncated);
}

}  // namespace
}  // namespace simulst
