// Copyright (c) 2026 The prosodyc Authors
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

#include "prosody/mandarin.h"

#include <gtest/gtest.h>

#include <functional>

#include "goldens.h"
#include "oracles.h"
#include "prosody/error.h"
#include "test_support.h"

namespace prosody {
namespace {

const RuleSet& Cmn() { return testing::StockRules(Language::kCmn); }

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIoError;
}

PitchedSyllable Pitched(std::string_view pinyin, int n = kDefaultSubdivisions) {
  auto specs = ParsePinyin(pinyin);
  EXPECT_EQ(specs.size(), 1u);
  return AssignPitch(ExpandSyllable(specs.at(0), Cmn()), n);
}

TEST(ToneContour, TableRowsExact) {
  for (const auto& g : testing::ToneGoldens()) {
    ToneContour c = ToneContourFor(g.tone);
    EXPECT_EQ(c.tone, g.tone);
    EXPECT_EQ(c.points, g.points) << g.tone;
    EXPECT_EQ(c.pitches, g.pitches) << g.tone;
    for (std::size_t i = 0; i < c.points.size(); ++i) {
      EXPECT_EQ(c.pitches[i], c.points[i] - 3);
    }
  }
}

TEST(ToneContour, RejectsOutOfRange) {
  for (int t : {0, 6, -1}) {
    EXPECT_EQ(CodeOf([&] { ToneContourFor(t); }), ErrorCode::kInvalidTone);
  }
}

TEST(ParsePinyin, Tian2) {
  auto s = ParsePinyin("tian2");
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].initial, "t");
  EXPECT_EQ(s[0].rime, "ian");
  EXPECT_EQ(s[0].tone, 2);
  EXPECT_TRUE(s[0].word_initial);
  EXPECT_FALSE(s[0].special);
}

TEST(ParsePinyin, NeutralAndSpecial) {
  auto ma = ParsePinyin("ma5");
  EXPECT_EQ(ma[0].initial, "m");
  EXPECT_EQ(ma[0].rime, "a");
  EXPECT_EQ(ma[0].tone, 5);
  EXPECT_EQ(ParsePinyin("ma")[0].tone, 5);
  for (const char* p : {"chi1", "zhi1", "shi4", "ri4", "zi3", "ci2", "si1"}) {
    auto s = ParsePinyin(p);
    EXPECT_TRUE(s[0].special) << p;
    EXPECT_EQ(s[0].rime, "i") << p;
  }
  EXPECT_FALSE(ParsePinyin("ji1")[0].special);
  EXPECT_FALSE(ParsePinyin("li3")[0].special);
}

TEST(ParsePinyin, OrthographicGlides) {
  struct Case {
    const char* in;
    const char* rime;
  };
  for (auto [in, rime] : {Case{"ya1", "ia"}, Case{"you3", "iu"}, Case{"yi1", "i"},
                          Case{"yin1", "in"}, Case{"ying1", "ing"},
                          Case{"wei4", "ui"}, Case{"wen2", "un"}, Case{"wu3", "u"},
                          Case{"yu2", "v"}, Case{"yue4", "ve"}, Case{"yuan2", "van"},
                          Case{"yun2", "vn"}}) {
    auto s = ParsePinyin(in);
    ASSERT_EQ(s.size(), 1u) << in;
    EXPECT_EQ(s[0].initial, "") << in;
    EXPECT_EQ(s[0].rime, rime) << in;
  }
  EXPECT_EQ(ParsePinyin("ju4")[0].rime, "v");
  EXPECT_EQ(ParsePinyin("xue2")[0].rime, "ve");
  EXPECT_EQ(ParsePinyin("lv4")[0].rime, "v");
  EXPECT_EQ(ParsePinyin("lüe4")[0].rime, "ve");
}

TEST(ParsePinyin, WordsAndSplitting) {
  auto s = ParsePinyin("ni3hao3 ma5");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_TRUE(s[0].word_initial);
  EXPECT_FALSE(s[1].word_initial);
  EXPECT_TRUE(s[2].word_initial);
  EXPECT_EQ(s[2].word_index, 1);
  EXPECT_EQ(s[2].index, 2);

  auto py = ParsePinyin("pengyou3");
  ASSERT_EQ(py.size(), 2u);
  EXPECT_EQ(py[0].initial, "p");
  EXPECT_EQ(py[0].rime, "eng");
  EXPECT_EQ(py[0].tone, 5);
  EXPECT_EQ(py[1].rime, "iu");
  EXPECT_EQ(py[1].tone, 3);

  auto xian = ParsePinyin("xi1'an1");
  ASSERT_EQ(xian.size(), 2u);
  EXPECT_EQ(xian[1].initial, "");
  EXPECT_EQ(xian[1].rime, "an");
}

TEST(ParsePinyin, Errors) {
  EXPECT_EQ(CodeOf([] { ParsePinyin("ma7"); }), ErrorCode::kInvalidToneDigit);
  EXPECT_EQ(CodeOf([] { ParsePinyin("ma0"); }), ErrorCode::kInvalidToneDigit);
  EXPECT_EQ(CodeOf([] { ParsePinyin("qqq1"); }), ErrorCode::kUnparsableSyllable);
  EXPECT_EQ(CodeOf([] { ParsePinyin("2"); }), ErrorCode::kUnparsableSyllable);
  EXPECT_TRUE(ParsePinyin("").empty());
}

TEST(ExpandSyllable, Tian2Durations) {
  auto s = ExpandSyllable(ParsePinyin("tian2")[0], Cmn());
  ASSERT_EQ(s.phones.size(), 5u);
  for (std::size_t i = 0; i < 5; ++i) {
    EXPECT_EQ(s.phones[i].symbol, testing::Tian2Phones()[i]);
    EXPECT_EQ(s.phones[i].duration_factor, testing::Tian2Durations()[i]);
    EXPECT_EQ(s.phones[i].syllable_id, 0);
  }
  EXPECT_EQ(s.nucleus_index, 3u);
}

TEST(ExpandSyllable, ZeroInitialPause) {
  auto s = ExpandSyllable(ParsePinyin("ai4")[0], Cmn());
  ASSERT_EQ(s.phones.size(), 2u);
  EXPECT_EQ(s.phones[0].symbol, ",");
  EXPECT_EQ(s.phones[0].duration_factor, 0.2);
  EXPECT_EQ(s.phones[1].symbol, "AY");
  EXPECT_EQ(s.phones[1].duration_factor, 1.0);
  EXPECT_EQ(s.nucleus_index, 1u);
}

TEST(ExpandSyllable, RetroflexInitialWithApicalRime) {
  auto s = ExpandSyllable(ParsePinyin("zhi1")[0], Cmn());
  std::vector<std::string> sym;
  std::vector<double> d;
  for (const auto& p : s.phones) {
    sym.push_back(p.symbol);
    d.push_back(p.duration_factor);
  }
  EXPECT_EQ(sym, (std::vector<std::string>{"T", "SH", "Z", "UH"}));
  EXPECT_EQ(d, (std::vector<double>{1, 0, 0.5, 0.7}));
}

TEST(ExpandSyllable, NeutralToneHalvesEverything) {
  auto toned = ExpandSyllable(ParsePinyin("ma1")[0], Cmn());
  auto neutral = ExpandSyllable(ParsePinyin("ma5")[0], Cmn());
  ASSERT_EQ(toned.phones.size(), neutral.phones.size());
  for (std::size_t i = 0; i < toned.phones.size(); ++i) {
    EXPECT_EQ(neutral.phones[i].symbol, toned.phones[i].symbol);
    EXPECT_EQ(neutral.phones[i].duration_factor,
              toned.phones[i].duration_factor / 2);
  }
}

TEST(AssignPitch, Tian2Table) {
  PitchedSyllable p = Pitched("tian2");
  std::vector<double> flat;
  for (const auto& ph : p.phones) {
    EXPECT_EQ(ph.pitches.size(), static_cast<std::size_t>(ph.repeat));
    flat.insert(flat.end(), ph.pitches.begin(), ph.pitches.end());
  }
  ASSERT_EQ(flat.size(), testing::Tian2Pitches().size());
  for (std::size_t i = 0; i < flat.size(); ++i) {
    EXPECT_NEAR(flat[i], testing::Tian2Pitches()[i], testing::kTian2PitchTolerance);
  }
  EXPECT_EQ(p.phones[3].repeat, 3);
  EXPECT_EQ(p.phones[3].pitches.back(), 1.0);  // contour end, exactly
}

TEST(AssignPitch, MatchesIndependentSampler) {
  // One syllable per tone, nucleus samples against a long-hand interpolator.
  const char* syllables[] = {"ma1", "ma2", "ma3", "ma4", "ma5"};
  for (int tone = 1; tone <= 5; ++tone) {
    for (int n = 2; n <= 8; ++n) {
      PitchedSyllable p = Pitched(syllables[tone - 1], n);
      const auto& nucleus = p.phones[p.spec.nucleus_index];
      ASSERT_EQ(nucleus.repeat, n);
      auto want = testing::OracleToneSamples(tone, n);
      for (int k = 0; k < n; ++k) {
        EXPECT_NEAR(nucleus.pitches[k], want[k], 1e-12) << tone << " n=" << n;
      }
    }
  }
}

TEST(AssignPitch, ThirdToneFourSamples) {
  PitchedSyllable p = Pitched("ma3", 4);
  const auto& v = p.phones[p.spec.nucleus_index].pitches;
  EXPECT_EQ(v, (std::vector<double>{-1.5, -2, -1.5, -1}));
}

TEST(AssignPitch, FlatFirstTone) {
  PitchedSyllable p = Pitched("tian1", 5);
  for (const auto& ph : p.phones) {
    for (double v : ph.pitches) EXPECT_EQ(v, 2.0);
  }
}

TEST(AssignPitch, PausesCarryZero) {
  PitchedSyllable p = Pitched("ai4");
  EXPECT_EQ(p.phones[0].phone.symbol, ",");
  EXPECT_EQ(p.phones[0].pitches, std::vector<double>{0.0});
}

TEST(AssignPitch, RejectsTooFewSubdivisions) {
  auto spec = ExpandSyllable(ParsePinyin("ma1")[0], Cmn());
  EXPECT_EQ(CodeOf([&] { AssignPitch(spec, 1); }), ErrorCode::kInvalidSubdivisions);
}

std::vector<PitchedSyllable> Unsmoothed(std::string_view pinyin) {
  MandarinOptions o;
  o.smooth = false;
  return PlanSyllables(pinyin, Cmn(), o);
}

double FirstPitch(const PitchedSyllable& s) {
  for (const auto& p : s.phones) {
    if (p.phone.symbol != ",") return p.pitches.front();
  }
  return 0;
}
double LastPitch(const PitchedSyllable& s) {
  for (auto it = s.phones.rbegin(); it != s.phones.rend(); ++it) {
    if (it->phone.symbol != ",") return it->pitches.back();
  }
  return 0;
}

TEST(SmoothBoundaries, FourthThenFirstTone) {
  // ma4 ends at -1 and ma1 starts at +2: a 3.0 gap shrinks symmetrically.
  auto out = SmoothBoundaries(Unsmoothed("ma4ma1"), 2.0);
  EXPECT_DOUBLE_EQ(LastPitch(out[0]), -0.5);
  EXPECT_DOUBLE_EQ(FirstPitch(out[1]), 1.5);
}

TEST(SmoothBoundaries, SmallGapsAndSingleSyllableUnchanged) {
  auto one = Unsmoothed("tian2");
  auto s1 = SmoothBoundaries(one, 2.0);
  for (std::size_t i = 0; i < one[0].phones.size(); ++i) {
    EXPECT_EQ(s1[0].phones[i], one[0].phones[i]);
  }
  auto two = Unsmoothed("ma2ma1");  // +1 -> +2
  auto s2 = SmoothBoundaries(two, 2.0);
  for (std::size_t k = 0; k < 2; ++k) {
    for (std::size_t i = 0; i < two[k].phones.size(); ++i) {
      EXPECT_EQ(s2[k].phones[i], two[k].phones[i]);
    }
  }
}

TEST(SmoothBoundaries, Idempotent) {
  for (const char* text : {"ma4ma1", "ni3hao3 ma5", "tian1 di4 ren2 wo3",
                           "shi4 yi1 ge4 hao3 ren2", "ma3ma1ma4ma1ma3"}) {
    auto once = SmoothBoundaries(Unsmoothed(text), 2.0);
    auto twice = SmoothBoundaries(once, 2.0);
    ASSERT_EQ(once.size(), twice.size());
    for (std::size_t k = 0; k < once.size(); ++k) {
      for (std::size_t i = 0; i < once[k].phones.size(); ++i) {
        EXPECT_EQ(once[k].phones[i].pitches, twice[k].phones[i].pitches) << text;
      }
    }
  }
}

TEST(SmoothBoundaries, RejectsNonPositiveJump) {
  EXPECT_EQ(CodeOf([] { SmoothBoundaries(Unsmoothed("ma1"), 0.0); }),
            ErrorCode::kInvalidPolicy);
}

TEST(InsertWordPauses, BetweenWordsOnly) {
  auto flat = CompileMandarin("ni3hao3 ma5", Cmn());
  int pauses_at_boundary = 0;
  for (const auto& p : flat) {
    if (p.phone.symbol == "," && p.phone.duration_factor == kDefaultWordPause &&
        !p.phone.syllable_id.has_value()) {
      ++pauses_at_boundary;
    }
  }
  EXPECT_EQ(pauses_at_boundary, 1);
  EXPECT_EQ(flat.front().phone.symbol, "N");

  auto one = InsertWordPauses(Unsmoothed("ni3hao3"), 0.3);
  for (const auto& p : one) EXPECT_TRUE(p.phone.syllable_id.has_value());
  EXPECT_TRUE(InsertWordPauses({}, 0.3).empty());
}

TEST(PlanSyllables, EmptyInput) {
  EXPECT_EQ(CodeOf([] { PlanSyllables("   ", Cmn()); }), ErrorCode::kEmptyInput);
}

TEST(Coverage, EveryInitialAndRimeExpands) {
  for (const auto& rime : PinyinRimes()) {
    SyllableSpec s;
    s.rime = rime;
    s.tone = 1;
    EXPECT_NO_THROW(ExpandSyllable(s, Cmn())) << rime;
    for (const auto& initial : PinyinInitials()) {
      s.initial = initial;
      EXPECT_NO_THROW(ExpandSyllable(s, Cmn())) << initial << rime;
    }
  }
}

}  // namespace
}  // namespace prosody
