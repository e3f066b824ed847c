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

#include "prosody/transfer_rules.h"

#include <gtest/gtest.h>

#include <functional>

#include "goldens.h"
#include "prosody/error.h"
#include "test_support.h"

namespace prosody {
namespace {

using testing::RulesFrom;
using testing::StockRules;

ErrorCode CodeOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kIoError;
}

class RuleGoldenTest : public ::testing::TestWithParam<testing::RuleGolden> {};

TEST_P(RuleGoldenTest, ProducesPrintedVectors) {
  const auto& g = GetParam();
  const RuleSet& rules = StockRules(g.language);
  auto phones = ApplyRules(testing::GoldenSymbols(g, rules), rules);
  EXPECT_EQ(testing::CompareGolden(g, phones), "");
}

INSTANTIATE_TEST_SUITE_P(
    PrintedExamples, RuleGoldenTest, ::testing::ValuesIn(testing::RuleGoldens()),
    [](const ::testing::TestParamInfo<testing::RuleGolden>& info) {
      std::string name;
      for (char c : info.param.name) {
        name += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
      }
      return name;
    });

TEST(LoadRules, InlineForms) {
  RuleSet r = RulesFrom(
      "# comment\n"
      "œ -> W:0 EH:1\n"
      "r -> R HH R D=[1,0,1]\n"
      "x -> HH:1:0.5:-1 K:0\n",
      Language::kDe);
  ASSERT_EQ(r.rules().size(), 3u);
  auto oe = ApplyRules(std::vector<Symbol>{Symbol::Segment("œ")}, r);
  ASSERT_EQ(oe.size(), 2u);
  EXPECT_EQ(oe[0].duration_factor, 0);
  EXPECT_EQ(oe[1].symbol, "EH");
  auto trill = ApplyRules(std::vector<Symbol>{Symbol::Segment("r")}, r);
  ASSERT_EQ(trill.size(), 3u);
  EXPECT_EQ(trill[1].symbol, "HH");
  EXPECT_EQ(trill[1].duration_factor, 0);
  auto x = ApplyRules(std::vector<Symbol>{Symbol::Segment("x")}, r);
  EXPECT_EQ(x[0].pitch_change, 0.5);
  EXPECT_EQ(x[0].energy_change, -1);
}

TEST(LoadRules, EmptyFileHasNoRules) {
  RuleSet r = RulesFrom("", Language::kEs);
  EXPECT_TRUE(r.empty());
  EXPECT_EQ(CodeOf([&] {
              ApplyRules(std::vector<Symbol>{Symbol::Segment("a")}, r);
            }),
            ErrorCode::kNoRuleMatches);
  EXPECT_TRUE(ApplyRules(std::vector<Symbol>{}, r).empty());
}

TEST(LoadRules, DefaultDurationAppliesToLaterRules) {
  RuleSet r = RulesFrom("a -> AA\n%default_duration 0.7\nb -> B\n", Language::kEs);
  auto out = ApplyRules(
      std::vector<Symbol>{Symbol::Segment("a"), Symbol::Segment("b")}, r);
  EXPECT_EQ(out[0].duration_factor, 1.0);
  EXPECT_EQ(out[1].duration_factor, 0.7);
}

TEST(LoadRules, Errors) {
  EXPECT_EQ(CodeOf([] { RulesFrom("a AA\n", Language::kDe); }),
            ErrorCode::kMalformedRule);
  EXPECT_EQ(CodeOf([] { RulesFrom("a -> QQ\n", Language::kDe); }),
            ErrorCode::kUnknownArpabet);
  EXPECT_EQ(CodeOf([] { RulesFrom("a -> AA B D=[1]\n", Language::kDe); }),
            ErrorCode::kLengthMismatch);
  EXPECT_EQ(CodeOf([] { RulesFrom("a -> AA:-1\n", Language::kDe); }),
            ErrorCode::kMalformedRule);
  try {
    RulesFrom("a -> AA\n\nb -> XX\n", Language::kDe);
  } catch (const Error& e) {
    EXPECT_NE(e.detail().find('3'), std::string::npos) << e.detail();
  }
}

TEST(LoadRules, PriorityOrdersFiring) {
  RuleSet r = RulesFrom("a -> AA\na -> AE @5\n", Language::kDe);
  auto out = ApplyRules(std::vector<Symbol>{Symbol::Segment("a")}, r);
  EXPECT_EQ(out[0].symbol, "AE");
}

TEST(TokenizeIpa, LengthStressBreaks) {
  const RuleSet& hu = StockRules(Language::kHu);
  auto k = TokenizeIpa("kː", hu);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0].text, "k");
  EXPECT_TRUE(k[0].long_mark);

  const RuleSet& es = StockRules(Language::kEs);
  auto oi = TokenizeIpa("o.ˈi", es);
  ASSERT_EQ(oi.size(), 3u);
  EXPECT_EQ(oi[0], Symbol::Segment("o"));
  EXPECT_EQ(oi[1], Symbol::Break());
  EXPECT_EQ(oi[2], Symbol::Segment("i", true));
  EXPECT_EQ(oi[2].Display(), "ˈi");

  EXPECT_TRUE(TokenizeIpa("", es).empty());
}

TEST(TokenizeIpa, SpacesBecomeOneBoundary) {
  const RuleSet& de = StockRules(Language::kDe);
  auto s = TokenizeIpa("a  ç", de);
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s[1].kind, SymbolKind::kWordBoundary);
  EXPECT_EQ(TokenizeIpa("a‖ç", de), s);
}

TEST(TokenizeIpa, LongestMatch) {
  const RuleSet& de = StockRules(Language::kDe);
  auto s = TokenizeIpa("aɪ", de);
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s[0].text, "aɪ");
}

TEST(TokenizeIpa, UnknownSymbolReportsPosition) {
  const RuleSet& es = StockRules(Language::kEs);
  try {
    TokenizeIpa("ab☃", es);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownIpaSymbol);
    EXPECT_NE(e.detail().find("U+2603"), std::string::npos) << e.detail();
    EXPECT_NE(e.detail().find('2'), std::string::npos) << e.detail();
  }
}

TEST(ApplyRules, UnmatchedBreaksEmitNothing) {
  const RuleSet& hu = StockRules(Language::kHu);
  auto with_break = ApplyRules(TokenizeIpa("u.b", hu), hu);
  auto without = ApplyRules(TokenizeIpa("ub", hu), hu);
  EXPECT_EQ(with_break, without);
}

TEST(ApplyRules, ContextRestrictsFiring) {
  // Intervocalic p doubles; word-initial p does not.
  const RuleSet& es = StockRules(Language::kEs);
  auto initial = ApplyRules(TokenizeIpa("pa", es), es);
  ASSERT_EQ(initial.size(), 2u);
  EXPECT_EQ(initial[0].symbol, "P");
}

TEST(ApplyRules, TracedFiringsPartitionTheInput) {
  const RuleSet& es = StockRules(Language::kEs);
  auto symbols = TokenizeIpa("la.ˈpo.ta ˈro.xo", es);
  RuleApplication app = ApplyRulesTraced(symbols, es);
  std::size_t src = 0, ph = 0;
  for (const auto& f : app.firings) {
    EXPECT_EQ(f.source_begin, src);
    EXPECT_GT(f.source_end, f.source_begin);
    EXPECT_EQ(f.phone_begin, ph);
    src = f.source_end;
    ph = f.phone_end;
  }
  EXPECT_EQ(src, symbols.size());
  EXPECT_EQ(ph, app.phones.size());
  EXPECT_EQ(app.phones, ApplyRules(symbols, es));
}

}  // namespace
}  // namespace prosody
