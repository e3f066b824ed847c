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

#include "prosody/mappings.h"

#include <gtest/gtest.h>

#include "prosody/arpabet.h"
#include "prosody/error.h"
#include "test_support.h"

namespace prosody {
namespace {

using testing::MappingsFrom;

TEST(Mappings, ChHasThreeReadings) {
  MappingSet m = MappingsFrom("ch\tCH\nch\tK\nch\tSH\n");
  EXPECT_EQ(m.size(), 3u);
  for (const char* p : {"CH", "K", "SH"}) {
    EXPECT_TRUE(m.Contains("ch", PhoneSeq{p})) << p;
  }
  EXPECT_FALSE(m.Contains("ch", PhoneSeq{"T"}));
  EXPECT_EQ(m.PhonesFor("ch").size(), 3u);
}

TEST(Mappings, EmptySides) {
  MappingSet m = MappingsFrom("e\t_\n");
  EXPECT_TRUE(m.Contains("e", PhoneSeq{}));
  EXPECT_FALSE(m.Contains("", PhoneSeq{"Z"}));
}

TEST(Mappings, DuplicatesCollapseAndCaseFolds) {
  MappingSet m = MappingsFrom("# comment\nCH\tCH\nch\tCH1\n\nch\tCH  # trailing\n");
  EXPECT_EQ(m.size(), 1u);
  EXPECT_TRUE(m.Contains("ch", PhoneSeq{"CH"}));
}

TEST(Mappings, InsertReportsNovelty) {
  MappingSet m;
  EXPECT_TRUE(m.Insert({"ph", {"F"}}));
  EXPECT_FALSE(m.Insert({"ph", {"F"}}));
  EXPECT_EQ(m.max_graphemes(), 2u);
  EXPECT_TRUE(m.PhonesFor("zz").empty());
}

TEST(Mappings, Errors) {
  auto code = [](const std::string& text) {
    try {
      MappingsFrom(text);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kIoError;
  };
  EXPECT_EQ(code("_\t_\n"), ErrorCode::kBothSidesEmpty);
  EXPECT_EQ(code("ch\n"), ErrorCode::kMalformedLine);
  EXPECT_EQ(code("ch\tQQ\n"), ErrorCode::kMalformedLine);
  EXPECT_EQ(code("abcde\tK\n"), ErrorCode::kMalformedLine);
}

TEST(Mappings, StockTableIsWellFormed) {
  const MappingSet& m = testing::StockMappings();
  EXPECT_GT(m.size(), 200u);
  for (const auto& mp : m.mappings()) {
    EXPECT_FALSE(mp.graphemes.empty() && mp.phones.empty());
    EXPECT_LE(mp.graphemes.size(), kMaxMappingGraphemes);
    EXPECT_LE(mp.phones.size(), kMaxMappingPhones);
    for (const auto& p : mp.phones) EXPECT_TRUE(IsArpabet(p)) << p;
  }
  // The table deliberately has no Z insertion and no silent c.
  EXPECT_FALSE(m.Contains("", PhoneSeq{"Z"}));
  EXPECT_FALSE(m.Contains("c", PhoneSeq{}));
  EXPECT_TRUE(m.Contains("wh", PhoneSeq{"W"}));
  EXPECT_TRUE(m.Contains("e", PhoneSeq{}));
}

TEST(Arpabet, Inventory) {
  EXPECT_EQ(ArpabetInventory().size(), 40u);
  EXPECT_TRUE(IsArpabet("AX"));
  EXPECT_FALSE(IsArpabet("EH1"));
  EXPECT_FALSE(IsArpabet(","));
  EXPECT_TRUE(IsScheduleSymbol(","));
  EXPECT_TRUE(IsVowel("EH"));
  EXPECT_FALSE(IsVowel("R"));
  EXPECT_EQ(StripStress("EH1"), "EH");
  EXPECT_EQ(SplitPhones(" W  EH R "), (PhoneSeq{"W", "EH", "R"}));
  EXPECT_EQ(JoinPhones(PhoneSeq{"W", "EH"}), "W EH");
}

}  // namespace
}  // namespace prosody
