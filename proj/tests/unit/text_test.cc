//
// Copyright 2026 The quadcoref Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

#include "quadcoref/text.h"

#include <gtest/gtest.h>

#include <random>

#include "quadcoref/error.h"

namespace quadcoref {
namespace {

TEST(Utf8Test, RoundTripsMultibyteText) {
  const std::string utf8 = "Zoë said “hi” … 日本";
  const Text text = FromUtf8(utf8);
  EXPECT_EQ(text.size(), 18u);
  EXPECT_EQ(ToUtf8(text), utf8);
}

TEST(Utf8Test, RejectsInvalidBytes) {
  EXPECT_THROW(FromUtf8("\xff\xfe"), DataError);
  EXPECT_THROW(FromUtf8("\xc3"), DataError);
  EXPECT_THROW(FromUtf8("\xed\xa0\x80"), DataError);  // surrogate
}

TEST(SpanTest, OverlapAndContainment) {
  const Span a{0, 5};
  EXPECT_TRUE(a.Contains({1, 3}));
  EXPECT_FALSE(a.Contains({4, 6}));
  EXPECT_TRUE(a.Overlaps({4, 6}));
  EXPECT_FALSE(a.Overlaps({5, 6}));
  EXPECT_TRUE(Span({3, 3}).empty());
}

TEST(CaseTest, TransferCaseFollowsOriginal) {
  EXPECT_EQ(TransferCase(U"He", U"she"), U"She");
  EXPECT_EQ(TransferCase(U"HE", U"she"), U"SHE");
  EXPECT_EQ(TransferCase(U"he", U"She"), U"she");
  EXPECT_EQ(TransferCase(U"Tom", U"maria"), U"Maria");
}

TEST(EditedTextTest, AppliesEditsAndMapsOffsets) {
  const Text source = U"Tom met Anna.";
  const EditedText edited(source, {{{0, 3}, U"Herbert"}, {{8, 12}, U"Jo"}});
  EXPECT_EQ(edited.text(), U"Herbert met Jo.");
  EXPECT_EQ(edited.MapSpan({0, 3}), (Span{0, 7}));
  EXPECT_EQ(edited.MapSpan({4, 7}), (Span{8, 11}));
  EXPECT_EQ(edited.MapSpan({8, 12}), (Span{12, 14}));
  EXPECT_EQ(edited.MapOffset(12), 14);
  EXPECT_EQ(edited.UnmapSpan({8, 11}), (Span{4, 7}));
  EXPECT_EQ(edited.UnmapSpan({12, 14}), (Span{8, 12}));
}

TEST(EditedTextTest, DeletionMapsBothWays) {
  const EditedText edited(U"Mr. Lee", {{{2, 3}, U""}});
  EXPECT_EQ(edited.text(), U"Mr Lee");
  EXPECT_EQ(edited.MapSpan({4, 7}), (Span{3, 6}));
  EXPECT_EQ(edited.UnmapSpan({3, 6}), (Span{4, 7}));
}

TEST(EditedTextTest, RejectsOverlaps) {
  EXPECT_THROW(EditedText(U"abcdef", {{{0, 3}, U"x"}, {{2, 4}, U"y"}}),
               DataError);
  EXPECT_THROW(EditedText(U"abc", {{{2, 9}, U"x"}}), DataError);
}

TEST(EditedTextTest, UntouchedOffsetsRoundTrip) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Text source(40, U'a');
    std::vector<Edit> edits;
    std::vector<bool> touched(41, false);
    for (int64_t pos = 0; pos + 3 < 40; pos += 5) {
      if (rng() % 2) continue;
      const int64_t len = rng() % 3;
      edits.push_back({{pos, pos + len}, Text(rng() % 4, U'b')});
      for (int64_t k = pos + 1; k < pos + len; ++k) touched[k] = true;
    }
    const EditedText edited(source, edits);
    for (int64_t k = 0; k <= 40; ++k) {
      if (touched[k]) continue;
      bool boundary = false;
      for (const Edit& e : edits) boundary |= e.span.begin == k || e.span.end == k;
      if (boundary) continue;
      EXPECT_EQ(edited.UnmapOffset(edited.MapOffset(k)), k);
    }
  }
}

}  // namespace
}  // namespace quadcoref
