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

#include "quadcoref/cda.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "oracles.h"
#include "quadcoref/error.h"
#include "test_util.h"

namespace quadcoref {
namespace {

using testing::Doc;
using testing::TestResources;

TEST(EdgeWeightTest, ClosedFormValues) {
  const std::vector<int> e1 = {1, 0, 0};
  const std::vector<int> e2 = {0, 1, 0};
  const std::vector<int> two_e1 = {2, 0, 0};
  const std::vector<int> zero = {0, 0, 0};
  EXPECT_EQ(EdgeWeight(e1, e1), 0.0);
  EXPECT_NEAR(EdgeWeight(e1, e2, 12.0 / 11.0), std::sqrt(2.0) * 12.0 / 11.0,
              1e-12);
  EXPECT_NEAR(EdgeWeight(e1, two_e1, 12.0 / 11.0), 1.0 / 11.0, 1e-12);
  EXPECT_NEAR(EdgeWeight(zero, e1), 12.0 / 11.0, 1e-12);
  EXPECT_EQ(EdgeWeight(zero, zero), 0.0);
  const std::vector<int> short_vec = {1, 0};
  EXPECT_THROW(EdgeWeight(e1, short_vec), DataError);
}

TEST(EdgeWeightTest, SymmetricAndNonNegative) {
  std::mt19937 rng(4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> a(55);
    std::vector<int> b(55);
    for (int& x : a) x = static_cast<int>(rng() % 4);
    for (int& x : b) x = static_cast<int>(rng() % 4);
    EXPECT_EQ(EdgeWeight(a, b), EdgeWeight(b, a));
    EXPECT_GE(EdgeWeight(a, b), 0.0);
  }
}

TEST(MinWeightFullMatchingTest, MatchesBruteForce) {
  std::mt19937 rng(12345);
  for (int trial = 0; trial < 200; ++trial) {
    const size_t rows = 1 + rng() % 8;
    const size_t cols = 1 + rng() % 8;
    if (std::min(rows, cols) > 7) continue;
    std::vector<std::vector<double>> w(rows, std::vector<double>(cols));
    for (auto& row : w) {
      for (double& x : row) {
        // Integer vectors through the real edge weight, with ties.
        std::vector<int> a = {static_cast<int>(rng() % 3),
                              static_cast<int>(rng() % 3)};
        std::vector<int> b = {static_cast<int>(rng() % 3),
                              static_cast<int>(rng() % 3)};
        x = EdgeWeight(a, b);
      }
    }
    const Assignment a = MinWeightFullMatching(w);
    EXPECT_NEAR(a.total_weight, oracle::MinimumMatching(w), 1e-9) << trial;
    EXPECT_EQ(a.pairs.size(), std::min(rows, cols));
    std::set<int> used_rows;
    std::set<int> used_cols;
    double sum = 0;
    for (const auto& [r, c] : a.pairs) {
      used_rows.insert(r);
      used_cols.insert(c);
      sum += w[r][c];
    }
    EXPECT_EQ(used_rows.size(), a.pairs.size());
    EXPECT_EQ(used_cols.size(), a.pairs.size());
    EXPECT_NEAR(sum, a.total_weight, 1e-9);
    EXPECT_TRUE(std::is_sorted(a.pairs.begin(), a.pairs.end()));
  }
}

TEST(MinWeightFullMatchingTest, FourBySix) {
  const std::vector<std::vector<double>> w = {{7, 3, 9, 4, 8, 6},
                                              {2, 8, 6, 5, 1, 9},
                                              {6, 4, 2, 8, 7, 3},
                                              {5, 9, 7, 1, 6, 2}};
  const Assignment a = MinWeightFullMatching(w);
  EXPECT_EQ(a.pairs.size(), 4u);
  EXPECT_DOUBLE_EQ(a.total_weight, oracle::MinimumMatching(w));
  EXPECT_DOUBLE_EQ(a.total_weight, 3 + 1 + 2 + 1);
}

TEST(MinWeightFullMatchingTest, SingleAndErrors) {
  const Assignment one = MinWeightFullMatching({{2.5}});
  EXPECT_EQ(one.pairs, (std::vector<std::pair<int, int>>{{0, 0}}));
  EXPECT_EQ(one.total_weight, 2.5);
  EXPECT_THROW(MinWeightFullMatching({}), DataError);
  EXPECT_THROW(MinWeightFullMatching({{1, 2}, {3}}), DataError);
}

TEST(NameMatchingTest, TsvRoundTrip) {
  NameMatching m;
  m.Add({U"tom", U"maria", 0.25});
  m.Add({U"bill", U"anna", 1.0 / 3.0});
  EXPECT_THROW(m.Add({U"tom", U"beth", 0.0}), DataError);
  const NameMatching back = NameMatching::FromTsv(m.ToTsv());
  ASSERT_EQ(back.pairs().size(), 2u);
  EXPECT_EQ(back.Partner(U"tom"), Text(U"maria"));
  EXPECT_EQ(back.Partner(U"Maria"), Text(U"tom"));
  EXPECT_EQ(back.total_weight(), m.total_weight());
  EXPECT_FALSE(back.Partner(U"jack").has_value());
}

TEST(MatchNamesTest, ShippedDatabaseIsFullAndDeterministic) {
  const NameMatching a = MatchNames(TestResources().names);
  const NameMatching b = MatchNames(TestResources().names);
  EXPECT_EQ(a.ToTsv(), b.ToTsv());
  std::set<Text> seen;
  double sum = 0;
  for (const NamePair& p : a.pairs()) {
    EXPECT_TRUE(seen.insert(p.masculine).second);
    EXPECT_TRUE(seen.insert(p.feminine).second);
    sum += p.weight;
  }
  EXPECT_NEAR(sum, a.total_weight(), 1e-9);
  EXPECT_FALSE(a.pairs().empty());
}

std::string Acda(const std::string& text) {
  const Document doc = Doc("d", text);
  const auto mentions = DetectMentions(doc, TestResources().names);
  return ToUtf8(AcdaTransform(doc, mentions, TestResources().lexicon)
                    .edited.text());
}

TEST(AcdaTest, Examples) {
  EXPECT_EQ(Acda("Tom met Anna. He smiled."), "E1 met E2. She smiled.");
  EXPECT_EQ(Acda("The rain fell on the roof."), "The rain fell on the roof.");
  EXPECT_EQ(Acda("Mary saw Mary Ann."), "E1 saw E2.");
  EXPECT_EQ(Acda("Tom saw Anna, and Anna saw Tom with his brother."),
            "E1 saw E2, and E2 saw E1 with her sister.");
  EXPECT_EQ(Acda("Mr. Smith met his wife."), "Mrs. E1 met her husband.");
  EXPECT_EQ(Acda("Tom met Anna. He smiled."), Acda("Tom met Anna. He smiled."));
}

TEST(AcdaTest, SpansRemap) {
  const Document doc = Doc("d", "Herbert met Anna. He smiled.");
  const auto mentions = DetectMentions(doc, TestResources().names);
  const CdaOutput out = AcdaTransform(doc, mentions, TestResources().lexicon);
  const Span he = out.edited.MapSpan({18, 20});
  EXPECT_EQ(ToUtf8(out.edited.text().substr(he.begin, he.size())), "She");
}

class NcdaTest : public ::testing::Test {
 protected:
  NcdaTest() {
    matching_.Add({U"tom", U"maria", 0});
    matching_.Add({U"bill", U"anna", 0});
  }
  CdaOutput Run(const std::string& text) const {
    const Document doc = Doc("d", text);
    const auto mentions = DetectMentions(doc, TestResources().names);
    return NcdaTransform(doc, mentions, matching_, TestResources().lexicon);
  }
  NameMatching matching_;
};

TEST_F(NcdaTest, SwapsMatchedNames) {
  const CdaOutput out = Run("Tom met Anna. He smiled at Tom.");
  EXPECT_EQ(ToUtf8(out.edited.text()), "Maria met Bill. She smiled at Maria.");
  EXPECT_TRUE(out.warnings.empty());
}

TEST_F(NcdaTest, NoNamesIsWordSwapOnly) {
  EXPECT_EQ(ToUtf8(Run("The king thanked his son.").edited.text()),
            "The queen thanked her daughter.");
}

TEST_F(NcdaTest, TitlesSwap) {
  EXPECT_EQ(ToUtf8(Run("Mr. Tom Hall met Anna.").edited.text()),
            "Mrs. Maria Hall met Bill.");
}

TEST_F(NcdaTest, UnmatchedNameFallsBack) {
  const CdaOutput out = Run("Tom met Giovanni. Giovanni left.");
  EXPECT_EQ(ToUtf8(out.edited.text()), "Maria met E1. E1 left.");
  ASSERT_EQ(out.warnings.size(), 1u);
  EXPECT_EQ(out.warnings[0],
            "d: no partner for name 'giovanni', using a placeholder");
}

TEST_F(NcdaTest, TokenCountPreserved) {
  for (const std::string text :
       {"Tom met Anna. He smiled at Tom.", "Bill told his mother.",
        "Anna, Tom and Bill saw her uncle and himself."}) {
    const CdaOutput out = Run(text);
    size_t before = 0;
    size_t after = 0;
    for (const Sentence& s :
         Segment(FromUtf8(text), TestResources().abbreviations)) {
      before += s.tokens.size();
    }
    for (const Sentence& s :
         Segment(out.edited.text(), TestResources().abbreviations)) {
      after += s.tokens.size();
    }
    EXPECT_EQ(before, after) << text;
  }
}

}  // namespace
}  // namespace quadcoref
