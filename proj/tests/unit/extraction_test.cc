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

#include "quadcoref/extraction.h"

#include <gtest/gtest.h>

#include <set>

#include "quadcoref/error.h"
#include "test_util.h"

namespace quadcoref {
namespace {

using testing::Doc;
using testing::PronounAt;
using testing::TestResources;

std::vector<std::string> Surfaces(const std::vector<Mention>& mentions) {
  std::vector<std::string> out;
  for (const Mention& m : mentions) out.push_back(ToUtf8(m.surface));
  return out;
}

std::set<std::string> Keys(const std::vector<NameGroup>& groups) {
  std::set<std::string> out;
  for (const NameGroup& g : groups) out.insert(ToUtf8(g.key));
  return out;
}

TEST(DetectMentionsTest, NamesWithGender) {
  const Document doc = Doc("d", "Tom told Julia.");
  const auto mentions = DetectMentions(doc, TestResources().names);
  ASSERT_EQ(mentions.size(), 2u);
  EXPECT_EQ(Surfaces(mentions), (std::vector<std::string>{"Tom", "Julia"}));
  EXPECT_EQ(mentions[0].gender, Gender::kMasculine);
  EXPECT_EQ(mentions[1].gender, Gender::kFeminine);
  EXPECT_EQ(mentions[0].kind, MentionKind::kPersonalName);
}

TEST(DetectMentionsTest, ReflexivesAreNotPronouns) {
  const Document doc = Doc("d", "He saw himself.");
  const auto mentions = DetectMentions(doc, TestResources().names);
  ASSERT_EQ(mentions.size(), 1u);
  EXPECT_EQ(mentions[0].kind, MentionKind::kPronoun);
  EXPECT_EQ(ToUtf8(mentions[0].surface), "He");
  EXPECT_EQ(mentions[0].gender, Gender::kMasculine);
}

TEST(DetectMentionsTest, TitledSurnameAndUnknownName) {
  const Document doc = Doc("d", "Mr. Smith met Zzyzx.");
  const auto mentions = DetectMentions(doc, TestResources().names);
  ASSERT_EQ(mentions.size(), 1u);
  EXPECT_EQ(ToUtf8(mentions[0].surface), "Mr. Smith");
  EXPECT_EQ(mentions[0].gender, Gender::kMasculine);
  EXPECT_EQ(ToUtf8(mentions[0].name_key), "smith");
  ASSERT_TRUE(mentions[0].title.has_value());
}

TEST(DetectMentionsTest, FullNamesKeepFirstNameKey) {
  const Document doc = Doc("d", "Mary Ann Smith waved.");
  const auto mentions = DetectMentions(doc, TestResources().names);
  ASSERT_EQ(mentions.size(), 1u);
  EXPECT_EQ(ToUtf8(mentions[0].name_key), "mary");
  EXPECT_EQ(ToUtf8(mentions[0].full_key), "mary ann smith");
}

TEST(ExtractContextTest, OneSentenceWindow) {
  const Document doc =
      Doc("d", "It rained. Tom told Julia that Herbert and Maria saw him. "
               "Nothing happened.");
  const auto mentions = DetectMentions(doc, TestResources().names);
  const Mention p = PronounAt(mentions, doc, "him", 0);
  const auto window = ExtractContext(doc, mentions, p);
  ASSERT_TRUE(window.has_value());
  EXPECT_EQ(window->first_sentence, 1);
  EXPECT_EQ(window->last_sentence, 1);
  EXPECT_EQ(Keys(window->masculine), (std::set<std::string>{"tom", "herbert"}));
  EXPECT_EQ(Keys(window->feminine), (std::set<std::string>{"julia", "maria"}));
}

TEST(ExtractContextTest, ThreeMasculineNamesNeverQualify) {
  const Document doc =
      Doc("d", "Tom, Bill and Jack met Anna and Beth. He was glad.");
  const auto mentions = DetectMentions(doc, TestResources().names);
  const Mention p = PronounAt(mentions, doc, "He", 0);
  EXPECT_FALSE(ExtractContext(doc, mentions, p).has_value());
}

TEST(ExtractContextTest, PrefersBackwardExpansion) {
  const Document doc =
      Doc("d", "Tom met Anna. Bill met Beth. He left. Jack met Mary.");
  const auto mentions = DetectMentions(doc, TestResources().names);
  const Mention p = PronounAt(mentions, doc, "He", 0);
  const auto window = ExtractContext(doc, mentions, p);
  ASSERT_TRUE(window.has_value());
  EXPECT_EQ(window->first_sentence, 0);
  EXPECT_EQ(window->last_sentence, 2);
}

TEST(ExtractContextTest, NeverExceedsFiveSentences) {
  const Document doc = Doc(
      "d", "Tom met Anna. A. B. C. D. Bill met Beth. He left.");
  const auto mentions = DetectMentions(doc, TestResources().names);
  const Mention p = PronounAt(mentions, doc, "He", 0);
  EXPECT_FALSE(ExtractContext(doc, mentions, p).has_value());
}

TEST(ExtractContextTest, PassageFindsAllFourNames) {
  const Document doc =
      Doc("t", testing::ReadFixture("passage/original.txt"));
  const auto mentions = DetectMentions(doc, TestResources().names);
  const Mention p = PronounAt(mentions, doc, "he", 1);
  const auto window = ExtractContext(doc, mentions, p);
  ASSERT_TRUE(window.has_value());
  EXPECT_EQ(Keys(window->masculine), (std::set<std::string>{"tom", "herbert"}));
  EXPECT_EQ(Keys(window->feminine), (std::set<std::string>{"julia", "maria"}));
  EXPECT_LE(window->sentence_count(), kMaxWindowSentences);
}

std::optional<Pattern> PatternOf(const std::string& text,
                                 const std::string& pronoun) {
  const Document doc = Doc("d", text);
  const auto mentions = DetectMentions(doc, TestResources().names);
  const Mention p = PronounAt(mentions, doc, pronoun, 0);
  const auto window = ExtractContext(doc, mentions, p);
  if (!window) return std::nullopt;
  return ClassifyPattern(doc, *window, TestResources());
}

TEST(ClassifyPatternTest, FinalProNextSentence) {
  EXPECT_EQ(PatternOf("Tom told Julia that Herbert and Maria were late. He "
                      "apologized.",
                      "He"),
            Pattern::kFinalPro);
}

TEST(ClassifyPatternTest, FinalProSameSentence) {
  EXPECT_EQ(PatternOf("Tom and Bill met Anna and Beth before he left.", "he"),
            Pattern::kFinalPro);
}

TEST(ClassifyPatternTest, InitialProSubordinateClause) {
  EXPECT_EQ(PatternOf("When his car stalled, Tom called Bill, Anna and Beth.",
                      "his"),
            Pattern::kInitialPro);
}

TEST(ClassifyPatternTest, InitialProPossessivePreposition) {
  EXPECT_EQ(PatternOf("Despite her fears, Anna called Beth, Tom and Bill.",
                      "her"),
            Pattern::kInitialPro);
}

TEST(ClassifyPatternTest, PrepositionNeedsPossessive) {
  EXPECT_EQ(PatternOf("With him gone, Tom called Bill, Anna and Beth.", "him"),
            std::nullopt);
}

TEST(ClassifyPatternTest, MedialPro) {
  EXPECT_EQ(PatternOf("Anna and Beth watched Tom. When he smiled, Bill left.",
                      "he"),
            Pattern::kMedialPro);
}

TEST(ClassifyPatternTest, PronounAfterFirstCommaMatchesNothing) {
  EXPECT_EQ(PatternOf("Anna said, when he smiled, Tom called Bill and Beth.",
                      "he"),
            std::nullopt);
}

TEST(AssembleInstanceTest, PassageRoles) {
  const Instance x = testing::PassageOriginal();
  EXPECT_EQ(ToUtf8(x.candidates[0].key), "tom");
  EXPECT_EQ(ToUtf8(x.candidates[1].key), "herbert");
  EXPECT_EQ(ToUtf8(x.opposites[0].key), "julia");
  EXPECT_EQ(ToUtf8(x.opposites[1].key), "maria");
  EXPECT_EQ(ToUtf8(x.pronoun), "he");
  EXPECT_EQ(x.candidates[0].spans.size(), 3u);
  EXPECT_EQ(x.pronoun_gender(), Gender::kMasculine);
  EXPECT_NO_THROW(ValidateInstance(x));
}

TEST(AssembleInstanceTest, RebasesToWindow) {
  const Document doc =
      Doc("d", "Nothing. Tom told Julia that Herbert and Maria saw him.");
  const auto mentions = DetectMentions(doc, TestResources().names);
  const Mention p = PronounAt(mentions, doc, "him", 0);
  const auto window = ExtractContext(doc, mentions, p);
  ASSERT_TRUE(window.has_value());
  const Instance x = AssembleInstance(doc, *window, Pattern::kFinalPro);
  EXPECT_EQ(ToUtf8(x.text), "Tom told Julia that Herbert and Maria saw him.");
  EXPECT_EQ(x.candidates[0].spans[0], (Span{0, 3}));
  EXPECT_EQ(ToUtf8(x.Slice(x.pronoun_span)), "him");
  EXPECT_EQ(x.first_sentence, 1);
}

TEST(AssembleInstanceTest, GenderMismatchIsInternalError) {
  const Document doc = Doc("d", "Tom told Julia that Herbert and Maria saw him.");
  const auto mentions = DetectMentions(doc, TestResources().names);
  const Mention p = PronounAt(mentions, doc, "him", 0);
  ContextWindow window = *ExtractContext(doc, mentions, p);
  window.pronoun.gender = Gender::kFeminine;
  window.pronoun.surface = U"her";
  EXPECT_THROW(AssembleInstance(doc, window, Pattern::kFinalPro),
               InternalError);
}

TEST(ExtractCorpusTest, DeterministicAcrossThreadCounts) {
  std::vector<Document> docs;
  docs.push_back(Doc("b", "Tom told Julia that Herbert and Maria were late. He "
                          "apologized. She smiled."));
  docs.push_back(Doc("a", "When her car stalled, Anna called Beth and Tom and "
                          "Bill."));
  docs.push_back(Doc("c", "Tom, Bill and Jack met Anna and Beth. He was glad."));
  ExtractionStats stats1;
  const auto one = ExtractCorpus(docs, TestResources(), &stats1, 1);
  const auto four = ExtractCorpus(docs, TestResources(), nullptr, 4);
  EXPECT_EQ(one, four);
  ASSERT_GE(one.size(), 2u);
  EXPECT_EQ(one[0].document_id, "a");
  for (size_t k = 1; k < one.size(); ++k) {
    EXPECT_LE(one[k - 1].document_id, one[k].document_id);
  }
  // Every instance holds exactly four distinct gendered names.
  for (const Instance& x : one) {
    const auto mentions = DetectMentions(
        MakeDocument("x", x.text, TestResources().abbreviations),
        TestResources().names);
    std::set<Text> keys;
    for (const Mention& m : mentions) {
      if (m.kind == MentionKind::kPersonalName) keys.insert(m.name_key);
    }
    EXPECT_EQ(keys.size(), 4u) << x.id;
  }
  EXPECT_EQ(stats1.final_pro + stats1.medial_pro + stats1.initial_pro,
            static_cast<int>(one.size()));
}

}  // namespace
}  // namespace quadcoref
