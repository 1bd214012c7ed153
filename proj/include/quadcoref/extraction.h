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

#ifndef QUADCOREF_EXTRACTION_H_
#define QUADCOREF_EXTRACTION_H_

#include <optional>
#include <string>
#include <vector>

#include "quadcoref/corpus.h"
#include "quadcoref/instance.h"
#include "quadcoref/lexicon.h"
#include "quadcoref/resources.h"

namespace quadcoref {

enum class MentionKind { kPersonalName, kPronoun };

struct Mention {
  MentionKind kind = MentionKind::kPronoun;
  // Whole mention, including any title and surname.
  Span span;
  Text surface;
  Gender gender = Gender::kUnknown;
  int sentence = 0;
  // Personal names only. `name_key` is the case-folded first name (or the
  // titled surname); `head` is that token's span; `full_key` is the whole
  // name without its title.
  Text name_key;
  Text full_key;
  Span head;
  std::optional<Span> title;
};

// Pronouns are the closed set he/him/his/she/her/hers. Names are a title
// followed by capitalized tokens, or a capitalized token the name database
// genders, extended over following capitalized tokens. Names whose gender
// cannot be guessed are dropped.
std::vector<Mention> DetectMentions(const Document& doc,
                                    const NameDatabase& names);

struct NameGroup {
  Text key;
  Gender gender = Gender::kUnknown;
  std::vector<Mention> occurrences;
};

struct ContextWindow {
  std::string document_id;
  int first_sentence = 0;
  int last_sentence = 0;
  Mention pronoun;
  std::vector<NameGroup> masculine;
  std::vector<NameGroup> feminine;
  // A key seen with both genders inside the window.
  bool conflicting_keys = false;

  int sentence_count() const { return last_sentence - first_sentence + 1; }
  bool HasTwoPlusTwo() const {
    return !conflicting_keys && masculine.size() == 2 && feminine.size() == 2;
  }
};

// Collects the gendered names of sentences [first, last].
ContextWindow BuildWindow(const Document& doc,
                          const std::vector<Mention>& mentions,
                          const Mention& pronoun, int first_sentence,
                          int last_sentence);

inline constexpr int kMaxWindowSentences = 5;

// Tries windows around the pronoun's sentence from one to five sentences,
// each size starting with the window that extends furthest backward, and
// returns the first holding exactly two masculine and two feminine names.
std::optional<ContextWindow> ExtractContext(const Document& doc,
                                            const std::vector<Mention>& mentions,
                                            const Mention& pronoun);

// Heuristic for an initial subordinate clause or an initial prepositional
// phrase: the pronoun precedes the sentence's first comma, and the sentence
// opens with a subordinator, or with a preposition and the pronoun is
// possessive.
bool InInitialPosition(const Sentence& sentence, const Mention& pronoun,
                       const Resources& resources);

// FinalPro > MedialPro > InitialPro. A same-sentence FinalPro requires the
// pronoun to follow both candidates.
std::optional<Pattern> ClassifyPattern(const Document& doc,
                                       const ContextWindow& window,
                                       const Resources& resources);

// Throws InternalError if the candidate group does not match the pronoun's
// gender.
Instance AssembleInstance(const Document& doc, const ContextWindow& window,
                          Pattern pattern);

struct ExtractionStats {
  int pronouns = 0;
  int windows = 0;
  int final_pro = 0;
  int medial_pro = 0;
  int initial_pro = 0;
};

// All original instances of one document, ordered by pronoun offset.
std::vector<Instance> ExtractInstances(const Document& doc,
                                       const Resources& resources,
                                       ExtractionStats* stats = nullptr);

// Documents are processed in parallel; output is sorted by document id then
// pronoun offset regardless of `threads`.
std::vector<Instance> ExtractCorpus(const std::vector<Document>& docs,
                                    const Resources& resources,
                                    ExtractionStats* stats = nullptr,
                                    int threads = 1);

}  // namespace quadcoref

#endif  // QUADCOREF_EXTRACTION_H_
