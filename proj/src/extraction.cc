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

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

#include "quadcoref/error.h"

namespace quadcoref {
namespace {

bool IsWordToken(const Token& token) {
  return !token.text.empty() && IsWordChar(token.text[0]);
}

bool IsNameToken(const Token& token) {
  return IsWordToken(token) && StartsUpper(token.text) &&
         !IsTargetPronoun(token.text) && !IsTitle(token.text);
}

Text JoinKeys(const std::vector<Token>& tokens, size_t begin, size_t end) {
  Text key;
  for (size_t k = begin; k < end; ++k) {
    if (!key.empty()) key.push_back(U' ');
    key += Lowercase(tokens[k].text);
  }
  return key;
}

bool HasOccurrenceIn(const NameGroup& group, int sentence) {
  return std::any_of(group.occurrences.begin(), group.occurrences.end(),
                     [sentence](const Mention& m) {
                       return m.sentence == sentence;
                     });
}

bool HasOccurrenceBefore(const NameGroup& group, int sentence,
                         int64_t offset) {
  return std::any_of(group.occurrences.begin(), group.occurrences.end(),
                     [&](const Mention& m) {
                       return m.sentence == sentence && m.head.end <= offset;
                     });
}

bool IsPossessive(const Sentence& sentence, const Mention& pronoun,
                  const GenderLexicon& lexicon) {
  const Text lower = Lowercase(pronoun.surface);
  if (lower == U"his" || lower == U"hers") return true;
  if (lower != U"her") return false;
  for (size_t k = 0; k < sentence.tokens.size(); ++k) {
    if (sentence.tokens[k].span == pronoun.span) {
      if (k + 1 < sentence.tokens.size()) {
        return lexicon.HerIsDeterminer(TextView(sentence.tokens[k + 1].text));
      }
      return lexicon.HerIsDeterminer(std::nullopt);
    }
  }
  return false;
}

}  // namespace

std::vector<Mention> DetectMentions(const Document& doc,
                                    const NameDatabase& names) {
  std::vector<Mention> mentions;
  for (const Sentence& sentence : doc.sentences) {
    const auto& tokens = sentence.tokens;
    size_t i = 0;
    while (i < tokens.size()) {
      const Token& token = tokens[i];
      if (IsTargetPronoun(token.text)) {
        Mention m;
        m.kind = MentionKind::kPronoun;
        m.span = token.span;
        m.surface = token.text;
        m.gender = PronounGender(token.text);
        m.sentence = sentence.index;
        mentions.push_back(std::move(m));
        ++i;
        continue;
      }
      const bool titled = IsTitle(token.text) && i + 1 < tokens.size() &&
                          IsNameToken(tokens[i + 1]);
      const size_t head_index = titled ? i + 1 : i;
      if (!titled && !IsNameToken(token)) {
        ++i;
        continue;
      }
      const Token& head = tokens[head_index];
      const Gender gender =
          titled ? GuessGender(names, head.text, TextView(token.text))
                 : GuessGender(names, head.text);
      if (gender == Gender::kUnknown) {
        i = head_index + 1;
        continue;
      }
      size_t end = head_index + 1;
      while (end < tokens.size() && IsNameToken(tokens[end])) ++end;
      Mention m;
      m.kind = MentionKind::kPersonalName;
      m.span = {token.span.begin, tokens[end - 1].span.end};
      m.surface = Text(doc.Slice(m.span));
      m.gender = gender;
      m.sentence = sentence.index;
      m.name_key = Lowercase(head.text);
      m.full_key = JoinKeys(tokens, head_index, end);
      m.head = head.span;
      if (titled) m.title = token.span;
      mentions.push_back(std::move(m));
      i = end;
    }
  }
  return mentions;
}

ContextWindow BuildWindow(const Document& doc,
                          const std::vector<Mention>& mentions,
                          const Mention& pronoun, int first_sentence,
                          int last_sentence) {
  ContextWindow window;
  window.document_id = doc.id;
  window.first_sentence = first_sentence;
  window.last_sentence = last_sentence;
  window.pronoun = pronoun;
  for (const Mention& m : mentions) {
    if (m.kind != MentionKind::kPersonalName || m.sentence < first_sentence ||
        m.sentence > last_sentence) {
      continue;
    }
    NameGroup* group = nullptr;
    for (auto* groups : {&window.masculine, &window.feminine}) {
      for (NameGroup& g : *groups) {
        if (g.key == m.name_key) group = &g;
      }
    }
    if (group != nullptr) {
      if (group->gender != m.gender) window.conflicting_keys = true;
      group->occurrences.push_back(m);
      continue;
    }
    auto& target =
        m.gender == Gender::kMasculine ? window.masculine : window.feminine;
    target.push_back(NameGroup{m.name_key, m.gender, {m}});
  }
  return window;
}

std::optional<ContextWindow> ExtractContext(const Document& doc,
                                            const std::vector<Mention>& mentions,
                                            const Mention& pronoun) {
  const int count = static_cast<int>(doc.sentences.size());
  const int p = pronoun.sentence;
  for (int size = 1; size <= kMaxWindowSentences; ++size) {
    for (int first = p - size + 1; first <= p; ++first) {
      const int last = first + size - 1;
      if (first < 0 || last >= count) continue;
      ContextWindow window = BuildWindow(doc, mentions, pronoun, first, last);
      if (window.HasTwoPlusTwo()) return window;
    }
  }
  return std::nullopt;
}

bool InInitialPosition(const Sentence& sentence, const Mention& pronoun,
                       const Resources& resources) {
  const Token* first_word = nullptr;
  const Token* first_comma = nullptr;
  for (const Token& token : sentence.tokens) {
    if (first_word == nullptr && IsWordToken(token)) first_word = &token;
    if (first_comma == nullptr && token.text == U",") first_comma = &token;
  }
  if (first_word == nullptr || first_comma == nullptr) return false;
  if (pronoun.span.begin >= first_comma->span.begin) return false;
  if (resources.subordinators.Contains(first_word->text)) return true;
  return resources.prepositions.Contains(first_word->text) &&
         IsPossessive(sentence, pronoun, resources.lexicon);
}

std::optional<Pattern> ClassifyPattern(const Document& doc,
                                       const ContextWindow& window,
                                       const Resources& resources) {
  const Gender gender = window.pronoun.gender;
  if (gender == Gender::kUnknown) return std::nullopt;
  const auto& candidates =
      gender == Gender::kMasculine ? window.masculine : window.feminine;
  if (candidates.size() != 2) return std::nullopt;
  const NameGroup& a = candidates[0];
  const NameGroup& b = candidates[1];
  const int p = window.pronoun.sentence;
  const int64_t offset = window.pronoun.span.begin;

  if (HasOccurrenceBefore(a, p, offset) && HasOccurrenceBefore(b, p, offset)) {
    return Pattern::kFinalPro;
  }
  if (p - 1 >= window.first_sentence && HasOccurrenceIn(a, p - 1) &&
      HasOccurrenceIn(b, p - 1)) {
    return Pattern::kFinalPro;
  }

  const Sentence& sentence = doc.sentences.at(p);
  const bool initial = InInitialPosition(sentence, window.pronoun, resources);
  if (initial && p - 1 >= window.first_sentence &&
      ((HasOccurrenceIn(a, p - 1) && HasOccurrenceIn(b, p)) ||
       (HasOccurrenceIn(b, p - 1) && HasOccurrenceIn(a, p)))) {
    return Pattern::kMedialPro;
  }
  if (initial && HasOccurrenceIn(a, p) && HasOccurrenceIn(b, p)) {
    return Pattern::kInitialPro;
  }
  return std::nullopt;
}

Instance AssembleInstance(const Document& doc, const ContextWindow& window,
                          Pattern pattern) {
  const Gender gender = PronounGender(window.pronoun.surface);
  if (gender == Gender::kUnknown) {
    throw InternalError("target pronoun '" + ToUtf8(window.pronoun.surface) +
                        "' is not gendered");
  }
  const auto& candidate_groups =
      gender == Gender::kMasculine ? window.masculine : window.feminine;
  const auto& opposite_groups =
      gender == Gender::kMasculine ? window.feminine : window.masculine;
  if (candidate_groups.size() != 2 || opposite_groups.size() != 2) {
    throw InternalError("window does not hold two names of each gender");
  }
  for (const NameGroup& group : candidate_groups) {
    for (const Mention& m : group.occurrences) {
      if (group.gender != gender || m.gender != gender) {
        throw InternalError("candidate '" + ToUtf8(group.key) +
                            "' is not gender-consistent with pronoun '" +
                            ToUtf8(window.pronoun.surface) + "'");
      }
    }
  }
  for (const NameGroup& group : opposite_groups) {
    if (group.gender != Opposite(gender)) {
      throw InternalError("opposite name '" + ToUtf8(group.key) +
                          "' has the pronoun's gender");
    }
  }

  const Span window_span{doc.sentences.at(window.first_sentence).span.begin,
                         doc.sentences.at(window.last_sentence).span.end};
  const int64_t base = window_span.begin;

  auto make_slot = [&](const NameGroup& group) {
    NameSlot slot;
    slot.key = group.key;
    for (int s = window.first_sentence; s <= window.last_sentence; ++s) {
      for (const Token& token : doc.sentences[s].tokens) {
        if (StartsUpper(token.text) && Lowercase(token.text) == group.key) {
          slot.spans.push_back(
              {token.span.begin - base, token.span.end - base});
        }
      }
    }
    return slot;
  };
  auto ordered_pair = [&](const std::vector<NameGroup>& groups) {
    std::array<NameSlot, 2> slots = {make_slot(groups[0]),
                                     make_slot(groups[1])};
    if (slots[0].spans.empty() || slots[1].spans.empty()) {
      throw InternalError("name has no token occurrence in its window");
    }
    if (slots[1].spans.front() < slots[0].spans.front()) {
      std::swap(slots[0], slots[1]);
    }
    return slots;
  };

  Instance instance;
  instance.quadruple_id = doc.id + ":" + std::to_string(window.pronoun.span.begin);
  instance.id = InstanceId(instance.quadruple_id, Variant::kOriginal);
  instance.variant = Variant::kOriginal;
  instance.text = Text(doc.Slice(window_span));
  instance.pronoun_span = {window.pronoun.span.begin - base,
                           window.pronoun.span.end - base};
  instance.pronoun = window.pronoun.surface;
  instance.candidates = ordered_pair(candidate_groups);
  instance.opposites = ordered_pair(opposite_groups);
  instance.pattern = pattern;
  instance.original_gender = gender;
  instance.document_id = doc.id;
  instance.first_sentence = window.first_sentence;
  instance.last_sentence = window.last_sentence;
  try {
    ValidateInstance(instance);
  } catch (const DataError& e) {
    throw InternalError(e.what());
  }
  return instance;
}

std::vector<Instance> ExtractInstances(const Document& doc,
                                       const Resources& resources,
                                       ExtractionStats* stats) {
  ExtractionStats local;
  std::vector<Instance> instances;
  const std::vector<Mention> mentions = DetectMentions(doc, resources.names);
  for (const Mention& m : mentions) {
    if (m.kind != MentionKind::kPronoun) continue;
    ++local.pronouns;
    const auto window = ExtractContext(doc, mentions, m);
    if (!window) continue;
    ++local.windows;
    const auto pattern = ClassifyPattern(doc, *window, resources);
    if (!pattern) continue;
    switch (*pattern) {
      case Pattern::kFinalPro:
        ++local.final_pro;
        break;
      case Pattern::kMedialPro:
        ++local.medial_pro;
        break;
      case Pattern::kInitialPro:
        ++local.initial_pro;
        break;
    }
    instances.push_back(AssembleInstance(doc, *window, *pattern));
  }
  if (stats != nullptr) {
    stats->pronouns += local.pronouns;
    stats->windows += local.windows;
    stats->final_pro += local.final_pro;
    stats->medial_pro += local.medial_pro;
    stats->initial_pro += local.initial_pro;
  }
  return instances;
}

std::vector<Instance> ExtractCorpus(const std::vector<Document>& docs,
                                    const Resources& resources,
                                    ExtractionStats* stats, int threads) {
  std::vector<size_t> order(docs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return docs[a].id < docs[b].id;
  });

  std::vector<std::vector<Instance>> per_doc(docs.size());
  std::vector<ExtractionStats> per_doc_stats(docs.size());
  std::atomic<size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (size_t k = next++; k < docs.size(); k = next++) {
      try {
        per_doc[k] = ExtractInstances(docs[k], resources, &per_doc_stats[k]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  const int workers = std::max(1, std::min<int>(threads, docs.size()));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Instance> all;
  for (const size_t k : order) {
    for (Instance& instance : per_doc[k]) all.push_back(std::move(instance));
    if (stats != nullptr) {
      stats->pronouns += per_doc_stats[k].pronouns;
      stats->windows += per_doc_stats[k].windows;
      stats->final_pro += per_doc_stats[k].final_pro;
      stats->medial_pro += per_doc_stats[k].medial_pro;
      stats->initial_pro += per_doc_stats[k].initial_pro;
    }
  }
  return all;
}

}  // namespace quadcoref
