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

#ifndef QUADCOREF_LEXICON_H_
#define QUADCOREF_LEXICON_H_

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadcoref/corpus.h"
#include "quadcoref/text.h"

namespace quadcoref {

enum class Gender { kMasculine, kFeminine, kUnknown };

std::string_view GenderName(Gender gender);
Gender ParseGender(std::string_view name);
Gender Opposite(Gender gender);

enum class NameLabel {
  kMale,
  kFemale,
  kMostlyMale,
  kMostlyFemale,
  kAmbiguous,
  kUnknown,
};

std::string_view NameLabelName(NameLabel label);
std::optional<NameLabel> ParseNameLabel(std::string_view name);
// male/mostly_male -> masculine, female/mostly_female -> feminine.
Gender LabelGender(NameLabel label);

inline constexpr int kCountryCount = 55;
inline constexpr int kMaxFrequency = 13;
// Columns 0-2 of the frequency vector are Great Britain, Ireland and the USA.
inline constexpr int kEnglishCountryCount = 3;

using FrequencyVector = std::array<int, kCountryCount>;

struct NameRecord {
  Text name;  // lowercase
  NameLabel label = NameLabel::kUnknown;
  FrequencyVector freq{};
};

class NameDatabase {
 public:
  // Tab-separated lines: label, name, then 55 integers in [0, 13].
  static NameDatabase Load(const std::filesystem::path& path);

  // Throws DataError if a frequency is out of range.
  void Add(NameRecord record);

  // When a name has several records, the one most frequent in an
  // English-speaking country wins; failing that, the one most frequent
  // anywhere; ties keep file order.
  const NameRecord* Lookup(TextView name) const;

  const std::vector<NameRecord>& records() const { return records_; }

 private:
  std::vector<NameRecord> records_;
  std::map<Text, std::vector<size_t>> by_name_;
};

enum class RoleHint {
  kPossessiveDeterminer,
  kObjectPronoun,
  kSubjectPronoun,
  kPossessivePronoun,
  kNoun,
};

std::optional<RoleHint> ParseRoleHint(std::string_view name);

struct GenderedPair {
  Text masculine;
  Text feminine;
  std::optional<RoleHint> role_hint;
};

// Gendered word pairs plus the closed pronoun system. Words listed with an
// empty counterpart column are gendered but cannot be swapped.
class GenderLexicon {
 public:
  GenderLexicon() = default;

  // Two or three tab-separated columns: masculine, feminine, optional role
  // hint. Either of the first two may be empty for an unpaired word.
  static GenderLexicon Load(const std::filesystem::path& path,
                            WordList object_followers);

  void AddPair(GenderedPair pair);
  void AddUnpaired(TextView word, Gender gender);
  void set_object_followers(WordList followers) {
    object_followers_ = std::move(followers);
  }

  bool IsGendered(TextView token) const;
  // Gender of a lexicon word, kUnknown if not listed.
  Gender GenderOf(TextView token) const;
  bool IsNominal(TextView token) const;

  // The opposite-gender counterpart of `token` with its casing preserved,
  // or `token` itself if not gendered. "her" reads as a determiner ("his")
  // when `next_token` looks nominal, otherwise as an object ("him"). "his"
  // before punctuation or at the end reads as "hers". Throws DataError for a
  // gendered word with no counterpart.
  Text SwapGenderedWord(TextView token,
                        std::optional<TextView> next_token) const;

  // True when "her" followed by `next_token` is a possessive determiner.
  bool HerIsDeterminer(std::optional<TextView> next_token) const;

  const std::vector<GenderedPair>& pairs() const { return pairs_; }

 private:
  std::vector<GenderedPair> pairs_;
  std::map<Text, Text> to_feminine_;
  std::map<Text, Text> to_masculine_;
  std::map<Text, Gender> unpaired_;
  std::map<Text, bool> nominal_;
  WordList object_followers_;
};

// he, him, his, she, her, hers in any casing.
bool IsTargetPronoun(TextView token);
Gender PronounGender(TextView pronoun);
// he<->she, his<->her, him->her, hers->his; a bare "her" maps to "him".
// Throws DataError outside the closed set.
Text PronounCounterpart(TextView pronoun);

// Gender carried by a title token ("Mr." -> masculine); kUnknown for
// ungendered titles such as "Dr." and for non-titles.
Gender TitleGender(TextView token);
bool IsTitle(TextView token);

// A gendered title decides; otherwise the name's database label does.
Gender GuessGender(const NameDatabase& db, TextView first_name,
                   std::optional<TextView> title = std::nullopt);

}  // namespace quadcoref

#endif  // QUADCOREF_LEXICON_H_
