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

#include "quadcoref/lexicon.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "quadcoref/error.h"

namespace quadcoref {
namespace {

std::vector<std::string> SplitTabs(const std::string& line) {
  std::vector<std::string> fields;
  size_t start = 0;
  while (true) {
    const size_t tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  return fields;
}

std::string StripCr(std::string line) {
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t");
  return s.substr(first, last - first + 1);
}

std::ifstream OpenOrThrow(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  return in;
}

int MaxOver(const FrequencyVector& freq, int count) {
  return *std::max_element(freq.begin(), freq.begin() + count);
}

bool IsPunctuationToken(TextView token) {
  return token.empty() || !IsWordChar(token[0]);
}

}  // namespace

std::string_view GenderName(Gender gender) {
  switch (gender) {
    case Gender::kMasculine:
      return "masculine";
    case Gender::kFeminine:
      return "feminine";
    case Gender::kUnknown:
      return "unknown";
  }
  return "unknown";
}

Gender ParseGender(std::string_view name) {
  if (name == "masculine") return Gender::kMasculine;
  if (name == "feminine") return Gender::kFeminine;
  if (name == "unknown") return Gender::kUnknown;
  throw DataError("unknown gender '" + std::string(name) + "'");
}

Gender Opposite(Gender gender) {
  switch (gender) {
    case Gender::kMasculine:
      return Gender::kFeminine;
    case Gender::kFeminine:
      return Gender::kMasculine;
    case Gender::kUnknown:
      return Gender::kUnknown;
  }
  return Gender::kUnknown;
}

std::string_view NameLabelName(NameLabel label) {
  switch (label) {
    case NameLabel::kMale:
      return "male";
    case NameLabel::kFemale:
      return "female";
    case NameLabel::kMostlyMale:
      return "mostly_male";
    case NameLabel::kMostlyFemale:
      return "mostly_female";
    case NameLabel::kAmbiguous:
      return "ambiguous";
    case NameLabel::kUnknown:
      return "unknown";
  }
  return "unknown";
}

std::optional<NameLabel> ParseNameLabel(std::string_view name) {
  if (name == "male") return NameLabel::kMale;
  if (name == "female") return NameLabel::kFemale;
  if (name == "mostly_male" || name == "mostly male") {
    return NameLabel::kMostlyMale;
  }
  if (name == "mostly_female" || name == "mostly female") {
    return NameLabel::kMostlyFemale;
  }
  if (name == "ambiguous") return NameLabel::kAmbiguous;
  if (name == "unknown") return NameLabel::kUnknown;
  return std::nullopt;
}

Gender LabelGender(NameLabel label) {
  switch (label) {
    case NameLabel::kMale:
    case NameLabel::kMostlyMale:
      return Gender::kMasculine;
    case NameLabel::kFemale:
    case NameLabel::kMostlyFemale:
      return Gender::kFeminine;
    default:
      return Gender::kUnknown;
  }
}

NameDatabase NameDatabase::Load(const std::filesystem::path& path) {
  auto in = OpenOrThrow(path);
  NameDatabase db;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    line = StripCr(line);
    if (Trim(line).empty() || line[0] == '#') continue;
    const auto where = [&] {
      return path.string() + ":" + std::to_string(line_number) + ": ";
    };
    const auto fields = SplitTabs(line);
    if (fields.size() != 2 + kCountryCount) {
      throw DataError(where() + "expected " +
                      std::to_string(2 + kCountryCount) + " fields, got " +
                      std::to_string(fields.size()));
    }
    const auto label = ParseNameLabel(Trim(fields[0]));
    if (!label) throw DataError(where() + "unknown label '" + fields[0] + "'");
    NameRecord record;
    record.label = *label;
    record.name = Lowercase(FromUtf8(Trim(fields[1])));
    if (record.name.empty()) throw DataError(where() + "empty name");
    for (int k = 0; k < kCountryCount; ++k) {
      const std::string field = Trim(fields[2 + k]);
      int value = -1;
      const auto [ptr, ec] =
          std::from_chars(field.data(), field.data() + field.size(), value);
      if (ec != std::errc() || ptr != field.data() + field.size()) {
        throw DataError(where() + "bad frequency '" + field + "'");
      }
      record.freq[k] = value;
    }
    try {
      db.Add(std::move(record));
    } catch (const DataError& e) {
      throw DataError(where() + e.what());
    }
  }
  return db;
}

void NameDatabase::Add(NameRecord record) {
  for (const int value : record.freq) {
    if (value < 0 || value > kMaxFrequency) {
      throw DataError("frequency " + std::to_string(value) +
                      " outside [0, 13] for name '" + ToUtf8(record.name) +
                      "'");
    }
  }
  record.name = Lowercase(record.name);
  by_name_[record.name].push_back(records_.size());
  records_.push_back(std::move(record));
}

const NameRecord* NameDatabase::Lookup(TextView name) const {
  const auto it = by_name_.find(Lowercase(name));
  if (it == by_name_.end()) return nullptr;
  const NameRecord* best = nullptr;
  std::tuple<int, int> best_key{-1, -1};
  for (const size_t index : it->second) {
    const NameRecord& record = records_[index];
    const std::tuple<int, int> key{MaxOver(record.freq, kEnglishCountryCount),
                                   MaxOver(record.freq, kCountryCount)};
    if (best == nullptr || key > best_key) {
      best = &record;
      best_key = key;
    }
  }
  return best;
}

std::optional<RoleHint> ParseRoleHint(std::string_view name) {
  if (name == "possessive_determiner") return RoleHint::kPossessiveDeterminer;
  if (name == "object_pronoun") return RoleHint::kObjectPronoun;
  if (name == "subject_pronoun") return RoleHint::kSubjectPronoun;
  if (name == "possessive_pronoun") return RoleHint::kPossessivePronoun;
  if (name == "noun") return RoleHint::kNoun;
  return std::nullopt;
}

GenderLexicon GenderLexicon::Load(const std::filesystem::path& path,
                                  WordList object_followers) {
  auto in = OpenOrThrow(path);
  GenderLexicon lexicon;
  lexicon.set_object_followers(std::move(object_followers));
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    line = StripCr(line);
    if (Trim(line).empty() || line[0] == '#') continue;
    const std::string where =
        path.string() + ":" + std::to_string(line_number) + ": ";
    const auto fields = SplitTabs(line);
    if (fields.size() < 2 || fields.size() > 3) {
      throw DataError(where + "expected 2 or 3 tab-separated fields");
    }
    const Text masculine = FromUtf8(Trim(fields[0]));
    const Text feminine = FromUtf8(Trim(fields[1]));
    try {
      if (masculine.empty() && feminine.empty()) {
        throw DataError("both columns empty");
      } else if (masculine.empty()) {
        lexicon.AddUnpaired(feminine, Gender::kFeminine);
      } else if (feminine.empty()) {
        lexicon.AddUnpaired(masculine, Gender::kMasculine);
      } else {
        GenderedPair pair{masculine, feminine, std::nullopt};
        if (fields.size() == 3 && !Trim(fields[2]).empty()) {
          pair.role_hint = ParseRoleHint(Trim(fields[2]));
          if (!pair.role_hint) {
            throw DataError("unknown role hint '" + fields[2] + "'");
          }
        }
        lexicon.AddPair(std::move(pair));
      }
    } catch (const DataError& e) {
      throw DataError(where + e.what());
    }
  }
  return lexicon;
}

void GenderLexicon::AddPair(GenderedPair pair) {
  pair.masculine = Lowercase(pair.masculine);
  pair.feminine = Lowercase(pair.feminine);
  if (pair.masculine == pair.feminine) {
    throw DataError("gendered pair maps '" + ToUtf8(pair.masculine) +
                    "' to itself");
  }
  for (const GenderedPair& existing : pairs_) {
    if (existing.role_hint != pair.role_hint) continue;
    if (existing.masculine == pair.masculine ||
        existing.feminine == pair.feminine) {
      throw DataError("duplicate gendered pair for '" +
                      ToUtf8(pair.masculine) + "'/'" + ToUtf8(pair.feminine) +
                      "' with the same role hint");
    }
  }
  to_feminine_.try_emplace(pair.masculine, pair.feminine);
  to_masculine_.try_emplace(pair.feminine, pair.masculine);
  if (pair.role_hint == RoleHint::kNoun) {
    nominal_[pair.masculine] = true;
    nominal_[pair.feminine] = true;
  }
  pairs_.push_back(std::move(pair));
}

void GenderLexicon::AddUnpaired(TextView word, Gender gender) {
  unpaired_[Lowercase(word)] = gender;
}

bool GenderLexicon::IsGendered(TextView token) const {
  return GenderOf(token) != Gender::kUnknown;
}

Gender GenderLexicon::GenderOf(TextView token) const {
  const Text lower = Lowercase(token);
  if (IsTargetPronoun(lower)) return PronounGender(lower);
  if (to_feminine_.contains(lower)) return Gender::kMasculine;
  if (to_masculine_.contains(lower)) return Gender::kFeminine;
  if (const auto it = unpaired_.find(lower); it != unpaired_.end()) {
    return it->second;
  }
  return Gender::kUnknown;
}

bool GenderLexicon::IsNominal(TextView token) const {
  return nominal_.contains(Lowercase(token));
}

bool GenderLexicon::HerIsDeterminer(std::optional<TextView> next_token) const {
  if (!next_token || IsPunctuationToken(*next_token)) return false;
  if (IsNominal(*next_token)) return true;
  return !object_followers_.Contains(*next_token);
}

Text GenderLexicon::SwapGenderedWord(
    TextView token, std::optional<TextView> next_token) const {
  const Text lower = Lowercase(token);
  if (lower == U"her") {
    return TransferCase(token, HerIsDeterminer(next_token) ? U"his" : U"him");
  }
  if (lower == U"his") {
    const bool standalone = !next_token || IsPunctuationToken(*next_token);
    return TransferCase(token, standalone ? U"hers" : U"her");
  }
  if (IsTargetPronoun(lower)) {
    return TransferCase(token, PronounCounterpart(lower));
  }
  if (const auto it = to_feminine_.find(lower); it != to_feminine_.end()) {
    return TransferCase(token, it->second);
  }
  if (const auto it = to_masculine_.find(lower); it != to_masculine_.end()) {
    return TransferCase(token, it->second);
  }
  if (unpaired_.contains(lower)) {
    throw DataError("gendered word '" + ToUtf8(token) +
                    "' has no counterpart in the lexicon");
  }
  return Text(token);
}

bool IsTargetPronoun(TextView token) {
  const Text lower = Lowercase(token);
  return lower == U"he" || lower == U"him" || lower == U"his" ||
         lower == U"she" || lower == U"her" || lower == U"hers";
}

Gender PronounGender(TextView pronoun) {
  const Text lower = Lowercase(pronoun);
  if (lower == U"he" || lower == U"him" || lower == U"his") {
    return Gender::kMasculine;
  }
  if (lower == U"she" || lower == U"her" || lower == U"hers") {
    return Gender::kFeminine;
  }
  return Gender::kUnknown;
}

Text PronounCounterpart(TextView pronoun) {
  const Text lower = Lowercase(pronoun);
  Text counterpart;
  if (lower == U"he") {
    counterpart = U"she";
  } else if (lower == U"she") {
    counterpart = U"he";
  } else if (lower == U"his") {
    counterpart = U"her";
  } else if (lower == U"him") {
    counterpart = U"her";
  } else if (lower == U"hers") {
    counterpart = U"his";
  } else if (lower == U"her") {
    counterpart = U"him";
  } else {
    throw DataError("'" + ToUtf8(pronoun) +
                    "' is not a gendered non-reflexive pronoun");
  }
  return TransferCase(pronoun, counterpart);
}

Gender TitleGender(TextView token) {
  Text lower = Lowercase(token);
  if (!lower.empty() && lower.back() == U'.') lower.pop_back();
  static const std::set<Text> kMasculine = {U"mr", U"master", U"sir",
                                            U"lord"};
  static const std::set<Text> kFeminine = {U"mrs",  U"ms",     U"miss",
                                           U"madam", U"madame", U"mme",
                                           U"mlle", U"lady"};
  if (kMasculine.contains(lower)) return Gender::kMasculine;
  if (kFeminine.contains(lower)) return Gender::kFeminine;
  return Gender::kUnknown;
}

bool IsTitle(TextView token) {
  if (TitleGender(token) != Gender::kUnknown) return true;
  Text lower = Lowercase(token);
  if (!lower.empty() && lower.back() == U'.') lower.pop_back();
  static const std::set<Text> kOther = {U"dr",   U"prof", U"rev", U"capt",
                                        U"col",  U"gen",  U"lt",  U"sgt",
                                        U"professor", U"doctor"};
  return kOther.contains(lower);
}

Gender GuessGender(const NameDatabase& db, TextView first_name,
                   std::optional<TextView> title) {
  if (title) {
    const Gender from_title = TitleGender(*title);
    if (from_title != Gender::kUnknown) return from_title;
  }
  const NameRecord* record = db.Lookup(first_name);
  if (record == nullptr) return Gender::kUnknown;
  return LabelGender(record->label);
}

}  // namespace quadcoref
