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

#ifndef QUADCOREF_CDA_H_
#define QUADCOREF_CDA_H_

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "quadcoref/corpus.h"
#include "quadcoref/extraction.h"
#include "quadcoref/lexicon.h"
#include "quadcoref/text.h"

namespace quadcoref {

inline constexpr double kDefaultMatchAlpha = 12.0 / 11.0;

// ||a - b||_2 * (alpha - cos(a, b)). The cosine involving a zero vector is
// taken as 0. Throws DataError when the dimensions differ.
double EdgeWeight(std::span<const int> a, std::span<const int> b,
                  double alpha = kDefaultMatchAlpha);

struct Assignment {
  // (row, column) pairs, one per node of the smaller side, sorted by row.
  std::vector<std::pair<int, int>> pairs;
  double total_weight = 0.0;
};

// Minimum-weight matching that covers every node of the smaller side of a
// rectangular weight matrix (successive shortest paths with potentials).
// Throws DataError on an empty or ragged matrix.
Assignment MinWeightFullMatching(
    const std::vector<std::vector<double>>& weights);

struct NamePair {
  Text masculine;
  Text feminine;
  double weight = 0.0;
};

class NameMatching {
 public:
  NameMatching() = default;

  void Add(NamePair pair);
  // Partner of a lowercase first name in either direction.
  std::optional<Text> Partner(TextView name) const;

  const std::vector<NamePair>& pairs() const { return pairs_; }
  double total_weight() const { return total_weight_; }

  // One "male<TAB>female" line per pair, then "# total_weight<TAB>w".
  std::string ToTsv() const;
  static NameMatching FromTsv(std::string_view tsv);
  static NameMatching Load(const std::filesystem::path& path);

 private:
  std::vector<NamePair> pairs_;
  std::map<Text, Text> partner_;
  double total_weight_ = 0.0;
};

// Matches `left` against `right` by frequency vectors; both lists are
// sorted by name first so ties break lexicographically.
NameMatching MatchRecords(std::vector<NameRecord> left,
                          std::vector<NameRecord> right,
                          double alpha = kDefaultMatchAlpha);

// male <-> female and mostly_male <-> mostly_female, solved separately and
// concatenated. Each distinct name takes the record Lookup prefers.
NameMatching MatchNames(const NameDatabase& db,
                        double alpha = kDefaultMatchAlpha);

struct CdaOutput {
  std::string document_id;
  EditedText edited;
  std::vector<std::string> warnings;
};

// Gendered words swapped; each distinct name (title excluded) replaced by
// E1, E2, ... in order of first appearance.
CdaOutput AcdaTransform(const Document& doc,
                        const std::vector<Mention>& mentions,
                        const GenderLexicon& lexicon);

// Gendered words and titles swapped; each name's first-name token replaced
// by its matched partner. Names without a partner fall back to
// placeholders, with a warning.
CdaOutput NcdaTransform(const Document& doc,
                        const std::vector<Mention>& mentions,
                        const NameMatching& matching,
                        const GenderLexicon& lexicon);

}  // namespace quadcoref

#endif  // QUADCOREF_CDA_H_
