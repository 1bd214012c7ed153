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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "quadcoref/error.h"

namespace quadcoref {
namespace {

// Rows must not outnumber columns. Returns the column of each row.
std::vector<int> SolveRowsIntoColumns(
    const std::vector<std::vector<double>>& w) {
  const int n = static_cast<int>(w.size());
  const int m = static_cast<int>(w[0].size());
  const double inf = std::numeric_limits<double>::infinity();
  // 1-based: row_of[j] is the row matched to column j, 0 if free.
  std::vector<double> u(n + 1, 0.0);
  std::vector<double> v(m + 1, 0.0);
  std::vector<int> row_of(m + 1, 0);
  std::vector<int> way(m + 1, 0);
  for (int i = 1; i <= n; ++i) {
    row_of[0] = i;
    int j0 = 0;
    std::vector<double> min_v(m + 1, inf);
    std::vector<bool> used(m + 1, false);
    do {
      used[j0] = true;
      const int i0 = row_of[j0];
      double delta = inf;
      int j1 = 0;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = w[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < min_v[j]) {
          min_v[j] = cur;
          way[j] = j0;
        }
        if (min_v[j] < delta) {
          delta = min_v[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[row_of[j]] += delta;
          v[j] -= delta;
        } else {
          min_v[j] -= delta;
        }
      }
      j0 = j1;
    } while (row_of[j0] != 0);
    do {
      const int j1 = way[j0];
      row_of[j0] = row_of[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> column(n, -1);
  for (int j = 1; j <= m; ++j) {
    if (row_of[j] != 0) column[row_of[j] - 1] = j - 1;
  }
  return column;
}

std::string FormatWeight(double w) {
  std::ostringstream out;
  out.precision(17);
  out << w;
  return out.str();
}

std::vector<NameRecord> DistinctWithLabel(const NameDatabase& db,
                                          NameLabel label) {
  std::vector<NameRecord> out;
  std::vector<Text> seen;
  for (const NameRecord& record : db.records()) {
    if (std::find(seen.begin(), seen.end(), record.name) != seen.end()) {
      continue;
    }
    seen.push_back(record.name);
    const NameRecord* preferred = db.Lookup(record.name);
    if (preferred != nullptr && preferred->label == label) {
      out.push_back(*preferred);
    }
  }
  return out;
}

bool InsideAny(const std::vector<Span>& spans, const Span& span) {
  return std::any_of(spans.begin(), spans.end(),
                     [&](const Span& s) { return s.Overlaps(span); });
}

// The part of a name mention after its title.
Span NameBody(const Mention& m) { return {m.head.begin, m.span.end}; }

// Swaps every gendered token outside `protected_spans`.
void SwapWords(const Document& doc, const std::vector<Span>& protected_spans,
               const GenderLexicon& lexicon, std::vector<Edit>* edits) {
  std::vector<const Token*> tokens;
  for (const Sentence& s : doc.sentences) {
    for (const Token& t : s.tokens) tokens.push_back(&t);
  }
  for (size_t k = 0; k < tokens.size(); ++k) {
    const Token& token = *tokens[k];
    if (InsideAny(protected_spans, token.span) ||
        !lexicon.IsGendered(token.text)) {
      continue;
    }
    std::optional<TextView> next;
    if (k + 1 < tokens.size()) next = TextView(tokens[k + 1]->text);
    Text swapped = lexicon.SwapGenderedWord(token.text, next);
    if (swapped != token.text) edits->push_back({token.span, std::move(swapped)});
  }
}

std::vector<const Mention*> Names(const std::vector<Mention>& mentions) {
  std::vector<const Mention*> names;
  for (const Mention& m : mentions) {
    if (m.kind == MentionKind::kPersonalName) names.push_back(&m);
  }
  return names;
}

Text Placeholder(size_t index) {
  return FromUtf8("E" + std::to_string(index + 1));
}

}  // namespace

double EdgeWeight(std::span<const int> a, std::span<const int> b,
                  double alpha) {
  if (a.size() != b.size()) {
    throw DataError("edge weight: vectors differ in dimension (" +
                    std::to_string(a.size()) + " vs " +
                    std::to_string(b.size()) + ")");
  }
  double dist2 = 0.0;
  double dot = 0.0;
  double norm_a = 0.0;
  double norm_b = 0.0;
  for (size_t k = 0; k < a.size(); ++k) {
    const double x = a[k];
    const double y = b[k];
    dist2 += (x - y) * (x - y);
    dot += x * y;
    norm_a += x * x;
    norm_b += y * y;
  }
  const double cosine =
      norm_a == 0.0 || norm_b == 0.0 ? 0.0 : dot / std::sqrt(norm_a * norm_b);
  return std::sqrt(dist2) * (alpha - cosine);
}

Assignment MinWeightFullMatching(
    const std::vector<std::vector<double>>& weights) {
  if (weights.empty() || weights[0].empty()) {
    throw DataError("matching needs two non-empty sides");
  }
  const size_t cols = weights[0].size();
  for (const auto& row : weights) {
    if (row.size() != cols) throw DataError("ragged weight matrix");
  }
  Assignment result;
  if (weights.size() <= cols) {
    const std::vector<int> column = SolveRowsIntoColumns(weights);
    for (size_t i = 0; i < column.size(); ++i) {
      result.pairs.emplace_back(static_cast<int>(i), column[i]);
    }
  } else {
    std::vector<std::vector<double>> transposed(
        cols, std::vector<double>(weights.size()));
    for (size_t i = 0; i < weights.size(); ++i) {
      for (size_t j = 0; j < cols; ++j) transposed[j][i] = weights[i][j];
    }
    const std::vector<int> row = SolveRowsIntoColumns(transposed);
    for (size_t j = 0; j < row.size(); ++j) {
      result.pairs.emplace_back(row[j], static_cast<int>(j));
    }
    std::sort(result.pairs.begin(), result.pairs.end());
  }
  for (const auto& [i, j] : result.pairs) {
    result.total_weight += weights[i][j];
  }
  return result;
}

void NameMatching::Add(NamePair pair) {
  if (partner_.count(pair.masculine) || partner_.count(pair.feminine)) {
    throw DataError("name matched twice: " + ToUtf8(pair.masculine) + " / " +
                    ToUtf8(pair.feminine));
  }
  partner_[pair.masculine] = pair.feminine;
  partner_[pair.feminine] = pair.masculine;
  total_weight_ += pair.weight;
  pairs_.push_back(std::move(pair));
}

std::optional<Text> NameMatching::Partner(TextView name) const {
  const auto it = partner_.find(Lowercase(name));
  if (it == partner_.end()) return std::nullopt;
  return it->second;
}

std::string NameMatching::ToTsv() const {
  std::string out;
  for (const NamePair& p : pairs_) {
    out += ToUtf8(p.masculine) + "\t" + ToUtf8(p.feminine) + "\n";
  }
  out += "# total_weight\t" + FormatWeight(total_weight_) + "\n";
  return out;
}

NameMatching NameMatching::FromTsv(std::string_view tsv) {
  NameMatching matching;
  std::istringstream in{std::string(tsv)};
  std::string line;
  int number = 0;
  std::optional<double> total;
  constexpr std::string_view kTotal = "# total_weight\t";
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.starts_with(kTotal)) {
      try {
        total = std::stod(line.substr(kTotal.size()));
      } catch (const std::exception&) {
        throw DataError("matching line " + std::to_string(number) +
                        ": bad total weight");
      }
      continue;
    }
    if (line.empty() || line[0] == '#') continue;
    const size_t tab = line.find('\t');
    if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos) {
      throw DataError("matching line " + std::to_string(number) +
                      ": expected two tab-separated names");
    }
    const Text masc = Lowercase(FromUtf8(line.substr(0, tab)));
    const Text fem = Lowercase(FromUtf8(line.substr(tab + 1)));
    if (masc.empty() || fem.empty()) {
      throw DataError("matching line " + std::to_string(number) +
                      ": empty name");
    }
    matching.Add({masc, fem, 0.0});
  }
  if (total) matching.total_weight_ = *total;
  return matching;
}

NameMatching NameMatching::Load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot read matching file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return FromTsv(buffer.str());
}

NameMatching MatchRecords(std::vector<NameRecord> left,
                          std::vector<NameRecord> right, double alpha) {
  NameMatching matching;
  if (left.empty() || right.empty()) return matching;
  const auto by_name = [](const NameRecord& a, const NameRecord& b) {
    return a.name < b.name;
  };
  std::sort(left.begin(), left.end(), by_name);
  std::sort(right.begin(), right.end(), by_name);
  std::vector<std::vector<double>> weights(left.size(),
                                           std::vector<double>(right.size()));
  for (size_t i = 0; i < left.size(); ++i) {
    for (size_t j = 0; j < right.size(); ++j) {
      weights[i][j] = EdgeWeight(left[i].freq, right[j].freq, alpha);
    }
  }
  for (const auto& [i, j] : MinWeightFullMatching(weights).pairs) {
    matching.Add({left[i].name, right[j].name, weights[i][j]});
  }
  return matching;
}

NameMatching MatchNames(const NameDatabase& db, double alpha) {
  NameMatching all;
  const std::pair<NameLabel, NameLabel> problems[] = {
      {NameLabel::kMale, NameLabel::kFemale},
      {NameLabel::kMostlyMale, NameLabel::kMostlyFemale}};
  for (const auto& [masc, fem] : problems) {
    NameMatching part = MatchRecords(DistinctWithLabel(db, masc),
                                     DistinctWithLabel(db, fem), alpha);
    for (const NamePair& p : part.pairs()) all.Add(p);
  }
  return all;
}

CdaOutput AcdaTransform(const Document& doc,
                        const std::vector<Mention>& mentions,
                        const GenderLexicon& lexicon) {
  std::vector<Edit> edits;
  std::vector<Span> bodies;
  std::vector<Text> keys;
  for (const Mention* m : Names(mentions)) {
    const Span body = NameBody(*m);
    bodies.push_back(body);
    auto it = std::find(keys.begin(), keys.end(), m->full_key);
    if (it == keys.end()) it = keys.insert(keys.end(), m->full_key);
    edits.push_back({body, Placeholder(it - keys.begin())});
  }
  SwapWords(doc, bodies, lexicon, &edits);
  return {doc.id, EditedText(doc.text, std::move(edits)), {}};
}

CdaOutput NcdaTransform(const Document& doc,
                        const std::vector<Mention>& mentions,
                        const NameMatching& matching,
                        const GenderLexicon& lexicon) {
  std::vector<Edit> edits;
  std::vector<Span> bodies;
  std::vector<Text> unmatched;
  std::vector<std::string> warnings;
  for (const Mention* m : Names(mentions)) {
    const Span body = NameBody(*m);
    bodies.push_back(body);
    const TextView head = doc.Slice(m->head);
    if (const auto partner = matching.Partner(head)) {
      edits.push_back({m->head, TransferCase(head, *partner)});
      continue;
    }
    auto it = std::find(unmatched.begin(), unmatched.end(), m->full_key);
    if (it == unmatched.end()) {
      warnings.push_back(doc.id + ": no partner for name '" +
                         ToUtf8(m->full_key) + "', using a placeholder");
      it = unmatched.insert(unmatched.end(), m->full_key);
    }
    edits.push_back({body, Placeholder(it - unmatched.begin())});
  }
  SwapWords(doc, bodies, lexicon, &edits);
  return {doc.id, EditedText(doc.text, std::move(edits)), std::move(warnings)};
}

}  // namespace quadcoref
