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

#include "quadcoref/scoring.h"

#include <optional>

#include "quadcoref/annotation.h"
#include "quadcoref/error.h"

namespace quadcoref {
namespace {

bool StartsWithAt(TextView text, size_t pos, TextView word) {
  if (pos + word.size() > text.size()) return false;
  for (size_t k = 0; k < word.size(); ++k) {
    if (ToLower(text[pos + k]) != word[k]) return false;
  }
  return true;
}

}  // namespace

EditedText NormalizeTitles(TextView text) {
  static constexpr std::u32string_view kTitles[] = {U"mrs.", U"mr.", U"ms.",
                                                    U"dr."};
  std::vector<Edit> edits;
  for (size_t pos = 0; pos < text.size(); ++pos) {
    if (pos > 0 && IsWordChar(text[pos - 1])) continue;
    for (const auto title : kTitles) {
      if (StartsWithAt(text, pos, title)) {
        const auto period = static_cast<int64_t>(pos + title.size() - 1);
        edits.push_back({{period, period + 1}, Text()});
        pos += title.size() - 1;
        break;
      }
    }
  }
  return EditedText(text, std::move(edits));
}

PredictionRecord MapPredictionToOriginal(const PredictionRecord& normalized,
                                         const EditedText& normalization) {
  PredictionRecord out;
  out.instance_id = normalized.instance_id;
  for (const Span& span : normalized.pronoun_cluster) {
    out.pronoun_cluster.push_back(normalization.UnmapSpan(span));
  }
  return out;
}

int ScoreInstance(const PredictionRecord& prediction, const Instance& x,
                  const AggregatedLabel& gold) {
  if (prediction.instance_id != x.id) {
    throw DataError("prediction for " + prediction.instance_id +
                    " scored against instance " + x.id);
  }
  bool in_cluster[2] = {false, false};
  for (const Span& span : prediction.pronoun_cluster) {
    if (const auto k = MatchCandidate(x, span)) in_cluster[*k] = true;
  }
  const bool gold_flags[2] = {gold.c1, gold.c2};
  for (int k = 0; k < 2; ++k) {
    if (gold_flags[k] != in_cluster[k]) return 0;
  }
  return 1;
}

PredictionRecord PredictBaseline(const Instance& x) {
  const int64_t pronoun = x.pronoun_span.begin;
  std::optional<Span> before;
  std::optional<Span> after;
  for (const NameSlot& slot : x.candidates) {
    for (const Span& span : slot.spans) {
      if (span.end <= pronoun) {
        if (!before || span.begin > before->begin) before = span;
      } else if (span.begin >= x.pronoun_span.end) {
        if (!after || span.begin < after->begin) after = span;
      }
    }
  }
  PredictionRecord prediction;
  prediction.instance_id = x.id;
  if (before) {
    prediction.pronoun_cluster.push_back(*before);
  } else if (after) {
    prediction.pronoun_cluster.push_back(*after);
  }
  return prediction;
}

}  // namespace quadcoref
