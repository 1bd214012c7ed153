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

#include "quadcoref/annotation.h"

#include <algorithm>
#include <set>

#include "quadcoref/error.h"
#include "quadcoref/lexicon.h"
#include "quadcoref/random.h"

namespace quadcoref {
namespace {

void CheckBounds(const Instance& x, Span span) {
  if (span.begin < 0 || span.end < span.begin ||
      span.end > static_cast<int64_t>(x.text.size())) {
    throw DataError("span [" + std::to_string(span.begin) + ", " +
                    std::to_string(span.end) + ") outside instance " + x.id);
  }
}

bool CoversOccurrence(const NameSlot& slot, Span span) {
  return std::find(slot.spans.begin(), slot.spans.end(), span) !=
         slot.spans.end();
}

// Which name slot (0-3 for C1, C2, O1, O2) a normalized span covers.
std::optional<int> MatchSlot(const Instance& x, Span span) {
  const Span normalized = NormalizeNameSpan(x, span);
  for (int k = 0; k < 2; ++k) {
    if (CoversOccurrence(x.candidates[k], normalized)) return k;
    if (CoversOccurrence(x.opposites[k], normalized)) return k + 2;
  }
  return std::nullopt;
}

}  // namespace

Span NormalizeNameSpan(const Instance& x, Span span) {
  CheckBounds(x, span);
  span = TrimSpan(x.text, span);
  const TextView text = x.text;
  // Trailing possessive: "'s" or a bare apostrophe.
  if (span.size() >= 2 && IsApostrophe(text[span.end - 2]) &&
      (text[span.end - 1] == U's' || text[span.end - 1] == U'S')) {
    span.end -= 2;
  } else if (span.size() >= 1 && IsApostrophe(text[span.end - 1])) {
    span.end -= 1;
  }
  span = TrimSpan(x.text, span);
  // Leading title.
  for (int64_t k = span.begin; k < span.end; ++k) {
    if (IsSpace(text[k])) {
      if (IsTitle(text.substr(span.begin, k - span.begin))) {
        span.begin = k;
        span = TrimSpan(x.text, span);
      }
      break;
    }
  }
  return span;
}

std::optional<int> MatchCandidate(const Instance& x, Span span) {
  const auto slot = MatchSlot(x, span);
  if (slot && *slot < 2) return slot;
  return std::nullopt;
}

bool MatchesOpposite(const Instance& x, Span span) {
  const auto slot = MatchSlot(x, span);
  return slot && *slot >= 2;
}

DerivedLabel DeriveLabels(const AnnotationRecord& record, const Instance& x) {
  if (record.instance_id != x.id) {
    throw DataError("record for " + record.instance_id +
                    " applied to instance " + x.id);
  }
  DerivedLabel derived;
  if (record.none_flag) {
    for (const Span& span : record.selections) CheckBounds(x, span);
    return derived;
  }
  for (const Span& span : record.selections) {
    const auto slot = MatchSlot(x, span);
    if (!slot) {
      derived.violations.push_back(span);
    } else if (*slot == 0) {
      derived.label.c1 = true;
    } else if (*slot == 1) {
      derived.label.c2 = true;
    }
  }
  return derived;
}

std::vector<std::string> ValidateRecord(const AnnotationRecord& record,
                                        const Instance& x) {
  std::vector<std::string> problems;
  for (const Span& span : record.selections) CheckBounds(x, span);
  if (record.none_flag && !record.selections.empty()) {
    problems.emplace_back(kNoneMisused);
  }
  if (!record.none_flag && !record.invalid_flag && record.selections.empty()) {
    problems.emplace_back(kNothingSelected);
  }
  std::set<int> slots;
  bool unmatched = false;
  for (const Span& span : record.selections) {
    if (const auto slot = MatchSlot(x, span)) {
      slots.insert(*slot);
    } else {
      unmatched = true;
    }
  }
  if (unmatched) problems.emplace_back(kNotAName);
  if (slots.size() > 1) problems.emplace_back(kMultipleEntities);
  return problems;
}

std::optional<AggregatedLabel> MajorityVote(
    const std::vector<AnnotationRecord>& records, const Instance& x) {
  if (records.size() < 3) {
    throw DataError("incomplete annotation for " + x.id + ": " +
                    std::to_string(records.size()) + " of 3 records");
  }
  if (records.size() > 3) {
    throw DataError("too many annotations for " + x.id + ": " +
                    std::to_string(records.size()) + " records");
  }
  int invalid = 0;
  int c1 = 0;
  int c2 = 0;
  for (const AnnotationRecord& record : records) {
    if (record.invalid_flag) ++invalid;
    const DerivedLabel derived = DeriveLabels(record, x);
    c1 += derived.label.c1 ? 1 : 0;
    c2 += derived.label.c2 ? 1 : 0;
  }
  if (invalid >= 2) return std::nullopt;
  return AggregatedLabel{c1 >= 2, c2 >= 2};
}

bool QuadrupleConsistent(const Quadruple& q, const QuadrupleLabels& labels) {
  // A coreferent name is identified by the ranks of its occurrences among
  // all name occurrences; ranks line up across the four variants.
  std::optional<std::set<size_t>> reference;
  for (const Variant v : kAllVariants) {
    const auto& label = labels[static_cast<size_t>(v)];
    if (!label) return false;
    const Instance& x = q.at(v);
    std::vector<Span> all;
    for (const auto* group : {&x.candidates, &x.opposites}) {
      for (const NameSlot& slot : *group) {
        all.insert(all.end(), slot.spans.begin(), slot.spans.end());
      }
    }
    std::sort(all.begin(), all.end());
    std::set<size_t> positions;
    const bool flags[2] = {label->c1, label->c2};
    for (int k = 0; k < 2; ++k) {
      if (!flags[k]) continue;
      for (const Span& span : x.candidates[k].spans) {
        positions.insert(static_cast<size_t>(
            std::lower_bound(all.begin(), all.end(), span) - all.begin()));
      }
    }
    if (!reference) {
      reference = std::move(positions);
    } else if (*reference != positions) {
      return false;
    }
  }
  return true;
}

Agreement InterAnnotatorAgreement(
    const std::vector<std::pair<const Instance*, std::vector<AnnotationRecord>>>&
        per_instance) {
  Agreement agreement;
  double majority_sum = 0.0;
  double pairwise_sum = 0.0;
  for (const auto& [instance, records] : per_instance) {
    if (records.empty()) continue;
    std::vector<AggregatedLabel> labels;
    int c1 = 0;
    int c2 = 0;
    for (const AnnotationRecord& record : records) {
      labels.push_back(DeriveLabels(record, *instance).label);
      c1 += labels.back().c1 ? 1 : 0;
      c2 += labels.back().c2 ? 1 : 0;
    }
    const auto n = static_cast<int>(labels.size());
    const AggregatedLabel majority{2 * c1 > n, 2 * c2 > n};
    const auto agreeing = std::count(labels.begin(), labels.end(), majority);
    majority_sum += static_cast<double>(agreeing) / n;
    int pairs = 0;
    int agreeing_pairs = 0;
    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        ++pairs;
        if (labels[a] == labels[b]) ++agreeing_pairs;
      }
    }
    pairwise_sum +=
        pairs == 0 ? 1.0 : static_cast<double>(agreeing_pairs) / pairs;
    ++agreement.instances;
  }
  if (agreement.instances > 0) {
    agreement.majority = majority_sum / agreement.instances;
    agreement.pairwise = pairwise_sum / agreement.instances;
  }
  return agreement;
}

std::vector<Quadruple> BalanceDownsample(const std::vector<Quadruple>& quadruples,
                                         uint64_t seed) {
  std::vector<size_t> masculine;
  std::vector<size_t> feminine;
  for (size_t k = 0; k < quadruples.size(); ++k) {
    if (quadruples[k].original_gender == Gender::kMasculine) {
      masculine.push_back(k);
    } else if (quadruples[k].original_gender == Gender::kFeminine) {
      feminine.push_back(k);
    }
  }
  std::vector<size_t>& larger =
      masculine.size() >= feminine.size() ? masculine : feminine;
  const size_t target = std::min(masculine.size(), feminine.size());
  std::mt19937_64 rng(seed);
  // Partial Fisher-Yates: the first `target` entries become the sample.
  for (size_t k = 0; k < target; ++k) {
    const size_t pick = k + UniformBelow(rng, larger.size() - k);
    std::swap(larger[k], larger[pick]);
  }
  larger.resize(target);
  std::vector<size_t> kept = masculine;
  kept.insert(kept.end(), feminine.begin(), feminine.end());
  std::sort(kept.begin(), kept.end());
  std::vector<Quadruple> out;
  out.reserve(kept.size());
  for (const size_t k : kept) out.push_back(quadruples[k]);
  return out;
}

}  // namespace quadcoref
