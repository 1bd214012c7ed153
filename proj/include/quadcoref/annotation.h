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

#ifndef QUADCOREF_ANNOTATION_H_
#define QUADCOREF_ANNOTATION_H_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "quadcoref/instance.h"

namespace quadcoref {

struct AnnotationRecord {
  std::string instance_id;
  std::string annotator_id;
  std::vector<Span> selections;
  bool none_flag = false;     // "no names are coreferent"
  bool invalid_flag = false;  // contradicts commonsense knowledge
  std::string timestamp;
  friend bool operator==(const AnnotationRecord&,
                         const AnnotationRecord&) = default;
};

// Trims whitespace, drops a leading title and a trailing possessive from a
// selected or predicted span so it can be compared with a name token.
Span NormalizeNameSpan(const Instance& x, Span span);

// Index of the candidate slot (0 for C1, 1 for C2) with an occurrence
// exactly covered by `span` after normalization.
std::optional<int> MatchCandidate(const Instance& x, Span span);
bool MatchesOpposite(const Instance& x, Span span);

struct DerivedLabel {
  AggregatedLabel label;
  // Selections that match neither a candidate nor an opposite name.
  std::vector<Span> violations;
};

// Throws DataError if the record belongs to another instance or a span is
// out of bounds.
DerivedLabel DeriveLabels(const AnnotationRecord& record, const Instance& x);

// The on-submission checks, as messages. Empty means acceptable.
inline constexpr char kNotAName[] = "not a personal name";
inline constexpr char kMultipleEntities[] = "multiple entities";
inline constexpr char kNoneMisused[] = "\"no names are coreferent\" box misused";
inline constexpr char kNothingSelected[] = "nothing selected";
std::vector<std::string> ValidateRecord(const AnnotationRecord& record,
                                        const Instance& x);

// 2-of-3 majority per candidate. Returns nullopt when at least two
// annotators flagged the instance invalid. Throws DataError unless exactly
// three records are given.
std::optional<AggregatedLabel> MajorityVote(
    const std::vector<AnnotationRecord>& records, const Instance& x);

// The labels of each variant in Variant order; nullopt marks an invalid
// instance.
using QuadrupleLabels = std::array<std::optional<AggregatedLabel>, 4>;

// True when every variant marks the same token positions as coreferent.
bool QuadrupleConsistent(const Quadruple& q, const QuadrupleLabels& labels);

struct Agreement {
  // Mean fraction of annotators agreeing with the majority label pair.
  double majority = 0.0;
  // Mean fraction of annotator pairs with identical label pairs.
  double pairwise = 0.0;
  int instances = 0;
};

// `per_instance` holds the three records of each instance with the
// instance they annotate.
Agreement InterAnnotatorAgreement(
    const std::vector<std::pair<const Instance*, std::vector<AnnotationRecord>>>&
        per_instance);

// Uniformly subsamples the larger original-gender group down to the size of
// the smaller one. Kept quadruples retain their input order.
std::vector<Quadruple> BalanceDownsample(const std::vector<Quadruple>& quadruples,
                                         uint64_t seed);

}  // namespace quadcoref

#endif  // QUADCOREF_ANNOTATION_H_
