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

#ifndef QUADCOREF_SCORING_H_
#define QUADCOREF_SCORING_H_

#include <string>
#include <vector>

#include "quadcoref/instance.h"

namespace quadcoref {

// The cluster a predictor places the target pronoun in, pronoun excluded.
// Spans are in the instance text's offsets.
struct PredictionRecord {
  std::string instance_id;
  std::vector<Span> pronoun_cluster;
  friend bool operator==(const PredictionRecord&,
                         const PredictionRecord&) = default;
};

// Drops the period of "Mr.", "Mrs.", "Ms." and "Dr.". The returned
// EditedText maps offsets both ways between the original and normalized
// text.
EditedText NormalizeTitles(TextView text);

// Maps cluster spans stated on title-normalized text back to the original.
PredictionRecord MapPredictionToOriginal(const PredictionRecord& normalized,
                                         const EditedText& normalization);

// 1 iff every TRUE candidate and no FALSE candidate has an occurrence
// exactly covered (after NormalizeNameSpan) by a cluster span. Throws
// DataError on an id mismatch.
int ScoreInstance(const PredictionRecord& prediction, const Instance& x,
                  const AggregatedLabel& gold);

// Deterministic reference predictor: clusters the pronoun with the nearest
// gender-consistent candidate occurrence before it, or failing that the
// nearest one after it.
PredictionRecord PredictBaseline(const Instance& x);

}  // namespace quadcoref

#endif  // QUADCOREF_SCORING_H_
