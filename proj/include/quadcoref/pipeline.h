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

#ifndef QUADCOREF_PIPELINE_H_
#define QUADCOREF_PIPELINE_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "quadcoref/annotation.h"
#include "quadcoref/cda.h"
#include "quadcoref/extraction.h"
#include "quadcoref/instance.h"
#include "quadcoref/metrics.h"
#include "quadcoref/resources.h"
#include "quadcoref/scoring.h"

namespace quadcoref {

struct ExtractResult {
  std::vector<Instance> instances;
  ExtractionStats stats;
  int documents = 0;
  std::vector<std::string> warnings;
};

// Throws DataError when the directory holds no readable document.
ExtractResult ExtractFromDirectory(const std::filesystem::path& corpus_dir,
                                   const Resources& resources,
                                   int threads = 1);

struct QuadrupleResult {
  std::vector<Quadruple> quadruples;
  // One line per discarded original.
  std::vector<std::string> diagnostics;
};

QuadrupleResult BuildQuadruples(const std::vector<Instance>& originals,
                                const Resources& resources);

struct AggregateResult {
  // Surviving quadruples with gold labels on every instance.
  std::vector<Quadruple> dataset;
  Agreement agreement;
  int input = 0;
  int invalid = 0;
  int inconsistent = 0;
  int consistent = 0;
  int downsampled = 0;
};

// Majority vote, validity filter, consistency filter, then balancing.
// Throws DataError listing every instance without exactly three records.
AggregateResult Aggregate(const std::vector<Quadruple>& quadruples,
                          const std::vector<AnnotationRecord>& records,
                          uint64_t seed);

// Baseline predictions for every instance of every quadruple.
std::vector<PredictionRecord> PredictAll(
    const std::vector<Quadruple>& quadruples);

struct ScoreResult {
  std::vector<QuadrupleScore> scores;
  std::vector<std::string> warnings;
};

// Duplicate prediction ids keep the last record, with a warning. Throws
// DataError listing instances without a prediction or without gold.
ScoreResult ScoreDataset(const std::vector<Quadruple>& dataset,
                         const std::vector<PredictionRecord>& predictions);

enum class CdaMode { kAnonymized, kNameSwap };

struct CdaCorpus {
  std::vector<Document> originals;
  std::vector<CdaOutput> transformed;
  std::vector<std::string> warnings;
};

// `matching` is required for kNameSwap.
CdaCorpus AugmentCorpus(const std::vector<Document>& documents, CdaMode mode,
                        const Resources& resources,
                        const NameMatching* matching);

}  // namespace quadcoref

#endif  // QUADCOREF_PIPELINE_H_
