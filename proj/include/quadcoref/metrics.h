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

#ifndef QUADCOREF_METRICS_H_
#define QUADCOREF_METRICS_H_

#include <optional>
#include <span>
#include <string>

#include "quadcoref/lexicon.h"
#include "quadcoref/stats.h"

namespace quadcoref {

// Correctness bits of one quadruple: f(x_o), f(x_c), f(x~_o), f(x~_c).
struct QuadrupleScore {
  std::string quadruple_id;
  int f_o = 0;
  int f_c = 0;
  int f_so = 0;
  int f_sc = 0;
  Gender original_gender = Gender::kMasculine;
  friend bool operator==(const QuadrupleScore&, const QuadrupleScore&) =
      default;
};

using Scores = std::span<const QuadrupleScore>;

// Throws DataError on bits outside {0, 1} or an unknown original gender.
void ValidateScore(const QuadrupleScore& score);

// |f_o-f_so| + |f_c-f_sc| + |f_o-f_sc| + |f_c-f_so|, always in {0, 2, 4}.
int AcrossSum(const QuadrupleScore& q);
// |f_o-f_c| + |f_so-f_sc|, in {0, 1, 2}.
int WithinSum(const QuadrupleScore& q);

struct AccuracyDifference {
  double acc_m = 0.0;
  double acc_f = 0.0;
  double diff = 0.0;
};

// Group accuracies by instance pronoun gender: the original and controlled
// instances carry the original gender, the swapped ones the other.
AccuracyDifference AccDiff(Scores scores);

// Mean over quadruples of AcrossSum / 4.
double InconsistencyAcross(Scores scores);
// Mean over quadruples of WithinSum / 2.
double InconsistencyWithin(Scores scores);
// InconsistencyAcross - InconsistencyWithin. Positive signals gender bias.
double DeltaI(Scores scores);

struct Breakdowns {
  double within_m = 0.0;
  double within_f = 0.0;
  double within_diff = 0.0;
  double across_m2f = 0.0;
  double across_f2m = 0.0;
  double across_diff = 0.0;
};

// Within-gender inconsistency over the masculine pairs ((x_o, x_c) of
// masculine-original quadruples, (x~_o, x~_c) of feminine-original ones)
// and symmetrically for feminine; across-gender inconsistency restricted to
// masculine-original (M2F) and feminine-original (F2M) quadruples.
// nullopt for an empty group.
std::optional<double> WithinMasculine(Scores scores);
std::optional<double> WithinFeminine(Scores scores);
std::optional<double> AcrossMaleToFemale(Scores scores);
std::optional<double> AcrossFemaleToMale(Scores scores);
// Throws DataError if any group is empty.
Breakdowns ComputeBreakdowns(Scores scores);

struct SystematicBias {
  double acc_orig = 0.0;
  double acc_counter = 0.0;
  double diff = 0.0;
  // Between AcrossSum and original gender (masculine = 1, feminine = 0).
  std::optional<double> spearman_rho;
};

SystematicBias ComputeSystematicBias(Scores scores);

struct SignificanceTest {
  double observed = 0.0;
  double p_value = 1.0;
  // +1 when testing observed > 0, -1 when testing observed < 0.
  int direction = 1;
  bool significant = false;
};

struct MetricsReport {
  int quadruples = 0;
  int masculine_original = 0;
  int feminine_original = 0;
  AccuracyDifference accuracy;
  double i_within = 0.0;
  double i_across = 0.0;
  double delta_i = 0.0;
  std::optional<double> within_m;
  std::optional<double> within_f;
  std::optional<double> within_diff;
  std::optional<double> across_m2f;
  std::optional<double> across_f2m;
  std::optional<double> across_diff;
  SystematicBias systematic;
  SignificanceTest acc_diff_test;
  SignificanceTest delta_i_test;
  SignificanceTest systematic_test;
  BootstrapConfig bootstrap;
};

// Every metric plus one-sided bootstrap tests (quadruples are the
// resampling unit). Acc_Diff and the systematic difference are tested in
// the direction of their observed sign; delta I is always tested for > 0.
MetricsReport BuildReport(Scores scores, const BootstrapConfig& cfg,
                          int threads = 1);

// Plain-text tables in the layout of the usual bias result tables.
std::string FormatReport(const MetricsReport& report);

}  // namespace quadcoref

#endif  // QUADCOREF_METRICS_H_
