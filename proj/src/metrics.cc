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

#include "quadcoref/metrics.h"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "quadcoref/error.h"

namespace quadcoref {
namespace {

void RequireNonEmpty(Scores scores, const char* what) {
  if (scores.empty()) {
    throw DataError(std::string(what) + " over an empty set of quadruples");
  }
}

int Abs(int v) { return v < 0 ? -v : v; }

// Mean of |a - b| over the pairs collected by `visit`.
template <typename Visit>
std::optional<double> MeanPairDisagreement(Scores scores, Visit visit) {
  int pairs = 0;
  int disagreements = 0;
  for (const QuadrupleScore& q : scores) {
    visit(q, [&](int a, int b) {
      ++pairs;
      disagreements += Abs(a - b);
    });
  }
  if (pairs == 0) return std::nullopt;
  return static_cast<double>(disagreements) / pairs;
}

std::optional<double> AcrossFor(Scores scores, Gender original) {
  int count = 0;
  int sum = 0;
  for (const QuadrupleScore& q : scores) {
    if (q.original_gender != original) continue;
    ++count;
    sum += AcrossSum(q);
  }
  if (count == 0) return std::nullopt;
  return static_cast<double>(sum) / (4.0 * count);
}

std::optional<double> Difference(const std::optional<double>& a,
                                 const std::optional<double>& b) {
  if (!a || !b) return std::nullopt;
  return *a - *b;
}

std::string Percent(const std::optional<double>& value, bool sign = false) {
  if (!value) return "n/a";
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), sign ? "%+.2f%%" : "%.2f%%",
                *value * 100.0);
  return buffer;
}

std::string Stars(const SignificanceTest& test) {
  return test.significant ? "*" : "";
}

SignificanceTest RunTest(Scores scores, double observed, int direction,
                         double (*statistic)(Scores),
                         const BootstrapConfig& cfg, int threads) {
  SignificanceTest test;
  test.observed = observed;
  test.direction = direction;
  const std::function<double(Scores)> oriented = [&](Scores sample) {
    return direction * statistic(sample);
  };
  test.p_value = BootstrapOneSided<QuadrupleScore>(scores, oriented, cfg,
                                                   threads);
  test.significant = test.p_value < cfg.alpha;
  return test;
}

}  // namespace

void ValidateScore(const QuadrupleScore& score) {
  for (const int bit : {score.f_o, score.f_c, score.f_so, score.f_sc}) {
    if (bit != 0 && bit != 1) {
      throw DataError("quadruple " + score.quadruple_id +
                      ": correctness bits must be 0 or 1");
    }
  }
  if (score.original_gender == Gender::kUnknown) {
    throw DataError("quadruple " + score.quadruple_id +
                    ": original gender unknown");
  }
}

int AcrossSum(const QuadrupleScore& q) {
  return Abs(q.f_o - q.f_so) + Abs(q.f_c - q.f_sc) + Abs(q.f_o - q.f_sc) +
         Abs(q.f_c - q.f_so);
}

int WithinSum(const QuadrupleScore& q) {
  return Abs(q.f_o - q.f_c) + Abs(q.f_so - q.f_sc);
}

AccuracyDifference AccDiff(Scores scores) {
  RequireNonEmpty(scores, "Acc_Diff");
  int correct_m = 0;
  int total_m = 0;
  int correct_f = 0;
  int total_f = 0;
  for (const QuadrupleScore& q : scores) {
    const int original = q.f_o + q.f_c;
    const int counter = q.f_so + q.f_sc;
    if (q.original_gender == Gender::kMasculine) {
      correct_m += original;
      correct_f += counter;
    } else {
      correct_f += original;
      correct_m += counter;
    }
    total_m += 2;
    total_f += 2;
  }
  AccuracyDifference result;
  result.acc_m = static_cast<double>(correct_m) / total_m;
  result.acc_f = static_cast<double>(correct_f) / total_f;
  result.diff = result.acc_m - result.acc_f;
  return result;
}

double InconsistencyAcross(Scores scores) {
  RequireNonEmpty(scores, "I_across");
  long sum = 0;
  for (const QuadrupleScore& q : scores) sum += AcrossSum(q);
  return static_cast<double>(sum) / (4.0 * static_cast<double>(scores.size()));
}

double InconsistencyWithin(Scores scores) {
  RequireNonEmpty(scores, "I_within");
  long sum = 0;
  for (const QuadrupleScore& q : scores) sum += WithinSum(q);
  return static_cast<double>(sum) / (2.0 * static_cast<double>(scores.size()));
}

double DeltaI(Scores scores) {
  return InconsistencyAcross(scores) - InconsistencyWithin(scores);
}

std::optional<double> WithinMasculine(Scores scores) {
  return MeanPairDisagreement(scores, [](const QuadrupleScore& q, auto add) {
    if (q.original_gender == Gender::kMasculine) {
      add(q.f_o, q.f_c);
    } else {
      add(q.f_so, q.f_sc);
    }
  });
}

std::optional<double> WithinFeminine(Scores scores) {
  return MeanPairDisagreement(scores, [](const QuadrupleScore& q, auto add) {
    if (q.original_gender == Gender::kFeminine) {
      add(q.f_o, q.f_c);
    } else {
      add(q.f_so, q.f_sc);
    }
  });
}

std::optional<double> AcrossMaleToFemale(Scores scores) {
  return AcrossFor(scores, Gender::kMasculine);
}

std::optional<double> AcrossFemaleToMale(Scores scores) {
  return AcrossFor(scores, Gender::kFeminine);
}

Breakdowns ComputeBreakdowns(Scores scores) {
  const auto within_m = WithinMasculine(scores);
  const auto within_f = WithinFeminine(scores);
  const auto m2f = AcrossMaleToFemale(scores);
  const auto f2m = AcrossFemaleToMale(scores);
  if (!within_m || !within_f) {
    throw DataError("within-gender breakdown has an empty group");
  }
  if (!m2f) throw DataError("no masculine-original quadruples for M2F");
  if (!f2m) throw DataError("no feminine-original quadruples for F2M");
  return {*within_m, *within_f, *within_m - *within_f,
          *m2f,      *f2m,      *m2f - *f2m};
}

SystematicBias ComputeSystematicBias(Scores scores) {
  RequireNonEmpty(scores, "systematic bias");
  int orig = 0;
  int counter = 0;
  std::vector<double> across;
  std::vector<double> gender;
  for (const QuadrupleScore& q : scores) {
    orig += q.f_o + q.f_c;
    counter += q.f_so + q.f_sc;
    across.push_back(AcrossSum(q));
    gender.push_back(q.original_gender == Gender::kMasculine ? 1.0 : 0.0);
  }
  SystematicBias bias;
  const double total = 2.0 * static_cast<double>(scores.size());
  bias.acc_orig = orig / total;
  bias.acc_counter = counter / total;
  bias.diff = bias.acc_orig - bias.acc_counter;
  if (scores.size() >= 2) bias.spearman_rho = Spearman(across, gender);
  return bias;
}

MetricsReport BuildReport(Scores scores, const BootstrapConfig& cfg,
                          int threads) {
  RequireNonEmpty(scores, "report");
  for (const QuadrupleScore& q : scores) ValidateScore(q);
  MetricsReport report;
  report.bootstrap = cfg;
  report.quadruples = static_cast<int>(scores.size());
  for (const QuadrupleScore& q : scores) {
    if (q.original_gender == Gender::kMasculine) {
      ++report.masculine_original;
    } else {
      ++report.feminine_original;
    }
  }
  report.accuracy = AccDiff(scores);
  report.i_across = InconsistencyAcross(scores);
  report.i_within = InconsistencyWithin(scores);
  report.delta_i = report.i_across - report.i_within;
  report.within_m = WithinMasculine(scores);
  report.within_f = WithinFeminine(scores);
  report.within_diff = Difference(report.within_m, report.within_f);
  report.across_m2f = AcrossMaleToFemale(scores);
  report.across_f2m = AcrossFemaleToMale(scores);
  report.across_diff = Difference(report.across_m2f, report.across_f2m);
  report.systematic = ComputeSystematicBias(scores);

  const int acc_direction = report.accuracy.diff < 0 ? -1 : 1;
  report.acc_diff_test = RunTest(
      scores, report.accuracy.diff, acc_direction,
      [](Scores s) { return AccDiff(s).diff; }, cfg, threads);
  report.delta_i_test =
      RunTest(scores, report.delta_i, 1, &DeltaI, cfg, threads);
  const int sys_direction = report.systematic.diff < 0 ? -1 : 1;
  report.systematic_test = RunTest(
      scores, report.systematic.diff, sys_direction,
      [](Scores s) { return ComputeSystematicBias(s).diff; }, cfg, threads);
  return report;
}

std::string FormatReport(const MetricsReport& r) {
  std::string out;
  char line[512];
  std::snprintf(line, sizeof(line),
                "quadruples: %d (masculine original %d, feminine original "
                "%d)\nbootstrap: B=%d seed=%llu alpha=%g, * marks p < alpha\n\n",
                r.quadruples, r.masculine_original, r.feminine_original,
                r.bootstrap.resamples,
                static_cast<unsigned long long>(r.bootstrap.seed),
                r.bootstrap.alpha);
  out += line;

  std::snprintf(line, sizeof(line), "%-10s %-10s %-12s %-10s\n", "Acc_M",
                "Acc_F", "Acc_Diff", "p");
  out += line;
  std::snprintf(line, sizeof(line), "%-10s %-10s %-12s %-10.4g\n\n",
                Percent(r.accuracy.acc_m).c_str(),
                Percent(r.accuracy.acc_f).c_str(),
                (Percent(r.accuracy.diff, true) + Stars(r.acc_diff_test)).c_str(),
                r.acc_diff_test.p_value);
  out += line;

  std::snprintf(line, sizeof(line),
                "%-9s %-9s %-9s %-9s | %-9s %-9s %-9s %-9s | %-10s %-8s\n",
                "within M", "within F", "Diff.", "I_within", "M2F", "F2M",
                "Diff.", "I_across", "delta I", "p");
  out += line;
  std::snprintf(
      line, sizeof(line),
      "%-9s %-9s %-9s %-9s | %-9s %-9s %-9s %-9s | %-10s %-8.4g\n\n",
      Percent(r.within_m).c_str(), Percent(r.within_f).c_str(),
      Percent(r.within_diff, true).c_str(), Percent(r.i_within).c_str(),
      Percent(r.across_m2f).c_str(), Percent(r.across_f2m).c_str(),
      Percent(r.across_diff, true).c_str(), Percent(r.i_across).c_str(),
      (Percent(r.delta_i, true) + Stars(r.delta_i_test)).c_str(),
      r.delta_i_test.p_value);
  out += line;

  std::snprintf(line, sizeof(line), "%-10s %-10s %-12s %-10s %-12s\n", "Orig.",
                "Counter.", "Diff.", "p", "Spearman");
  out += line;
  char rho[32] = "n/a";
  if (r.systematic.spearman_rho) {
    std::snprintf(rho, sizeof(rho), "%+.3f", *r.systematic.spearman_rho);
  }
  std::snprintf(line, sizeof(line), "%-10s %-10s %-12s %-10.4g %-12s\n",
                Percent(r.systematic.acc_orig).c_str(),
                Percent(r.systematic.acc_counter).c_str(),
                (Percent(r.systematic.diff, true) + Stars(r.systematic_test))
                    .c_str(),
                r.systematic_test.p_value, rho);
  out += line;
  return out;
}

}  // namespace quadcoref
