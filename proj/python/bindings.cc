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

// Python bindings. Records cross the boundary as JSON text; the package
// wrapper turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "quadcoref/cda.h"
#include "quadcoref/error.h"
#include "quadcoref/io.h"
#include "quadcoref/metrics.h"
#include "quadcoref/pipeline.h"
#include "quadcoref/resources.h"
#include "quadcoref/stats.h"

namespace py = pybind11;

namespace quadcoref {
namespace {

const Resources& ResourcesFor(const std::string& data_dir) {
  static std::mutex mutex;
  static std::map<std::string, std::unique_ptr<Resources>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[data_dir];
  if (!slot) {
    slot = std::make_unique<Resources>(Resources::Load(
        ResourcePaths::InDirectory(data_dir.empty()
                                           ? DefaultDataDir()
                                           : std::filesystem::path(data_dir))));
  }
  return *slot;
}

template <typename T>
std::vector<T> FromJsonl(const std::string& jsonl, T (*convert)(const Json&)) {
  std::vector<T> out;
  int line = 0;
  for (const Json& j : ParseJsonl(jsonl)) {
    ++line;
    try {
      out.push_back(convert(j));
    } catch (const Json::exception& e) {
      throw DataError("record " + std::to_string(line) + ": " + e.what());
    }
  }
  return out;
}

std::vector<QuadrupleScore> ToScores(
    const std::vector<std::tuple<int, int, int, int, std::string>>& rows) {
  std::vector<QuadrupleScore> scores;
  for (const auto& [o, c, so, sc, gender] : rows) {
    QuadrupleScore s{"q" + std::to_string(scores.size()), o, c, so, sc,
                     ParseGender(gender)};
    ValidateScore(s);
    scores.push_back(s);
  }
  return scores;
}

std::string CdaText(const std::string& text, const std::string& mode,
                    const std::string& matching_tsv,
                    const std::string& data_dir) {
  const Resources& r = ResourcesFor(data_dir);
  const Document doc = MakeDocument("doc", FromUtf8(text), r.abbreviations);
  const auto mentions = DetectMentions(doc, r.names);
  if (mode == "a") return ToUtf8(AcdaTransform(doc, mentions, r.lexicon).edited.text());
  if (mode != "n") throw DataError("mode must be 'a' or 'n'");
  const NameMatching matching = NameMatching::FromTsv(matching_tsv);
  return ToUtf8(NcdaTransform(doc, mentions, matching, r.lexicon).edited.text());
}

}  // namespace
}  // namespace quadcoref

PYBIND11_MODULE(_quadcoref, m) {
  using namespace quadcoref;
  m.doc() = "Counterfactual quadruple bias auditing for coreference models";

  static py::exception<DataError> data_error(m, "DataError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const DataError& e) {
      py::set_error(data_error, e.what());
    }
  });

  m.def("extract_jsonl",
        [](const std::string& corpus_dir, int threads,
           const std::string& data_dir) {
          py::gil_scoped_release release;
          const ExtractResult r =
              ExtractFromDirectory(corpus_dir, ResourcesFor(data_dir), threads);
          return RecordsToJsonl(r.instances, &InstanceToJson);
        },
        py::arg("corpus_dir"), py::arg("threads") = 1,
        py::arg("data_dir") = "");

  m.def("quadruples_jsonl",
        [](const std::string& instances, const std::string& data_dir) {
          const QuadrupleResult r = BuildQuadruples(
              FromJsonl(instances, &InstanceFromJson), ResourcesFor(data_dir));
          return py::make_tuple(RecordsToJsonl(r.quadruples, &QuadrupleToJson),
                                r.diagnostics);
        },
        py::arg("instances_jsonl"), py::arg("data_dir") = "");

  m.def("aggregate_jsonl",
        [](const std::string& quadruples, const std::string& annotations,
           uint64_t seed) {
          const AggregateResult r =
              Aggregate(FromJsonl(quadruples, &QuadrupleFromJson),
                        FromJsonl(annotations, &AnnotationFromJson), seed);
          py::dict stats;
          stats["input"] = r.input;
          stats["invalid"] = r.invalid;
          stats["inconsistent"] = r.inconsistent;
          stats["consistent"] = r.consistent;
          stats["downsampled"] = r.downsampled;
          stats["agreement_majority"] = r.agreement.majority;
          stats["agreement_pairwise"] = r.agreement.pairwise;
          return py::make_tuple(RecordsToJsonl(r.dataset, &QuadrupleToJson),
                                stats);
        },
        py::arg("quadruples_jsonl"), py::arg("annotations_jsonl"),
        py::arg("seed") = 0);

  m.def("predict_baseline_jsonl",
        [](const std::string& dataset) {
          return RecordsToJsonl(
              PredictAll(FromJsonl(dataset, &QuadrupleFromJson)),
              &PredictionToJson);
        },
        py::arg("dataset_jsonl"));

  m.def("score_jsonl",
        [](const std::string& dataset, const std::string& predictions) {
          const ScoreResult r =
              ScoreDataset(FromJsonl(dataset, &QuadrupleFromJson),
                           FromJsonl(predictions, &PredictionFromJson));
          return py::make_tuple(RecordsToJsonl(r.scores, &ScoreToJson),
                                r.warnings);
        },
        py::arg("dataset_jsonl"), py::arg("predictions_jsonl"));

  m.def("report_json",
        [](const std::string& scores, int resamples, uint64_t seed,
           double alpha, int threads) {
          BootstrapConfig cfg{resamples, seed, alpha};
          const auto parsed = FromJsonl(scores, &ScoreFromJson);
          MetricsReport report;
          {
            py::gil_scoped_release release;
            report = BuildReport(parsed, cfg, threads);
          }
          return py::make_tuple(ReportToJson(report).dump(),
                                FormatReport(report));
        },
        py::arg("scores_jsonl"), py::arg("resamples") = 10000,
        py::arg("seed") = 0, py::arg("alpha") = 0.01, py::arg("threads") = 1);

  using Rows = std::vector<std::tuple<int, int, int, int, std::string>>;
  m.def("acc_diff",
        [](const Rows& rows) {
          const AccuracyDifference a = AccDiff(ToScores(rows));
          return py::make_tuple(a.acc_m, a.acc_f, a.diff);
        },
        py::arg("scores"),
        "scores: (f_o, f_c, f_so, f_sc, original_gender) tuples");
  m.def("inconsistency_across",
        [](const Rows& rows) { return InconsistencyAcross(ToScores(rows)); },
        py::arg("scores"));
  m.def("inconsistency_within",
        [](const Rows& rows) { return InconsistencyWithin(ToScores(rows)); },
        py::arg("scores"));
  m.def("delta_i", [](const Rows& rows) { return DeltaI(ToScores(rows)); },
        py::arg("scores"));

  m.def("spearman",
        [](const std::vector<double>& xs, const std::vector<double>& ys) {
          return Spearman(xs, ys);
        },
        py::arg("xs"), py::arg("ys"));
  m.def("edge_weight",
        [](const std::vector<int>& a, const std::vector<int>& b,
           double alpha) { return EdgeWeight(a, b, alpha); },
        py::arg("a"), py::arg("b"), py::arg("alpha") = kDefaultMatchAlpha);
  m.def("min_weight_full_matching",
        [](const std::vector<std::vector<double>>& weights) {
          const Assignment a = MinWeightFullMatching(weights);
          return py::make_tuple(a.pairs, a.total_weight);
        },
        py::arg("weights"));
  m.def("match_names_tsv",
        [](const std::string& names_path, double alpha) {
          const NameDatabase db =
              names_path.empty() ? ResourcesFor("").names
                                 : NameDatabase::Load(names_path);
          return MatchNames(db, alpha).ToTsv();
        },
        py::arg("names_path") = "", py::arg("alpha") = kDefaultMatchAlpha);
  m.def("cda_text", &CdaText, py::arg("text"), py::arg("mode") = "a",
        py::arg("matching_tsv") = "", py::arg("data_dir") = "");
}
