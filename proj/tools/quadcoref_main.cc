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

// Command-line front end for the quadruple bias-auditing pipeline.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "quadcoref/cda.h"
#include "quadcoref/config.h"
#include "quadcoref/error.h"
#include "quadcoref/io.h"
#include "quadcoref/metrics.h"
#include "quadcoref/pipeline.h"
#include "quadcoref/resources.h"
#include "quadcoref/server.h"

namespace quadcoref {
namespace {

namespace fs = std::filesystem;

struct GlobalFlags {
  std::string config;
  std::optional<uint64_t> seed;
  std::optional<int> bootstrap_b;
  std::optional<double> alpha;
  std::optional<int> threads;
  std::optional<double> match_alpha;
  std::string out;
};

PipelineConfig Configure(const GlobalFlags& flags) {
  PipelineConfig config =
      flags.config.empty() ? PipelineConfig{} : LoadConfig(flags.config);
  if (flags.seed) config.seed = *flags.seed;
  if (flags.bootstrap_b) config.bootstrap.resamples = *flags.bootstrap_b;
  if (flags.alpha) config.bootstrap.alpha = *flags.alpha;
  if (flags.threads) config.threads = *flags.threads;
  if (flags.match_alpha) config.match_alpha = *flags.match_alpha;
  config.bootstrap.seed = config.seed;
  ValidateConfig(config);
  return config;
}

// --out wins; otherwise `name` inside the configured output directory;
// otherwise empty (stdout).
std::string OutPath(const GlobalFlags& flags, const PipelineConfig& config,
                    const std::string& name) {
  if (!flags.out.empty()) return flags.out;
  if (!config.output_dir.empty()) return (config.output_dir / name).string();
  return "";
}

// Writes to `out`, or stdout when no path was given.
void Emit(const std::string& out, const std::string& content) {
  if (out.empty()) {
    std::cout << content;
  } else {
    WriteText(out, content);
  }
}

void Warn(const std::vector<std::string>& lines) {
  for (const std::string& line : lines) std::cerr << "warning: " << line << "\n";
}

int RunExtract(const PipelineConfig& config, const std::string& corpus_dir,
               const std::string& out) {
  const fs::path dir =
      corpus_dir.empty() ? config.corpus_dir : fs::path(corpus_dir);
  if (dir.empty()) throw DataError("extract: no corpus directory given");
  const Resources resources = Resources::Load(config.resources);
  const ExtractResult result =
      ExtractFromDirectory(dir, resources, config.threads);
  Warn(result.warnings);
  std::fprintf(stderr,
               "extract: %d documents, %zu instances (FinalPro %d, MedialPro "
               "%d, InitialPro %d)\n",
               result.documents, result.instances.size(),
               result.stats.final_pro, result.stats.medial_pro,
               result.stats.initial_pro);
  if (result.instances.empty()) {
    throw DataError("extract: no instances found in " + dir.string());
  }
  Emit(out, RecordsToJsonl(result.instances, &InstanceToJson));
  return 0;
}

int RunQuadruple(const PipelineConfig& config, const std::string& input,
                 const std::string& out) {
  const Resources resources = Resources::Load(config.resources);
  const std::vector<Instance> originals = ReadInstances(input);
  const QuadrupleResult result = BuildQuadruples(originals, resources);
  for (const std::string& d : result.diagnostics) std::cerr << d << "\n";
  std::fprintf(stderr, "quadruple: %zu of %zu originals kept (%zu instances)\n",
               result.quadruples.size(), originals.size(),
               4 * result.quadruples.size());
  Emit(out, RecordsToJsonl(result.quadruples, &QuadrupleToJson));
  return 0;
}

std::vector<Instance> Flatten(const std::vector<Quadruple>& quadruples) {
  std::vector<Instance> all;
  for (const Quadruple& q : quadruples) {
    all.insert(all.end(), q.variants.begin(), q.variants.end());
  }
  return all;
}

int RunServe(const std::string& input, const std::string& records,
             const std::string& host, int port, const std::string& static_dir) {
  AnnotationStore store(Flatten(ReadQuadruples(input)), records);
  AnnotationServer server(&store);
  if (!static_dir.empty() && !server.MountStatic(static_dir)) {
    throw DataError("annotate-serve: not a directory: " + static_dir);
  }
  const int bound = server.Bind(host, port);
  if (bound < 0) {
    throw DataError("annotate-serve: cannot bind " + host + ":" +
                    std::to_string(port));
  }
  const Progress p = store.GetProgress();
  std::fprintf(stderr,
               "annotate-serve: %d instances, %d records, listening on "
               "http://%s:%d\n",
               p.instances, p.records, host.c_str(), bound);
  server.Listen();
  return 0;
}

int RunAggregate(const PipelineConfig& config, const std::string& quadruples,
                 const std::string& annotations, const std::string& out) {
  const AggregateResult r = Aggregate(
      ReadQuadruples(quadruples), ReadAnnotations(annotations), config.seed);
  std::fprintf(stderr,
               "aggregate: %d quadruples in, %d invalid, %d inconsistent, %d "
               "consistent, %d removed by balancing, %zu kept (seed %llu)\n"
               "aggregate: agreement with majority %.4f, pairwise %.4f over "
               "%d instances\n",
               r.input, r.invalid, r.inconsistent, r.consistent,
               r.downsampled, r.dataset.size(),
               static_cast<unsigned long long>(config.seed),
               r.agreement.majority, r.agreement.pairwise,
               r.agreement.instances);
  Emit(out, RecordsToJsonl(r.dataset, &QuadrupleToJson));
  return 0;
}

int RunPredict(const std::string& dataset, const std::string& out) {
  const auto predictions = PredictAll(ReadQuadruples(dataset));
  std::fprintf(stderr, "predict-baseline: %zu predictions\n",
               predictions.size());
  Emit(out, RecordsToJsonl(predictions, &PredictionToJson));
  return 0;
}

int RunScore(const std::string& dataset, const std::string& predictions,
             const std::string& out) {
  const ScoreResult r =
      ScoreDataset(ReadQuadruples(dataset), ReadPredictions(predictions));
  Warn(r.warnings);
  std::fprintf(stderr, "score: %zu quadruples scored\n", r.scores.size());
  Emit(out, RecordsToJsonl(r.scores, &ScoreToJson));
  return 0;
}

int RunReport(const PipelineConfig& config, const std::string& scores,
              const std::string& out) {
  const MetricsReport report =
      BuildReport(ReadScores(scores), config.bootstrap, config.threads);
  std::cout << FormatReport(report);
  if (!out.empty()) WriteText(out, ReportToJson(report).dump(2) + "\n");
  return 0;
}

int RunMatchNames(const PipelineConfig& config, const std::string& names,
                  const std::string& out) {
  const NameDatabase db =
      NameDatabase::Load(names.empty() ? config.resources.names : fs::path(names));
  const NameMatching matching = MatchNames(db, config.match_alpha);
  std::fprintf(stderr, "match-names: %zu pairs, total weight %.6f\n",
               matching.pairs().size(), matching.total_weight());
  Emit(out, matching.ToTsv());
  return 0;
}

int RunCda(const PipelineConfig& config, const std::string& corpus_dir,
           const std::string& mode_name, const std::string& matching_path,
           const std::string& out) {
  const fs::path dir =
      corpus_dir.empty() ? config.corpus_dir : fs::path(corpus_dir);
  if (dir.empty()) throw DataError("cda: no corpus directory given");
  if (out.empty()) throw DataError("cda: --out directory is required");
  const CdaMode mode = mode_name == "n" ? CdaMode::kNameSwap
                                        : CdaMode::kAnonymized;
  std::optional<NameMatching> matching;
  if (mode == CdaMode::kNameSwap) {
    if (matching_path.empty()) {
      throw DataError("cda: mode n needs --matching");
    }
    matching = NameMatching::Load(matching_path);
  }
  const Resources resources = Resources::Load(config.resources);
  const CorpusLoad load = LoadCorpus(dir, resources.abbreviations);
  Warn(load.warnings);
  if (load.documents.empty()) {
    throw DataError("cda: no readable documents in " + dir.string());
  }
  const CdaCorpus corpus = AugmentCorpus(
      load.documents, mode, resources, matching ? &*matching : nullptr);
  Warn(corpus.warnings);

  const fs::path out_dir(out);
  const std::string suffix = mode == CdaMode::kNameSwap ? ".ncda" : ".acda";
  Json manifest;
  manifest["mode"] = mode == CdaMode::kNameSwap ? "n" : "a";
  manifest["seed"] = config.seed;
  manifest["matching"] = matching_path;
  manifest["documents"] = Json::array();
  for (size_t k = 0; k < corpus.originals.size(); ++k) {
    const Document& doc = corpus.originals[k];
    const std::string original = doc.id + ".txt";
    const std::string transformed = doc.id + suffix + ".txt";
    WriteText(out_dir / original, ToUtf8(doc.text));
    WriteText(out_dir / transformed,
              ToUtf8(corpus.transformed[k].edited.text()));
    manifest["documents"].push_back(
        {{"id", doc.id}, {"original", original}, {"transformed", transformed}});
  }
  manifest["warnings"] = corpus.warnings;
  WriteText(out_dir / "manifest.json", manifest.dump(2) + "\n");
  std::fprintf(stderr, "cda: %zu documents augmented into %s\n",
               corpus.originals.size(), out_dir.string().c_str());
  return 0;
}

int Main(int argc, char** argv) {
  CLI::App app{"Gender-bias auditing for coreference resolution with "
               "counterfactual quadruples"};
  app.require_subcommand(1);
  GlobalFlags flags;
  app.add_option("--config", flags.config, "JSON pipeline config")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", flags.seed, "Random seed (downsampling, bootstrap)");
  app.add_option("--bootstrap-b", flags.bootstrap_b, "Bootstrap resamples");
  app.add_option("--alpha", flags.alpha, "Significance threshold");
  app.add_option("--threads", flags.threads, "Worker threads");
  app.add_option("--match-alpha", flags.match_alpha,
                 "Cosine weight in the name-matching edge weight");
  app.add_option("--out", flags.out, "Output file or directory");

  std::string a;
  std::string b;
  std::string records = "annotations.jsonl";
  std::string host = "127.0.0.1";
  int port = 8080;
  std::string static_dir;
  std::string mode = "a";
  std::string matching;
  std::string names;

  auto* extract = app.add_subcommand("extract", "Find original instances");
  extract->add_option("corpus_dir", a, "Directory of .txt documents");
  auto* quadruple =
      app.add_subcommand("quadruple", "Generate the four variants");
  quadruple->add_option("instances", a)->required()->check(CLI::ExistingFile);
  auto* serve = app.add_subcommand("annotate-serve",
                                   "Serve instances to annotators over HTTP");
  serve->add_option("quadruples", a)->required()->check(CLI::ExistingFile);
  serve->add_option("--records", records, "Append-only records file");
  serve->add_option("--host", host);
  serve->add_option("--port", port);
  serve->add_option("--static", static_dir, "Browser client directory");
  auto* aggregate =
      app.add_subcommand("aggregate", "Vote, filter and balance annotations");
  aggregate->add_option("quadruples", a)->required()->check(CLI::ExistingFile);
  aggregate->add_option("annotations", b)->required()->check(CLI::ExistingFile);
  auto* predict = app.add_subcommand("predict-baseline",
                                     "Nearest-preceding-candidate predictions");
  predict->add_option("dataset", a)->required()->check(CLI::ExistingFile);
  auto* score = app.add_subcommand("score", "Per-quadruple correctness bits");
  score->add_option("dataset", a)->required()->check(CLI::ExistingFile);
  score->add_option("predictions", b)->required()->check(CLI::ExistingFile);
  auto* report =
      app.add_subcommand("report", "Bias metrics with bootstrap tests");
  report->add_option("scores", a)->required()->check(CLI::ExistingFile);
  auto* match = app.add_subcommand("match-names", "Pair masculine and "
                                                  "feminine names");
  match->add_option("--names", names, "Name database TSV");
  auto* cda = app.add_subcommand("cda", "Counterfactual data augmentation");
  cda->add_option("corpus_dir", a, "Directory of .txt documents");
  cda->add_option("--mode", mode, "a (anonymize) or n (name swap)")
      ->check(CLI::IsMember({"a", "n"}));
  cda->add_option("--matching", matching, "Name matching TSV")
      ->check(CLI::ExistingFile);
  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 1;
  }

  const PipelineConfig config = Configure(flags);
  const auto out = [&](const std::string& name) {
    return OutPath(flags, config, name);
  };
  if (*extract) return RunExtract(config, a, out("instances.jsonl"));
  if (*quadruple) return RunQuadruple(config, a, out("quadruples.jsonl"));
  if (*serve) return RunServe(a, records, host, port, static_dir);
  if (*aggregate) return RunAggregate(config, a, b, out("dataset.jsonl"));
  if (*predict) return RunPredict(a, out("predictions.jsonl"));
  if (*score) return RunScore(a, b, out("scores.jsonl"));
  if (*report) return RunReport(config, a, out("report.json"));
  if (*match) return RunMatchNames(config, names, out("matching.tsv"));
  if (*cda) return RunCda(config, a, mode, matching, out("cda"));
  return 1;
}

}  // namespace
}  // namespace quadcoref

int main(int argc, char** argv) {
  try {
    return quadcoref::Main(argc, argv);
  } catch (const quadcoref::DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const quadcoref::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
}
