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

#include "quadcoref/pipeline.h"

#include <map>
#include <set>

#include "quadcoref/counterfactual.h"
#include "quadcoref/error.h"

namespace quadcoref {
namespace {

std::string JoinIds(const std::vector<std::string>& ids) {
  std::string out;
  for (const std::string& id : ids) {
    if (!out.empty()) out += ", ";
    out += id;
  }
  return out;
}

}  // namespace

ExtractResult ExtractFromDirectory(const std::filesystem::path& corpus_dir,
                                   const Resources& resources, int threads) {
  if (!std::filesystem::is_directory(corpus_dir)) {
    throw DataError("corpus directory not found: " + corpus_dir.string());
  }
  CorpusLoad load = LoadCorpus(corpus_dir, resources.abbreviations);
  if (load.documents.empty()) {
    throw DataError("no readable documents in " + corpus_dir.string());
  }
  ExtractResult result;
  result.documents = static_cast<int>(load.documents.size());
  result.warnings = std::move(load.warnings);
  result.instances =
      ExtractCorpus(load.documents, resources, &result.stats, threads);
  return result;
}

QuadrupleResult BuildQuadruples(const std::vector<Instance>& originals,
                                const Resources& resources) {
  QuadrupleResult result;
  for (const Instance& x : originals) {
    try {
      result.quadruples.push_back(BuildQuadruple(x, resources));
    } catch (const DataError& e) {
      result.diagnostics.push_back("skipped " + x.id + ": " + e.what());
    }
  }
  return result;
}

AggregateResult Aggregate(const std::vector<Quadruple>& quadruples,
                          const std::vector<AnnotationRecord>& records,
                          uint64_t seed) {
  std::map<std::string, std::vector<AnnotationRecord>> by_instance;
  for (const AnnotationRecord& r : records) {
    by_instance[r.instance_id].push_back(r);
  }
  std::vector<std::string> incomplete;
  for (const Quadruple& q : quadruples) {
    for (const Variant v : kAllVariants) {
      const auto it = by_instance.find(q.at(v).id);
      const size_t n = it == by_instance.end() ? 0 : it->second.size();
      if (n != static_cast<size_t>(3)) {
        incomplete.push_back(q.at(v).id + " (" + std::to_string(n) + ")");
      }
    }
  }
  if (!incomplete.empty()) {
    throw DataError("incomplete annotation for " +
                    std::to_string(incomplete.size()) +
                    " instances: " + JoinIds(incomplete));
  }

  AggregateResult result;
  result.input = static_cast<int>(quadruples.size());
  std::vector<std::pair<const Instance*, std::vector<AnnotationRecord>>>
      per_instance;
  std::vector<Quadruple> consistent;
  for (const Quadruple& q : quadruples) {
    QuadrupleLabels labels;
    bool any_invalid = false;
    for (const Variant v : kAllVariants) {
      const Instance& x = q.at(v);
      const auto& rs = by_instance.at(x.id);
      per_instance.emplace_back(&x, rs);
      labels[static_cast<size_t>(v)] = MajorityVote(rs, x);
      if (!labels[static_cast<size_t>(v)]) any_invalid = true;
    }
    if (any_invalid) {
      ++result.invalid;
      continue;
    }
    if (!QuadrupleConsistent(q, labels)) {
      ++result.inconsistent;
      continue;
    }
    Quadruple labeled = q;
    for (const Variant v : kAllVariants) {
      labeled.at(v).gold = labels[static_cast<size_t>(v)];
    }
    consistent.push_back(std::move(labeled));
  }
  result.agreement = InterAnnotatorAgreement(per_instance);
  result.consistent = static_cast<int>(consistent.size());
  result.dataset = BalanceDownsample(consistent, seed);
  result.downsampled = result.consistent - static_cast<int>(result.dataset.size());
  return result;
}

std::vector<PredictionRecord> PredictAll(
    const std::vector<Quadruple>& quadruples) {
  std::vector<PredictionRecord> predictions;
  for (const Quadruple& q : quadruples) {
    for (const Variant v : kAllVariants) {
      predictions.push_back(PredictBaseline(q.at(v)));
    }
  }
  return predictions;
}

ScoreResult ScoreDataset(const std::vector<Quadruple>& dataset,
                         const std::vector<PredictionRecord>& predictions) {
  ScoreResult result;
  std::map<std::string, const PredictionRecord*> by_id;
  for (const PredictionRecord& p : predictions) {
    if (by_id.count(p.instance_id)) {
      result.warnings.push_back("duplicate prediction for " + p.instance_id +
                                ", keeping the last");
    }
    by_id[p.instance_id] = &p;
  }
  std::vector<std::string> missing;
  std::vector<std::string> unlabeled;
  std::set<std::string> known;
  for (const Quadruple& q : dataset) {
    QuadrupleScore score;
    score.quadruple_id = q.id;
    score.original_gender = q.original_gender;
    int* bits[4] = {&score.f_o, &score.f_c, &score.f_so, &score.f_sc};
    for (const Variant v : kAllVariants) {
      const Instance& x = q.at(v);
      known.insert(x.id);
      const auto it = by_id.find(x.id);
      if (it == by_id.end()) {
        missing.push_back(x.id);
        continue;
      }
      if (!x.gold) {
        unlabeled.push_back(x.id);
        continue;
      }
      *bits[static_cast<size_t>(v)] = ScoreInstance(*it->second, x, *x.gold);
    }
    result.scores.push_back(std::move(score));
  }
  if (!missing.empty()) {
    throw DataError("missing predictions for " + JoinIds(missing));
  }
  if (!unlabeled.empty()) {
    throw DataError("instances without gold labels: " + JoinIds(unlabeled));
  }
  for (const auto& [id, p] : by_id) {
    if (!known.count(id)) {
      result.warnings.push_back("prediction for unknown instance " + id +
                                " ignored");
    }
  }
  return result;
}

CdaCorpus AugmentCorpus(const std::vector<Document>& documents, CdaMode mode,
                        const Resources& resources,
                        const NameMatching* matching) {
  if (mode == CdaMode::kNameSwap && matching == nullptr) {
    throw DataError("name-swap augmentation needs a name matching");
  }
  CdaCorpus corpus;
  corpus.originals = documents;
  for (const Document& doc : documents) {
    const std::vector<Mention> mentions = DetectMentions(doc, resources.names);
    CdaOutput out =
        mode == CdaMode::kAnonymized
            ? AcdaTransform(doc, mentions, resources.lexicon)
            : NcdaTransform(doc, mentions, *matching, resources.lexicon);
    corpus.warnings.insert(corpus.warnings.end(), out.warnings.begin(),
                           out.warnings.end());
    corpus.transformed.push_back(std::move(out));
  }
  return corpus;
}

}  // namespace quadcoref
