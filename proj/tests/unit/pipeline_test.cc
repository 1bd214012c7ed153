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

#include <gtest/gtest.h>

#include "quadcoref/error.h"
#include "quadcoref/io.h"
#include "test_util.h"

namespace quadcoref {
namespace {

using testing::FixtureDir;
using testing::TestResources;

class EndToEndTest : public ::testing::Test {
 protected:
  void SetUp() override {
    extracted_ = ExtractFromDirectory(FixtureDir() / "e2e" / "corpus",
                                      TestResources(), 2);
    quads_ = BuildQuadruples(extracted_.instances, TestResources());
    truth_ = testing::ReadTruth(FixtureDir() / "e2e" / "truth.tsv");
  }

  AggregateResult AggregateAll() const {
    return Aggregate(quads_.quadruples,
                     testing::SyntheticAnnotations(quads_.quadruples, truth_),
                     3);
  }

  ExtractResult extracted_;
  QuadrupleResult quads_;
  std::map<std::string, int> truth_;
};

TEST_F(EndToEndTest, ExtractionCounts) {
  EXPECT_EQ(extracted_.documents, 5);
  ASSERT_EQ(extracted_.instances.size(), 4u);
  EXPECT_EQ(extracted_.stats.final_pro, 2);
  EXPECT_EQ(extracted_.stats.initial_pro, 1);
  EXPECT_EQ(extracted_.stats.medial_pro, 1);
  EXPECT_TRUE(quads_.diagnostics.empty());
  EXPECT_EQ(quads_.quadruples.size(), 4u);
}

TEST_F(EndToEndTest, MatchesGoldenReport) {
  const AggregateResult agg = AggregateAll();
  EXPECT_EQ(agg.consistent, 4);
  EXPECT_EQ(agg.downsampled, 0);
  EXPECT_DOUBLE_EQ(agg.agreement.majority, 1.0);

  const ScoreResult scored = ScoreDataset(agg.dataset, PredictAll(agg.dataset));
  EXPECT_TRUE(scored.warnings.empty());
  const auto golden =
      testing::ReadGoldenScores(FixtureDir() / "e2e" / "scores_golden.tsv");
  ASSERT_EQ(scored.scores.size(), golden.size());
  for (size_t k = 0; k < agg.dataset.size(); ++k) {
    QuadrupleScore want = golden.at(agg.dataset[k].original().document_id);
    want.quadruple_id = agg.dataset[k].id;
    EXPECT_EQ(scored.scores[k], want) << want.quadruple_id;
  }

  BootstrapConfig cfg;
  cfg.resamples = 999;
  cfg.seed = 7;
  const nlohmann::json got =
      nlohmann::json::parse(ReportToJson(BuildReport(scored.scores, cfg)).dump());
  const nlohmann::json want = nlohmann::json::parse(
      ReadText(FixtureDir() / "e2e" / "golden_report.json"));
  EXPECT_EQ(got, want) << got.dump(2);
}

// Correct on the original pair and wrong on the swapped pair for one
// masculine quadruple, the reverse for the other: the bias cancels in
// Acc_Diff but not in delta I.
TEST_F(EndToEndTest, CancellationPredictions) {
  const AggregateResult agg = AggregateAll();
  std::vector<PredictionRecord> predictions;
  for (const Quadruple& q : agg.dataset) {
    const std::string& doc = q.original().document_id;
    const int slot = truth_.at(doc);
    for (const Variant v : kAllVariants) {
      const bool swapped = v == Variant::kSwapped1 || v == Variant::kSwapped2;
      bool right = true;
      if (doc == "doc_a") right = !swapped;
      if (doc == "doc_d") right = swapped;
      const Instance& x = q.at(v);
      predictions.push_back(
          {x.id, {x.candidates[right ? slot : 1 - slot].spans[0]}});
    }
  }
  const ScoreResult scored = ScoreDataset(agg.dataset, predictions);
  BootstrapConfig cfg;
  cfg.resamples = 999;
  const MetricsReport r = BuildReport(scored.scores, cfg);
  EXPECT_EQ(r.accuracy.diff, 0.0);
  EXPECT_EQ(r.i_across, 0.5);
  EXPECT_EQ(r.i_within, 0.0);
  EXPECT_EQ(r.delta_i, 0.5);
  EXPECT_EQ(r.across_m2f, 1.0);
  EXPECT_EQ(r.across_f2m, 0.0);
}

TEST_F(EndToEndTest, AggregateNeedsThreeRecords) {
  auto records = testing::SyntheticAnnotations(quads_.quadruples, truth_);
  records.pop_back();
  try {
    Aggregate(quads_.quadruples, records, 0);
    FAIL() << "expected DataError";
  } catch (const DataError& e) {
    EXPECT_NE(std::string(e.what()).find("incomplete annotation for 1 "),
              std::string::npos)
        << e.what();
  }
}

TEST_F(EndToEndTest, ScoreDatasetChecks) {
  const AggregateResult agg = AggregateAll();
  auto predictions = PredictAll(agg.dataset);
  predictions.push_back(predictions.front());
  predictions.push_back({"stray", {}});
  const ScoreResult scored = ScoreDataset(agg.dataset, predictions);
  EXPECT_EQ(scored.warnings.size(), 2u);
  predictions.erase(predictions.begin());
  predictions.pop_back();
  predictions.pop_back();
  EXPECT_THROW(ScoreDataset(agg.dataset, predictions), DataError);
  EXPECT_THROW(ScoreDataset(quads_.quadruples, PredictAll(quads_.quadruples)),
               DataError);
}

TEST(PipelineTest, MissingCorpusIsDataError) {
  EXPECT_THROW(ExtractFromDirectory(FixtureDir() / "nope", TestResources()),
               DataError);
}

TEST(PipelineTest, AugmentCorpus) {
  std::vector<Document> docs = {testing::Doc("x", "Tom met Anna. He smiled.")};
  const CdaCorpus a =
      AugmentCorpus(docs, CdaMode::kAnonymized, TestResources(), nullptr);
  ASSERT_EQ(a.transformed.size(), 1u);
  EXPECT_EQ(ToUtf8(a.transformed[0].edited.text()), "E1 met E2. She smiled.");
  EXPECT_EQ(a.originals.size(), 1u);
  EXPECT_THROW(AugmentCorpus(docs, CdaMode::kNameSwap, TestResources(), nullptr),
               DataError);
  NameMatching m;
  m.Add({U"tom", U"maria", 0});
  const CdaCorpus n = AugmentCorpus(docs, CdaMode::kNameSwap, TestResources(), &m);
  EXPECT_EQ(ToUtf8(n.transformed[0].edited.text()), "Maria met E1. She smiled.");
  EXPECT_EQ(n.warnings.size(), 1u);
}

}  // namespace
}  // namespace quadcoref
