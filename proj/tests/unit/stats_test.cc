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

#include "quadcoref/stats.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.h"
#include "quadcoref/metrics.h"

namespace quadcoref {
namespace {

std::vector<double> RandomSequence(std::mt19937& rng, size_t n) {
  std::vector<double> v(n);
  // Few distinct values so ties are common.
  for (double& x : v) x = static_cast<double>(rng() % 5);
  return v;
}

TEST(AverageRanksTest, TiesShareMeanRank) {
  const std::vector<double> v = {10, 20, 20, 5};
  EXPECT_EQ(AverageRanks(v), (std::vector<double>{2, 3.5, 3.5, 1}));
}

TEST(SpearmanTest, Examples) {
  const std::vector<double> a = {1, 2, 3, 4, 5};
  const std::vector<double> r = {5, 4, 3, 2, 1};
  EXPECT_NEAR(*Spearman(a, a), 1.0, 1e-12);
  EXPECT_NEAR(*Spearman(a, r), -1.0, 1e-12);
  const std::vector<double> xs = {0, 2, 4, 4};
  const std::vector<double> ys = {0, 0, 1, 1};
  EXPECT_NEAR(*Spearman(xs, ys), *oracle::Spearman(xs, ys), 1e-12);
}

TEST(SpearmanTest, Errors) {
  const std::vector<double> two = {1, 2};
  const std::vector<double> three = {1, 2, 3};
  const std::vector<double> one = {1};
  const std::vector<double> flat = {7, 7, 7};
  EXPECT_THROW(Spearman(two, three), DataError);
  EXPECT_THROW(Spearman(one, one), DataError);
  EXPECT_FALSE(Spearman(flat, three).has_value());
  EXPECT_FALSE(Spearman(three, flat).has_value());
}

TEST(SpearmanTest, MatchesBruteForceOracle) {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 100; ++trial) {
    const size_t n = 2 + rng() % 11;
    const auto xs = RandomSequence(rng, n);
    const auto ys = RandomSequence(rng, n);
    const auto got = Spearman(xs, ys);
    const auto want = oracle::Spearman(xs, ys);
    ASSERT_EQ(got.has_value(), want.has_value()) << trial;
    if (got) {
      EXPECT_NEAR(*got, *want, 1e-9) << trial;
      EXPECT_GE(*got, -1.0 - 1e-12);
      EXPECT_LE(*got, 1.0 + 1e-12);
    }
  }
}

TEST(SpearmanTest, InvariantUnderIncreasingTransform) {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 50; ++trial) {
    const size_t n = 3 + rng() % 10;
    const auto xs = RandomSequence(rng, n);
    const auto ys = RandomSequence(rng, n);
    std::vector<double> tx;
    for (double x : xs) tx.push_back(std::exp(x) * 3 - 11);
    const auto a = Spearman(xs, ys);
    const auto b = Spearman(tx, ys);
    ASSERT_EQ(a.has_value(), b.has_value());
    if (a) EXPECT_NEAR(*a, *b, 1e-12);
  }
}

double Mean(std::span<const double> xs) {
  double s = 0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

TEST(BootstrapTest, AllZeroGivesOne) {
  const std::vector<double> zeros(25, 0.0);
  BootstrapConfig cfg;
  cfg.resamples = 500;
  EXPECT_EQ(BootstrapOneSided<double>(zeros, Mean, cfg), 1.0);
}

TEST(BootstrapTest, CancellationFixtureDeltaI) {
  const std::vector<QuadrupleScore> qs = {
      {"a", 1, 1, 0, 0, Gender::kMasculine},
      {"b", 0, 0, 1, 1, Gender::kMasculine}};
  for (const uint64_t seed : {0ULL, 1ULL, 99ULL}) {
    BootstrapConfig cfg;
    cfg.resamples = 2000;
    cfg.seed = seed;
    const double p = BootstrapOneSided<QuadrupleScore>(
        qs, [](Scores s) { return DeltaI(s); }, cfg);
    EXPECT_EQ(p, 1.0 / 2001.0);
  }
}

TEST(BootstrapTest, DeterministicAcrossRunsAndThreads) {
  std::mt19937 rng(1);
  std::vector<double> diffs(40);
  for (double& d : diffs) d = static_cast<double>(rng() % 7) - 3.0 + 0.2;
  BootstrapConfig cfg;
  cfg.resamples = 3000;
  cfg.seed = 42;
  const double p1 = BootstrapOneSided<double>(diffs, Mean, cfg, 1);
  EXPECT_EQ(BootstrapOneSided<double>(diffs, Mean, cfg, 1), p1);
  EXPECT_EQ(BootstrapOneSided<double>(diffs, Mean, cfg, 4), p1);
  EXPECT_EQ(BootstrapOneSided<double>(diffs, Mean, cfg, 7), p1);
  EXPECT_GT(p1, 0.0);
  EXPECT_LE(p1, 1.0);
}

// Shifting every unit upward can only move resample means upward, and the
// per-iteration index streams are identical, so p never increases.
TEST(BootstrapTest, MonotoneResponse) {
  std::mt19937 rng(77);
  std::vector<double> diffs(30);
  for (double& d : diffs) d = static_cast<double>(rng() % 5) - 2.0;
  BootstrapConfig cfg;
  cfg.resamples = 1000;
  cfg.seed = 5;
  double previous = BootstrapOneSided<double>(diffs, Mean, cfg);
  for (int step = 0; step < 5; ++step) {
    for (double& d : diffs) d += 0.5;
    const double p = BootstrapOneSided<double>(diffs, Mean, cfg);
    EXPECT_LE(p, previous);
    previous = p;
  }
  EXPECT_EQ(previous, 1.0 / 1001.0);
}

TEST(BootstrapTest, Errors) {
  const std::vector<double> none;
  const std::vector<double> one = {1.0};
  BootstrapConfig cfg;
  EXPECT_THROW(BootstrapOneSided<double>(none, Mean, cfg), DataError);
  cfg.resamples = 0;
  EXPECT_THROW(BootstrapOneSided<double>(one, Mean, cfg), DataError);
}

}  // namespace
}  // namespace quadcoref
