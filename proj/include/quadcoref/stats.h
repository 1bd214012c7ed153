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

#ifndef QUADCOREF_STATS_H_
#define QUADCOREF_STATS_H_

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <span>
#include <thread>
#include <vector>

#include "quadcoref/error.h"
#include "quadcoref/random.h"

namespace quadcoref {

struct BootstrapConfig {
  int resamples = 10000;
  uint64_t seed = 0;
  double alpha = 0.01;
};

// Average ranks, 1-based; tied values share the mean of their positions.
std::vector<double> AverageRanks(std::span<const double> values);

// Spearman's rho as the Pearson correlation of average ranks. nullopt when
// either sequence has zero rank variance. Throws DataError on a length
// mismatch or fewer than two values.
std::optional<double> Spearman(std::span<const double> xs,
                               std::span<const double> ys);

// One-sided bootstrap p-value for a positive aggregate statistic: units are
// resampled with replacement `cfg.resamples` times and
//   p = (1 + #{resamples with statistic <= 0}) / (resamples + 1).
// Iteration b draws from its own generator seeded by MixSeed(seed, b), so
// the result does not depend on `threads`.
template <typename Unit>
double BootstrapOneSided(
    std::span<const Unit> units,
    const std::function<double(std::span<const Unit>)>& statistic,
    const BootstrapConfig& cfg, int threads = 1) {
  if (units.empty()) throw DataError("bootstrap over an empty set of units");
  if (cfg.resamples < 1) throw DataError("bootstrap needs at least 1 resample");
  const size_t n = units.size();
  const auto resamples = static_cast<size_t>(cfg.resamples);
  std::vector<uint8_t> non_positive(resamples, 0);
  std::atomic<size_t> next{0};
  auto worker = [&] {
    std::vector<Unit> sample(n);
    for (size_t b = next++; b < resamples; b = next++) {
      std::mt19937_64 rng(MixSeed(cfg.seed, b));
      for (size_t k = 0; k < n; ++k) sample[k] = units[UniformBelow(rng, n)];
      non_positive[b] =
          statistic(std::span<const Unit>(sample)) <= 0.0 ? 1 : 0;
    }
  };
  const int workers =
      std::max(1, std::min<int>(threads, static_cast<int>(resamples)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }
  size_t count = 0;
  for (const uint8_t flag : non_positive) count += flag;
  return static_cast<double>(1 + count) / static_cast<double>(resamples + 1);
}

}  // namespace quadcoref

#endif  // QUADCOREF_STATS_H_
