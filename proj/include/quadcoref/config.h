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

#ifndef QUADCOREF_CONFIG_H_
#define QUADCOREF_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <string_view>

#include "quadcoref/cda.h"
#include "quadcoref/resources.h"
#include "quadcoref/stats.h"

namespace quadcoref {

struct PipelineConfig {
  ResourcePaths resources = ResourcePaths::InDirectory(DefaultDataDir());
  std::filesystem::path corpus_dir;
  std::filesystem::path output_dir;
  uint64_t seed = 0;
  int threads = 1;
  BootstrapConfig bootstrap;
  double match_alpha = kDefaultMatchAlpha;
};

// JSON object with optional keys: data_dir, abbreviations, subordinators,
// prepositions, object_followers, gendered_words, names, corpus_dir,
// output_dir, seed, threads, bootstrap {resamples, alpha}, match_alpha.
// Relative paths resolve against `base_dir`; a data_dir entry sets every
// resource path before the individual entries apply. Unknown keys, bad
// values and missing resource files are DataErrors.
PipelineConfig ParseConfig(std::string_view json,
                           const std::filesystem::path& base_dir);
PipelineConfig LoadConfig(const std::filesystem::path& path);

// Throws DataError on B < 1, alpha outside (0, 1), threads < 1 or
// match_alpha <= 1.
void ValidateConfig(const PipelineConfig& config);

}  // namespace quadcoref

#endif  // QUADCOREF_CONFIG_H_
