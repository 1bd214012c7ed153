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

#include "quadcoref/config.h"

#include <set>
#include <string>

#include "quadcoref/error.h"
#include "quadcoref/io.h"

namespace quadcoref {
namespace {

std::filesystem::path Resolve(const std::filesystem::path& base,
                              const std::string& value) {
  const std::filesystem::path p(value);
  return p.is_absolute() ? p : base / p;
}

}  // namespace

PipelineConfig ParseConfig(std::string_view json,
                           const std::filesystem::path& base_dir) {
  Json j;
  try {
    j = Json::parse(json);
  } catch (const Json::exception& e) {
    throw DataError(std::string("config: malformed JSON (") + e.what() + ")");
  }
  if (!j.is_object()) throw DataError("config: expected a JSON object");
  static const std::set<std::string> kKnown = {
      "data_dir",   "abbreviations", "subordinators", "prepositions",
      "object_followers", "gendered_words", "names", "corpus_dir",
      "output_dir", "seed", "threads", "bootstrap", "match_alpha"};
  for (const auto& [key, value] : j.items()) {
    if (!kKnown.count(key)) throw DataError("config: unknown key '" + key + "'");
  }

  PipelineConfig config;
  try {
    if (j.contains("data_dir")) {
      config.resources = ResourcePaths::InDirectory(
          Resolve(base_dir, j["data_dir"].get<std::string>()));
    }
    const std::pair<const char*, std::filesystem::path*> files[] = {
        {"abbreviations", &config.resources.abbreviations},
        {"subordinators", &config.resources.subordinators},
        {"prepositions", &config.resources.prepositions},
        {"object_followers", &config.resources.object_followers},
        {"gendered_words", &config.resources.gendered_words},
        {"names", &config.resources.names},
        {"corpus_dir", &config.corpus_dir},
        {"output_dir", &config.output_dir}};
    for (const auto& [key, target] : files) {
      if (j.contains(key)) *target = Resolve(base_dir, j[key].get<std::string>());
    }
    config.seed = j.value("seed", config.seed);
    config.threads = j.value("threads", config.threads);
    config.match_alpha = j.value("match_alpha", config.match_alpha);
    if (j.contains("bootstrap")) {
      const Json& b = j["bootstrap"];
      for (const auto& [key, value] : b.items()) {
        if (key != "resamples" && key != "alpha") {
          throw DataError("config: unknown key 'bootstrap." + key + "'");
        }
      }
      config.bootstrap.resamples =
          b.value("resamples", config.bootstrap.resamples);
      config.bootstrap.alpha = b.value("alpha", config.bootstrap.alpha);
    }
  } catch (const Json::exception& e) {
    throw DataError(std::string("config: ") + e.what());
  }
  config.bootstrap.seed = config.seed;
  for (const auto* path :
       {&config.resources.abbreviations, &config.resources.subordinators,
        &config.resources.prepositions, &config.resources.object_followers,
        &config.resources.gendered_words, &config.resources.names}) {
    if (!std::filesystem::is_regular_file(*path)) {
      throw DataError("config: resource file not found: " + path->string());
    }
  }
  if (!config.corpus_dir.empty() &&
      !std::filesystem::is_directory(config.corpus_dir)) {
    throw DataError("config: corpus directory not found: " +
                    config.corpus_dir.string());
  }
  ValidateConfig(config);
  return config;
}

PipelineConfig LoadConfig(const std::filesystem::path& path) {
  return ParseConfig(ReadText(path), path.parent_path());
}

void ValidateConfig(const PipelineConfig& config) {
  if (config.bootstrap.resamples < 1) {
    throw DataError("bootstrap resamples must be at least 1");
  }
  if (!(config.bootstrap.alpha > 0.0 && config.bootstrap.alpha < 1.0)) {
    throw DataError("alpha must lie in (0, 1)");
  }
  if (config.threads < 1) throw DataError("threads must be at least 1");
  if (!(config.match_alpha > 1.0)) {
    throw DataError("match alpha must be greater than 1");
  }
}

}  // namespace quadcoref
