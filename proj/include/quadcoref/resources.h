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

#ifndef QUADCOREF_RESOURCES_H_
#define QUADCOREF_RESOURCES_H_

#include <filesystem>

#include "quadcoref/corpus.h"
#include "quadcoref/lexicon.h"

namespace quadcoref {

struct ResourcePaths {
  std::filesystem::path abbreviations;
  std::filesystem::path subordinators;
  std::filesystem::path prepositions;
  std::filesystem::path object_followers;
  std::filesystem::path gendered_words;
  std::filesystem::path names;

  // The standard file names inside one data directory.
  static ResourcePaths InDirectory(const std::filesystem::path& dir);
};

// $QUADCOREF_DATA_DIR if set, else the data directory of the source tree.
std::filesystem::path DefaultDataDir();

// Every word list and lexicon the pipeline reads. Immutable after load.
struct Resources {
  WordList abbreviations;
  WordList subordinators;
  WordList prepositions;
  GenderLexicon lexicon;
  NameDatabase names;

  static Resources Load(const ResourcePaths& paths);
  static Resources LoadDefault() {
    return Load(ResourcePaths::InDirectory(DefaultDataDir()));
  }
};

}  // namespace quadcoref

#endif  // QUADCOREF_RESOURCES_H_
