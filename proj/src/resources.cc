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

#include "quadcoref/resources.h"

#include <cstdlib>

#include "quadcoref/error.h"

#ifndef QUADCOREF_DATA_DIR
#define QUADCOREF_DATA_DIR "data"
#endif

namespace quadcoref {
namespace {

void RequireFile(const std::filesystem::path& path) {
  if (!std::filesystem::is_regular_file(path)) {
    throw DataError("resource file not found: " + path.string());
  }
}

}  // namespace

ResourcePaths ResourcePaths::InDirectory(const std::filesystem::path& dir) {
  return {dir / "abbreviations.txt",    dir / "subordinators.txt",
          dir / "prepositions.txt",     dir / "object_followers.txt",
          dir / "gendered_words.tsv",   dir / "names.tsv"};
}

std::filesystem::path DefaultDataDir() {
  if (const char* env = std::getenv("QUADCOREF_DATA_DIR");
      env != nullptr && *env != '\0') {
    return env;
  }
  return QUADCOREF_DATA_DIR;
}

Resources Resources::Load(const ResourcePaths& paths) {
  for (const auto* path :
       {&paths.abbreviations, &paths.subordinators, &paths.prepositions,
        &paths.object_followers, &paths.gendered_words, &paths.names}) {
    RequireFile(*path);
  }
  Resources resources;
  resources.abbreviations = WordList::Load(paths.abbreviations);
  resources.subordinators = WordList::Load(paths.subordinators);
  resources.prepositions = WordList::Load(paths.prepositions);
  resources.lexicon = GenderLexicon::Load(
      paths.gendered_words, WordList::Load(paths.object_followers));
  resources.names = NameDatabase::Load(paths.names);
  return resources;
}

}  // namespace quadcoref
