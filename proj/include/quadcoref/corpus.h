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

#ifndef QUADCOREF_CORPUS_H_
#define QUADCOREF_CORPUS_H_

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "quadcoref/text.h"

namespace quadcoref {

struct Token {
  Text text;
  Span span;
};

struct Sentence {
  int index = 0;
  Span span;
  std::vector<Token> tokens;
};

struct Document {
  std::string id;
  Text text;
  std::vector<Sentence> sentences;
  std::string source;

  TextView Slice(Span span) const {
    return TextView(text).substr(span.begin, span.size());
  }
};

// A case-insensitive set of words loaded from a plain-text list (one entry
// per line, '#' starts a comment). Used for abbreviations, subordinating
// conjunctions, prepositions and similar closed classes.
class WordList {
 public:
  WordList() = default;
  WordList(std::initializer_list<std::u32string_view> words);

  static WordList Load(const std::filesystem::path& path);

  void Add(TextView word);
  bool Contains(TextView word) const;
  size_t size() const { return words_.size(); }

 private:
  std::set<Text> words_;
};

// Abbreviations are stored without their final period: "mr" covers "Mr.".
WordList DefaultAbbreviations();

// Splits `text` into sentences with tokens. A boundary is a run of terminal
// punctuation (., !, ?) plus any closing quotes, followed by whitespace and
// an uppercase letter (optionally behind an opening quote). A single period
// after a listed abbreviation never ends a sentence.
std::vector<Sentence> Segment(TextView text, const WordList& abbreviations);

// Splits on whitespace and detaches punctuation. "'s" is its own token; a
// period after a listed abbreviation stays attached. Spans are offset by
// `base`.
std::vector<Token> Tokenize(TextView sentence_text,
                            const WordList& abbreviations, int64_t base = 0);

Document MakeDocument(std::string id, TextView text,
                      const WordList& abbreviations, std::string source = "");

// Reads one UTF-8 file; the file stem becomes the document id.
Document LoadDocument(const std::filesystem::path& path,
                      const WordList& abbreviations);

struct CorpusLoad {
  std::vector<Document> documents;
  std::vector<std::string> warnings;
};

// Loads every *.txt file in `dir`, sorted by file name. Unreadable or
// undecodable files are skipped with a warning.
CorpusLoad LoadCorpus(const std::filesystem::path& dir,
                      const WordList& abbreviations);

}  // namespace quadcoref

#endif  // QUADCOREF_CORPUS_H_
