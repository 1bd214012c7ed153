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

#include "quadcoref/corpus.h"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "quadcoref/error.h"

namespace quadcoref {
namespace {

bool IsTerminal(char32_t c) { return c == U'.' || c == U'!' || c == U'?'; }

Text NormalizeEntry(TextView word) {
  Text out = Lowercase(word);
  while (!out.empty() && out.back() == U'.') out.pop_back();
  return out;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw DataError("cannot read " + path.string());
  return buffer.str();
}

// The word characters immediately before `pos`.
TextView WordBefore(TextView text, size_t pos) {
  size_t start = pos;
  while (start > 0 && IsWordChar(text[start - 1])) --start;
  return text.substr(start, pos - start);
}

}  // namespace

WordList::WordList(std::initializer_list<std::u32string_view> words) {
  for (const auto word : words) Add(word);
}

WordList WordList::Load(const std::filesystem::path& path) {
  const Text contents = FromUtf8(ReadFile(path));
  WordList list;
  size_t line_start = 0;
  while (line_start <= contents.size()) {
    size_t line_end = contents.find(U'\n', line_start);
    if (line_end == Text::npos) line_end = contents.size();
    TextView line = TextView(contents).substr(line_start, line_end - line_start);
    if (const size_t hash = line.find(U'#'); hash != TextView::npos) {
      line = line.substr(0, hash);
    }
    const Span trimmed =
        TrimSpan(line, {0, static_cast<int64_t>(line.size())});
    if (!trimmed.empty()) {
      list.Add(line.substr(trimmed.begin, trimmed.size()));
    }
    line_start = line_end + 1;
  }
  return list;
}

void WordList::Add(TextView word) { words_.insert(NormalizeEntry(word)); }

bool WordList::Contains(TextView word) const {
  return words_.contains(NormalizeEntry(word));
}

WordList DefaultAbbreviations() {
  return {U"mr", U"mrs", U"ms", U"dr", U"st", U"prof", U"messrs", U"mme",
          U"mlle", U"rev", U"capt", U"col", U"gen", U"lt", U"sgt", U"jr",
          U"sr", U"vs", U"etc"};
}

std::vector<Sentence> Segment(TextView text, const WordList& abbreviations) {
  std::vector<Sentence> sentences;
  const size_t n = text.size();
  auto emit = [&](size_t begin, size_t end) {
    const Span span = TrimSpan(text, {static_cast<int64_t>(begin),
                                      static_cast<int64_t>(end)});
    if (span.empty()) return;
    Sentence sentence;
    sentence.index = static_cast<int>(sentences.size());
    sentence.span = span;
    sentence.tokens =
        Tokenize(text.substr(span.begin, span.size()), abbreviations,
                 span.begin);
    sentences.push_back(std::move(sentence));
  };

  size_t start = 0;
  size_t i = 0;
  while (i < n) {
    if (!IsTerminal(text[i])) {
      ++i;
      continue;
    }
    size_t cluster_end = i;
    while (cluster_end < n && IsTerminal(text[cluster_end])) ++cluster_end;
    const bool single_period = text[i] == U'.' && cluster_end == i + 1;
    while (cluster_end < n && IsClosingQuote(text[cluster_end])) ++cluster_end;

    if (single_period) {
      const TextView word = WordBefore(text, i);
      if (!word.empty() && abbreviations.Contains(word)) {
        i = cluster_end;
        continue;
      }
    }
    size_t next = cluster_end;
    if (next >= n || !IsSpace(text[next])) {
      i = cluster_end;
      continue;
    }
    while (next < n && IsSpace(text[next])) ++next;
    size_t letter = next;
    while (letter < n && IsOpeningQuote(text[letter])) ++letter;
    if (letter < n && IsUpper(text[letter])) {
      emit(start, cluster_end);
      start = next;
    }
    i = next;
  }
  emit(start, n);
  return sentences;
}

std::vector<Token> Tokenize(TextView sentence_text,
                            const WordList& abbreviations, int64_t base) {
  std::vector<Token> tokens;
  const size_t n = sentence_text.size();
  auto push = [&](size_t begin, size_t end) {
    tokens.push_back(Token{Text(sentence_text.substr(begin, end - begin)),
                           {base + static_cast<int64_t>(begin),
                            base + static_cast<int64_t>(end)}});
  };
  // True when an apostrophe at `pos` starts a possessive "'s" that ends the
  // current word.
  auto possessive_at = [&](size_t pos) {
    return pos + 1 < n && IsApostrophe(sentence_text[pos]) &&
           (sentence_text[pos + 1] == U's' || sentence_text[pos + 1] == U'S') &&
           (pos + 2 == n || !IsWordChar(sentence_text[pos + 2]));
  };

  size_t i = 0;
  while (i < n) {
    const char32_t c = sentence_text[i];
    if (IsSpace(c)) {
      ++i;
      continue;
    }
    if (IsWordChar(c)) {
      size_t end = i + 1;
      while (end < n) {
        const char32_t d = sentence_text[end];
        if (IsWordChar(d)) {
          ++end;
          continue;
        }
        // Internal apostrophes and hyphens join ("didn't", "well-known").
        const bool joiner = IsApostrophe(d) || d == U'-';
        if (joiner && !possessive_at(end) && end + 1 < n &&
            IsWordChar(sentence_text[end + 1])) {
          end += 2;
          continue;
        }
        break;
      }
      if (end < n && sentence_text[end] == U'.' &&
          abbreviations.Contains(sentence_text.substr(i, end - i))) {
        ++end;
      }
      push(i, end);
      i = end;
      if (possessive_at(i) && !tokens.empty()) {
        push(i, i + 2);
        i += 2;
      }
      continue;
    }
    push(i, i + 1);
    ++i;
  }
  return tokens;
}

Document MakeDocument(std::string id, TextView text,
                      const WordList& abbreviations, std::string source) {
  Document doc;
  doc.id = std::move(id);
  doc.text = Text(text);
  doc.sentences = Segment(doc.text, abbreviations);
  doc.source = std::move(source);
  return doc;
}

Document LoadDocument(const std::filesystem::path& path,
                      const WordList& abbreviations) {
  const Text text = FromUtf8(ReadFile(path));
  return MakeDocument(path.stem().string(), text, abbreviations,
                      path.string());
}

CorpusLoad LoadCorpus(const std::filesystem::path& dir,
                      const WordList& abbreviations) {
  if (!std::filesystem::is_directory(dir)) {
    throw DataError("corpus directory not found: " + dir.string());
  }
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".txt") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  CorpusLoad load;
  for (const auto& file : files) {
    try {
      Document doc = LoadDocument(file, abbreviations);
      if (doc.sentences.empty()) {
        load.warnings.push_back("skipping empty document " + file.string());
        continue;
      }
      load.documents.push_back(std::move(doc));
    } catch (const DataError& e) {
      load.warnings.push_back("skipping " + file.string() + ": " + e.what());
    }
  }
  return load;
}

}  // namespace quadcoref
