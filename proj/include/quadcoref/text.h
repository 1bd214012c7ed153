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

#ifndef QUADCOREF_TEXT_H_
#define QUADCOREF_TEXT_H_

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace quadcoref {

// All document text is held as Unicode scalar sequences so that offsets are
// scalar indices rather than bytes.
using Text = std::u32string;
using TextView = std::u32string_view;

// Decodes UTF-8. Throws DataError on malformed input.
Text FromUtf8(std::string_view utf8);
std::string ToUtf8(TextView text);

// Half-open interval [begin, end) of scalar offsets.
struct Span {
  int64_t begin = 0;
  int64_t end = 0;

  int64_t size() const { return end - begin; }
  bool empty() const { return end <= begin; }
  bool Contains(const Span& other) const {
    return begin <= other.begin && other.end <= end;
  }
  bool Overlaps(const Span& other) const {
    return begin < other.end && other.begin < end;
  }
  friend bool operator==(const Span&, const Span&) = default;
  friend auto operator<=>(const Span&, const Span&) = default;
};

bool IsSpace(char32_t c);
bool IsUpper(char32_t c);
bool IsLower(char32_t c);
bool IsAlnum(char32_t c);
// Letters, digits, and any non-ASCII scalar that is not known punctuation.
bool IsWordChar(char32_t c);
bool IsOpeningQuote(char32_t c);
bool IsClosingQuote(char32_t c);
bool IsApostrophe(char32_t c);

// Case mapping covers ASCII and Latin-1; other scalars pass through.
char32_t ToLower(char32_t c);
char32_t ToUpper(char32_t c);
Text Lowercase(TextView text);
Text Capitalize(TextView text);
bool StartsUpper(TextView text);
bool IsAllUpper(TextView text);

// Re-cases `replacement` to follow the casing pattern of `original`: all caps
// (for multi-letter originals), initial capital, or lowercase.
Text TransferCase(TextView original, TextView replacement);

// Strips leading and trailing whitespace.
Span TrimSpan(TextView text, Span span);

// One substitution: the scalars at `span` become `replacement`.
struct Edit {
  Span span;
  Text replacement;
};

// The result of applying a set of non-overlapping edits, with the offset
// map between the source and the rewritten text.
class EditedText {
 public:
  // Throws DataError if edits overlap or fall outside `source`.
  EditedText(TextView source, std::vector<Edit> edits);

  const Text& text() const { return text_; }
  const std::vector<Edit>& edits() const { return edits_; }

  // Maps a source offset into the rewritten text. Offsets strictly inside an
  // edit are clamped into its replacement.
  int64_t MapOffset(int64_t offset) const;
  Span MapSpan(Span span) const;

  // Maps a rewritten-text offset back into the source.
  int64_t UnmapOffset(int64_t offset) const;
  Span UnmapSpan(Span span) const;

 private:
  Text text_;
  std::vector<Edit> edits_;
  // Start of each edit's replacement in the rewritten text.
  std::vector<int64_t> new_starts_;
};

}  // namespace quadcoref

#endif  // QUADCOREF_TEXT_H_
