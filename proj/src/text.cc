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

#include "quadcoref/text.h"

#include <algorithm>

#include "quadcoref/error.h"

namespace quadcoref {

Text FromUtf8(std::string_view utf8) {
  Text out;
  out.reserve(utf8.size());
  size_t i = 0;
  const size_t n = utf8.size();
  while (i < n) {
    const auto lead = static_cast<unsigned char>(utf8[i]);
    char32_t cp = 0;
    int extra = 0;
    if (lead < 0x80) {
      cp = lead;
    } else if ((lead & 0xE0) == 0xC0) {
      cp = lead & 0x1F;
      extra = 1;
    } else if ((lead & 0xF0) == 0xE0) {
      cp = lead & 0x0F;
      extra = 2;
    } else if ((lead & 0xF8) == 0xF0) {
      cp = lead & 0x07;
      extra = 3;
    } else {
      throw DataError("invalid UTF-8 lead byte at offset " + std::to_string(i));
    }
    for (int k = 1; k <= extra; ++k) {
      if (i + k >= n) {
        throw DataError("truncated UTF-8 sequence at offset " +
                        std::to_string(i));
      }
      const auto cont = static_cast<unsigned char>(utf8[i + k]);
      if ((cont & 0xC0) != 0x80) {
        throw DataError("invalid UTF-8 continuation at offset " +
                        std::to_string(i + k));
      }
      cp = (cp << 6) | (cont & 0x3F);
    }
    static constexpr char32_t kMinForLength[] = {0, 0x80, 0x800, 0x10000};
    if (cp < kMinForLength[extra] || cp > 0x10FFFF ||
        (cp >= 0xD800 && cp <= 0xDFFF)) {
      throw DataError("invalid Unicode scalar at offset " + std::to_string(i));
    }
    out.push_back(cp);
    i += extra + 1;
  }
  return out;
}

std::string ToUtf8(TextView text) {
  std::string out;
  out.reserve(text.size());
  for (const char32_t cp : text) {
    if (cp < 0x80) {
      out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
      out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
      out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
      out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
      out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
  }
  return out;
}

bool IsSpace(char32_t c) {
  return c == U' ' || c == U'\t' || c == U'\n' || c == U'\r' || c == U'\v' ||
         c == U'\f' || c == 0xA0 || (c >= 0x2000 && c <= 0x200B) ||
         c == 0x2028 || c == 0x2029 || c == 0x202F || c == 0x205F ||
         c == 0x3000 || c == 0xFEFF;
}

bool IsUpper(char32_t c) {
  return (c >= U'A' && c <= U'Z') || (c >= 0xC0 && c <= 0xDE && c != 0xD7);
}

bool IsLower(char32_t c) {
  return (c >= U'a' && c <= U'z') || (c >= 0xDF && c <= 0xFF && c != 0xF7);
}

bool IsAlnum(char32_t c) {
  return (c >= U'0' && c <= U'9') || IsUpper(c) || IsLower(c);
}

bool IsWordChar(char32_t c) {
  if (c < 0x80) return IsAlnum(c);
  if (c < 0xC0) return false;
  if (c == 0xD7 || c == 0xF7) return false;
  if (IsSpace(c)) return false;
  // General Punctuation, CJK symbols and punctuation.
  if (c >= 0x2000 && c <= 0x206F) return false;
  if (c >= 0x3000 && c <= 0x303F) return false;
  return true;
}

bool IsOpeningQuote(char32_t c) {
  return c == U'"' || c == U'\'' || c == 0x201C || c == 0x2018 ||
         c == 0xAB || c == U'(' || c == U'[';
}

bool IsClosingQuote(char32_t c) {
  return c == U'"' || c == U'\'' || c == 0x201D || c == 0x2019 ||
         c == 0xBB || c == U')' || c == U']';
}

bool IsApostrophe(char32_t c) { return c == U'\'' || c == 0x2019; }

char32_t ToLower(char32_t c) {
  if (c >= U'A' && c <= U'Z') return c + 32;
  if (c >= 0xC0 && c <= 0xDE && c != 0xD7) return c + 32;
  return c;
}

char32_t ToUpper(char32_t c) {
  if (c >= U'a' && c <= U'z') return c - 32;
  if (c >= 0xE0 && c <= 0xFE && c != 0xF7) return c - 32;
  return c;
}

Text Lowercase(TextView text) {
  Text out(text);
  for (char32_t& c : out) c = ToLower(c);
  return out;
}

Text Capitalize(TextView text) {
  Text out = Lowercase(text);
  if (!out.empty()) out[0] = ToUpper(out[0]);
  return out;
}

bool StartsUpper(TextView text) { return !text.empty() && IsUpper(text[0]); }

bool IsAllUpper(TextView text) {
  bool any_letter = false;
  for (const char32_t c : text) {
    if (IsLower(c)) return false;
    if (IsUpper(c)) any_letter = true;
  }
  return any_letter;
}

Text TransferCase(TextView original, TextView replacement) {
  int letters = 0;
  for (const char32_t c : original) {
    if (IsUpper(c) || IsLower(c)) ++letters;
  }
  if (letters > 1 && IsAllUpper(original)) {
    Text out(replacement);
    for (char32_t& c : out) c = ToUpper(c);
    return out;
  }
  if (StartsUpper(original)) {
    Text out(replacement);
    if (!out.empty()) out[0] = ToUpper(out[0]);
    return out;
  }
  return Lowercase(replacement);
}

Span TrimSpan(TextView text, Span span) {
  while (span.begin < span.end && IsSpace(text[span.begin])) ++span.begin;
  while (span.end > span.begin && IsSpace(text[span.end - 1])) --span.end;
  return span;
}

EditedText::EditedText(TextView source, std::vector<Edit> edits)
    : edits_(std::move(edits)) {
  std::stable_sort(edits_.begin(), edits_.end(),
                   [](const Edit& a, const Edit& b) {
                     return a.span.begin < b.span.begin;
                   });
  const auto size = static_cast<int64_t>(source.size());
  int64_t cursor = 0;
  for (const Edit& edit : edits_) {
    if (edit.span.begin < cursor || edit.span.end < edit.span.begin ||
        edit.span.end > size) {
      throw DataError("overlapping or out-of-range text edit at [" +
                      std::to_string(edit.span.begin) + ", " +
                      std::to_string(edit.span.end) + ")");
    }
    text_.append(source.substr(cursor, edit.span.begin - cursor));
    new_starts_.push_back(static_cast<int64_t>(text_.size()));
    text_.append(edit.replacement);
    cursor = edit.span.end;
  }
  text_.append(source.substr(cursor));
}

int64_t EditedText::MapOffset(int64_t offset) const {
  // Index of the first edit that does not end at or before `offset`.
  const auto it = std::partition_point(
      edits_.begin(), edits_.end(),
      [offset](const Edit& e) { return e.span.end <= offset; });
  const auto k = static_cast<size_t>(it - edits_.begin());
  int64_t mapped = offset;
  if (k > 0) {
    const Edit& prev = edits_[k - 1];
    mapped = offset - prev.span.end + new_starts_[k - 1] +
             static_cast<int64_t>(prev.replacement.size());
  }
  if (k < edits_.size() && edits_[k].span.begin < offset) {
    const Edit& inside = edits_[k];
    return new_starts_[k] +
           std::min<int64_t>(offset - inside.span.begin,
                             static_cast<int64_t>(inside.replacement.size()));
  }
  return mapped;
}

Span EditedText::MapSpan(Span span) const {
  return {MapOffset(span.begin), MapOffset(span.end)};
}

int64_t EditedText::UnmapOffset(int64_t offset) const {
  size_t k = 0;
  while (k < edits_.size() &&
         new_starts_[k] + static_cast<int64_t>(edits_[k].replacement.size()) <=
             offset) {
    ++k;
  }
  int64_t mapped = offset;
  if (k > 0) {
    const int64_t new_end =
        new_starts_[k - 1] +
        static_cast<int64_t>(edits_[k - 1].replacement.size());
    mapped = offset - new_end + edits_[k - 1].span.end;
  }
  if (k < edits_.size() && new_starts_[k] < offset) {
    return edits_[k].span.begin +
           std::min<int64_t>(offset - new_starts_[k], edits_[k].span.size());
  }
  return mapped;
}

Span EditedText::UnmapSpan(Span span) const {
  return {UnmapOffset(span.begin), UnmapOffset(span.end)};
}

}  // namespace quadcoref
