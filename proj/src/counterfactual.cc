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

#include "quadcoref/counterfactual.h"

#include <algorithm>
#include <optional>

#include "quadcoref/error.h"

namespace quadcoref {
namespace {

// Slot order used by name maps: C1, C2, O1, O2.
using SlotMap = std::array<int, 4>;

const NameSlot& SlotAt(const Instance& x, int slot) {
  return slot < 2 ? x.candidates[slot] : x.opposites[slot - 2];
}

NameSlot& SlotAt(Instance& x, int slot) {
  return slot < 2 ? x.candidates[slot] : x.opposites[slot - 2];
}

void CheckNameSpans(const Instance& x) {
  std::vector<Span> spans;
  for (int s = 0; s < 4; ++s) {
    const NameSlot& slot = SlotAt(x, s);
    if (slot.spans.empty()) {
      throw DataError("instance " + x.id + ": name '" + ToUtf8(slot.key) +
                      "' never occurs");
    }
    for (const Span& span : slot.spans) {
      for (const Span& other : spans) {
        if (other.Overlaps(span)) {
          throw DataError("instance " + x.id +
                          ": ambiguous replacement, name spans overlap");
        }
      }
      spans.push_back(span);
    }
  }
  ValidateInstance(x);
}

std::vector<Token> AllTokens(const Instance& x, const Resources& resources) {
  std::vector<Token> tokens;
  for (Sentence& s : Segment(x.text, resources.abbreviations)) {
    for (Token& t : s.tokens) tokens.push_back(std::move(t));
  }
  return tokens;
}

// `source[k]` names the slot whose name moves into slot k.
Instance Rewrite(const Instance& x, const SlotMap& source, bool swap_words,
                 Variant variant, const Resources& resources) {
  CheckNameSpans(x);
  std::array<Text, 4> surfaces;
  for (int s = 0; s < 4; ++s) {
    surfaces[s] = Text(x.Slice(SlotAt(x, s).spans.front()));
  }

  std::vector<Edit> edits;
  std::vector<Span> name_spans;
  for (int s = 0; s < 4; ++s) {
    const int from = source[s];
    for (const Span& span : SlotAt(x, s).spans) {
      name_spans.push_back(span);
      if (from != s) {
        edits.push_back({span, TransferCase(x.Slice(span), surfaces[from])});
      }
    }
  }
  if (swap_words) {
    const std::vector<Token> tokens = AllTokens(x, resources);
    for (size_t k = 0; k < tokens.size(); ++k) {
      const Token& token = tokens[k];
      const bool in_name = std::any_of(
          name_spans.begin(), name_spans.end(),
          [&](const Span& s) { return s.Overlaps(token.span); });
      if (in_name || !resources.lexicon.IsGendered(token.text)) continue;
      std::optional<TextView> next;
      if (k + 1 < tokens.size()) next = TextView(tokens[k + 1].text);
      Text swapped = resources.lexicon.SwapGenderedWord(token.text, next);
      if (swapped != token.text) edits.push_back({token.span, std::move(swapped)});
    }
  }

  const EditedText edited(x.text, std::move(edits));
  Instance y = x;
  y.variant = variant;
  y.id = InstanceId(x.quadruple_id, variant);
  y.text = edited.text();
  y.pronoun_span = edited.MapSpan(x.pronoun_span);
  y.pronoun = Text(y.Slice(y.pronoun_span));
  for (int s = 0; s < 4; ++s) {
    NameSlot& slot = SlotAt(y, s);
    slot.key = SlotAt(x, source[s]).key;
    for (Span& span : slot.spans) span = edited.MapSpan(span);
  }
  y.gold.reset();
  ValidateInstance(y);
  return y;
}

Variant ControlledCounterpart(Variant v) {
  switch (v) {
    case Variant::kOriginal:
      return Variant::kControlled;
    case Variant::kControlled:
      return Variant::kOriginal;
    case Variant::kSwapped1:
      return Variant::kSwapped2;
    case Variant::kSwapped2:
      return Variant::kSwapped1;
  }
  return v;
}

}  // namespace

Instance GenderControlled(const Instance& x, const Resources& resources) {
  // C1<-C2, C2<-C1, O1<-O2, O2<-O1.
  return Rewrite(x, {1, 0, 3, 2}, /*swap_words=*/false,
                 ControlledCounterpart(x.variant), resources);
}

std::pair<Instance, Instance> GenderSwappedPair(const Instance& x,
                                                const Resources& resources) {
  if (x.variant != Variant::kOriginal && x.variant != Variant::kControlled) {
    throw DataError("instance " + x.id +
                    ": gender swapping starts from an original or controlled "
                    "instance");
  }
  const bool from_original = x.variant == Variant::kOriginal;
  // C1<-O2, C2<-O1, O1<-C2, O2<-C1.
  Instance cross = Rewrite(
      x, {3, 2, 1, 0}, /*swap_words=*/true,
      from_original ? Variant::kSwapped1 : Variant::kSwapped2, resources);
  // C1<-O1, C2<-O2, O1<-C1, O2<-C2.
  Instance straight = Rewrite(
      x, {2, 3, 0, 1}, /*swap_words=*/true,
      from_original ? Variant::kSwapped2 : Variant::kSwapped1, resources);
  return {std::move(cross), std::move(straight)};
}

Quadruple BuildQuadruple(const Instance& original, const Resources& resources) {
  if (original.variant != Variant::kOriginal) {
    throw DataError("instance " + original.id + " is not an original instance");
  }
  Quadruple q;
  q.id = original.quadruple_id;
  q.original_gender = original.pronoun_gender();
  Instance x = original;
  x.original_gender = q.original_gender;
  x.id = InstanceId(q.id, Variant::kOriginal);
  x.gold.reset();
  auto [swapped1, swapped2] = GenderSwappedPair(x, resources);
  q.at(Variant::kControlled) = GenderControlled(x, resources);
  q.at(Variant::kSwapped1) = std::move(swapped1);
  q.at(Variant::kSwapped2) = std::move(swapped2);
  q.at(Variant::kOriginal) = std::move(x);
  return q;
}

}  // namespace quadcoref
