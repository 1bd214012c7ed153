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

#include "quadcoref/instance.h"

#include "quadcoref/error.h"

namespace quadcoref {

std::string_view PatternName(Pattern pattern) {
  switch (pattern) {
    case Pattern::kFinalPro:
      return "FinalPro";
    case Pattern::kMedialPro:
      return "MedialPro";
    case Pattern::kInitialPro:
      return "InitialPro";
  }
  return "FinalPro";
}

Pattern ParsePattern(std::string_view name) {
  if (name == "FinalPro") return Pattern::kFinalPro;
  if (name == "MedialPro") return Pattern::kMedialPro;
  if (name == "InitialPro") return Pattern::kInitialPro;
  throw DataError("unknown pattern '" + std::string(name) + "'");
}

std::string_view VariantName(Variant variant) {
  switch (variant) {
    case Variant::kOriginal:
      return "original";
    case Variant::kControlled:
      return "controlled";
    case Variant::kSwapped1:
      return "swapped1";
    case Variant::kSwapped2:
      return "swapped2";
  }
  return "original";
}

Variant ParseVariant(std::string_view name) {
  if (name == "original") return Variant::kOriginal;
  if (name == "controlled") return Variant::kControlled;
  if (name == "swapped1") return Variant::kSwapped1;
  if (name == "swapped2") return Variant::kSwapped2;
  throw DataError("unknown variant '" + std::string(name) + "'");
}

std::string_view VariantSuffix(Variant variant) {
  switch (variant) {
    case Variant::kOriginal:
      return "o";
    case Variant::kControlled:
      return "c";
    case Variant::kSwapped1:
      return "s1";
    case Variant::kSwapped2:
      return "s2";
  }
  return "o";
}

std::string InstanceId(std::string_view quadruple_id, Variant variant) {
  return std::string(quadruple_id) + "/" + std::string(VariantSuffix(variant));
}

void ValidateInstance(const Instance& instance) {
  const auto fail = [&](const std::string& what) {
    throw DataError("instance " + instance.id + ": " + what);
  };
  const auto size = static_cast<int64_t>(instance.text.size());
  const auto in_bounds = [size](Span s) {
    return 0 <= s.begin && s.begin < s.end && s.end <= size;
  };
  if (!in_bounds(instance.pronoun_span)) fail("pronoun span out of bounds");
  if (instance.Slice(instance.pronoun_span) != instance.pronoun) {
    fail("pronoun span does not match its surface");
  }
  const Gender gender = instance.pronoun_gender();
  if (gender == Gender::kUnknown) fail("not a gendered pronoun");
  std::vector<Span> all;
  for (const auto* group : {&instance.candidates, &instance.opposites}) {
    for (const NameSlot& slot : *group) {
      if (slot.key.empty()) fail("empty name key");
      if (slot.spans.empty()) fail("name '" + ToUtf8(slot.key) + "' has no occurrence");
      for (const Span& span : slot.spans) {
        if (!in_bounds(span)) fail("name span out of bounds");
        if (Lowercase(instance.Slice(span)) != slot.key) {
          fail("span does not hold name '" + ToUtf8(slot.key) + "'");
        }
        for (const Span& other : all) {
          if (other.Overlaps(span)) fail("overlapping name spans");
        }
        all.push_back(span);
      }
    }
  }
  if (instance.candidates[0].key == instance.candidates[1].key ||
      instance.opposites[0].key == instance.opposites[1].key) {
    fail("name slots are not distinct");
  }
  if (instance.candidates[0].spans.front() >
      instance.candidates[1].spans.front()) {
    fail("C1 does not precede C2");
  }
  if (instance.opposites[0].spans.front() >
      instance.opposites[1].spans.front()) {
    fail("O1 does not precede O2");
  }
}

}  // namespace quadcoref
