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

#ifndef QUADCOREF_INSTANCE_H_
#define QUADCOREF_INSTANCE_H_

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadcoref/lexicon.h"
#include "quadcoref/text.h"

namespace quadcoref {

enum class Pattern { kFinalPro, kMedialPro, kInitialPro };

std::string_view PatternName(Pattern pattern);
Pattern ParsePattern(std::string_view name);

enum class Variant { kOriginal, kControlled, kSwapped1, kSwapped2 };

std::string_view VariantName(Variant variant);
Variant ParseVariant(std::string_view name);
// Suffix used in instance ids: o, c, s1, s2.
std::string_view VariantSuffix(Variant variant);

// TRUE means the candidate is coreferent with the target pronoun.
struct AggregatedLabel {
  bool c1 = false;
  bool c2 = false;
  friend bool operator==(const AggregatedLabel&, const AggregatedLabel&) =
      default;
};

// One personal name in an instance: its normalized first-name key and every
// token occurrence of that name in the instance text.
struct NameSlot {
  Text key;
  std::vector<Span> spans;
  friend bool operator==(const NameSlot&, const NameSlot&) = default;
};

// A coreference test item. Name slots are positional: slot C1 is the
// candidate whose first occurrence comes first, and counterfactual variants
// keep every slot at the same token positions while changing the name that
// fills it.
struct Instance {
  std::string id;
  std::string quadruple_id;
  Variant variant = Variant::kOriginal;
  Text text;
  Span pronoun_span;
  Text pronoun;
  std::array<NameSlot, 2> candidates;  // C1, C2
  std::array<NameSlot, 2> opposites;   // O1, O2
  Pattern pattern = Pattern::kFinalPro;
  Gender original_gender = Gender::kUnknown;
  std::optional<AggregatedLabel> gold;
  std::string document_id;
  int first_sentence = 0;
  int last_sentence = 0;

  Gender pronoun_gender() const { return PronounGender(pronoun); }
  TextView Slice(Span span) const {
    return TextView(text).substr(span.begin, span.size());
  }
  friend bool operator==(const Instance&, const Instance&) = default;
};

// Throws DataError describing the first violated invariant.
void ValidateInstance(const Instance& instance);

std::string InstanceId(std::string_view quadruple_id, Variant variant);

struct Quadruple {
  std::string id;
  Gender original_gender = Gender::kUnknown;
  // Indexed by Variant.
  std::array<Instance, 4> variants;

  const Instance& at(Variant v) const {
    return variants[static_cast<size_t>(v)];
  }
  Instance& at(Variant v) { return variants[static_cast<size_t>(v)]; }
  const Instance& original() const { return at(Variant::kOriginal); }
  const Instance& controlled() const { return at(Variant::kControlled); }
  const Instance& swapped1() const { return at(Variant::kSwapped1); }
  const Instance& swapped2() const { return at(Variant::kSwapped2); }
  friend bool operator==(const Quadruple&, const Quadruple&) = default;
};

inline constexpr std::array<Variant, 4> kAllVariants = {
    Variant::kOriginal, Variant::kControlled, Variant::kSwapped1,
    Variant::kSwapped2};

}  // namespace quadcoref

#endif  // QUADCOREF_INSTANCE_H_
