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

#ifndef QUADCOREF_COUNTERFACTUAL_H_
#define QUADCOREF_COUNTERFACTUAL_H_

#include <utility>

#include "quadcoref/instance.h"
#include "quadcoref/resources.h"

namespace quadcoref {

// Swaps every occurrence of C1 with C2 and of O1 with O2. Gendered common
// words are untouched. Applying it twice restores the input text.
// Throws DataError ("ambiguous replacement") when name spans overlap or do
// not hold their names.
Instance GenderControlled(const Instance& x, const Resources& resources);

// Substitutes every gendered word with its counterpart, then pairs names
// across genders. The first result puts O2 in C1's slot and O1 in C2's slot;
// the second puts O1 in C1's slot and O2 in C2's slot. Applied to a
// controlled instance the two results come back in the opposite order.
std::pair<Instance, Instance> GenderSwappedPair(const Instance& x,
                                                const Resources& resources);

// Original, controlled and both swapped variants under one quadruple id.
Quadruple BuildQuadruple(const Instance& original, const Resources& resources);

}  // namespace quadcoref

#endif  // QUADCOREF_COUNTERFACTUAL_H_
