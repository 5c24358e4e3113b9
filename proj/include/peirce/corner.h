// Copyright 2026 The Peirce Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PEIRCE_CORNER_H_
#define PEIRCE_CORNER_H_

#include "peirce/ring.h"
#include "peirce/subgroup.h"

namespace peirce {

// The corner ring eAe of an idempotent e, presented on the independent
// generators of the additive subgroup {exe : x in A}, with unit e.
struct CornerRing {
  Ring parent;
  Element idem;
  Subgroup group;
  Ring presentation;

  // Corner coordinates -> ambient element.
  Element Embed(const Element& corner_element) const;
  // x -> corner coordinates of exe.
  Element Project(const Element& x) const;
  // Corner coordinates of an ambient element already lying in eAe.
  Element Coordinates(const Element& x) const;
};

// Throws kNotIdempotent. For e == 1 the presentation is A itself.
CornerRing MakeCornerRing(const Ring& a, const Element& e);

// The additive subgroup eAf, spanned by e * g_i * f over the generators.
// Throws kNotIdempotent.
Subgroup PeirceComponent(const Ring& a, const Element& e, const Element& f);

}  // namespace peirce

#endif  // PEIRCE_CORNER_H_
