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

#ifndef PEIRCE_AUTOMORPHISMS_H_
#define PEIRCE_AUTOMORPHISMS_H_

#include <cstdint>
#include <vector>

#include "peirce/morphisms.h"

namespace peirce {

struct AutomorphismGroup {
  Ring ring;
  std::vector<RingIsomorphism> elements;  // ordered by image matrix
  std::uint64_t order = 0;
};

// Enumerates Aut(A) through decomposition data along the canonical
// triangulating sequence, then checks closure, identity and inverses.
// Throws kStructureViolation if the group axioms fail.
AutomorphismGroup AutGroup(const Ring& a, const Limits& limits = {});

std::uint64_t AutOrder(const Ring& a, const Limits& limits = {});

}  // namespace peirce

#endif  // PEIRCE_AUTOMORPHISMS_H_
