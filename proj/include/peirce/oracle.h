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

#ifndef PEIRCE_ORACLE_H_
#define PEIRCE_ORACLE_H_

// Reference implementations by exhaustive enumeration. They use nothing but
// element arithmetic, so they fail independently of the subgroup and corner
// machinery they are used to check.

#include <cstdint>
#include <span>
#include <vector>

#include "peirce/ring.h"

namespace peirce::oracle {

inline constexpr std::uint64_t kElementCap = 1024;
inline constexpr std::uint64_t kCandidateCap = std::uint64_t{1} << 20;

// All elements in lexicographic order. Throws kCapExceeded.
std::vector<Element> BruteElements(const Ring& a);

std::vector<Element> BruteIdempotents(const Ring& a);
bool BruteSemicentral(const Ring& a, const Element& e);
std::vector<Element> BruteSemicentralIdempotents(const Ring& a);
bool BruteSemicentralReduced(const Ring& a);

// Nonzero semicentral idempotents f whose corner fAf is semicentral reduced.
std::vector<Element> BruteReducedSemicentralIdempotents(const Ring& a);

bool BruteTriangularCheck(const Ring& a, std::span<const Element> idems);

std::vector<Element> BruteUnits(const Ring& a);

// Ring isomorphisms A -> B as tuples of generator images, sorted.
std::vector<std::vector<Element>> BruteIsos(const Ring& a, const Ring& b);

// Checks an image tuple on every element and every pair of elements.
bool BruteIsRingIso(const Ring& a, const Ring& b,
                    const std::vector<Element>& images);

}  // namespace peirce::oracle

#endif  // PEIRCE_ORACLE_H_
