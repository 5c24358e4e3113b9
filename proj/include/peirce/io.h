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

#ifndef PEIRCE_IO_H_
#define PEIRCE_IO_H_

// JSON forms of rings, maps and decompositions. Object keys are sorted, so
// dumps are byte-deterministic. Permutations are 1-based on disk.

#include <string>
#include <vector>

#include "json.hpp"
#include "peirce/morphisms.h"
#include "peirce/ring.h"

namespace peirce {

using Json = nlohmann::json;

Json ElementToJson(const Element& x);
// Throws kFormat unless j is an integer array of the given length.
Element ElementFromJson(const Json& j, std::size_t length);

Json RingToJson(const Ring& a);
// Shape problems raise kFormat; axiom failures raise the validator's errors.
Ring RingFromJson(const Json& j);

Json ReadJsonFile(const std::string& path);
Ring LoadRing(const std::string& path);

// FNV-1a (64-bit, hex) of the canonical JSON of orders, mul and one.
std::string RingHash(const Ring& a);

Json MapToJson(const AdditiveMap& f, const std::string& domain,
               const std::string& codomain);
AdditiveMap MapFromJson(const Json& j, const std::vector<Coeff>& domain_orders,
                        const std::vector<Coeff>& codomain_orders);

Json DecompositionToJson(const IsoDecomposition& d);
// Rebuilds the corner maps against the corners that sigma selects. Throws
// kFormat on malformed input.
IsoDecomposition DecompositionFromJson(const Json& j,
                                       const TriangularSequence& seq_a,
                                       const TriangularSequence& seq_b);

}  // namespace peirce

#endif  // PEIRCE_IO_H_
