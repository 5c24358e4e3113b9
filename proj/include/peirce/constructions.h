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

#ifndef PEIRCE_CONSTRUCTIONS_H_
#define PEIRCE_CONSTRUCTIONS_H_

#include <string>
#include <vector>

#include "peirce/ring.h"

namespace peirce {

// Z_n on the single generator 1.
Ring Cyclic(Coeff n);

// Z_p[x] / (x^k + c_{k-1} x^{k-1} + ... + c_0) on the basis 1, x, ...,
// x^{k-1}, where poly = {c_0, ..., c_{k-1}}. Irreducibility is the caller's
// business.
Ring FiniteField(Coeff p, const std::vector<Coeff>& poly);

// Upper triangular n x n matrices over Z_q on the matrix units E_ij, i <= j,
// in row-major order.
Ring UpperTriangular(std::size_t n, Coeff q);

Ring DirectProduct(const Ring& a, const Ring& b);

// The path algebra of 1 -> 2 -> 3 over F_2 modulo paths of length two, on
// E11, E12, E22, E23, E33. Both L_12 and L_23 are nonzero, E12 E23 = 0.
Ring ThreeBlock();

// The same ring with generator t of the result being generator perm[t] of a.
Ring PermuteGenerators(const Ring& a, const std::vector<std::size_t>& perm);

// The bundled fixture corpus, in a fixed order.
std::vector<std::string> FixtureNames();
Ring Fixture(const std::string& name);

}  // namespace peirce

#endif  // PEIRCE_CONSTRUCTIONS_H_
