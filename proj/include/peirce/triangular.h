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

#ifndef PEIRCE_TRIANGULAR_H_
#define PEIRCE_TRIANGULAR_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "peirce/idempotents.h"
#include "peirce/subgroup.h"

namespace peirce {

// A permutation of block indices, 0-based: position p holds block sigma[p].
using Permutation = std::vector<std::size_t>;

// Description of the first failed condition of a strongly triangular
// decomposition, or nullopt when `idems` is one. Conditions are checked in
// the order: membership, nonzero idempotents, pairwise orthogonality, sum
// equal to 1, vanishing lower components, reduced corners.
std::optional<std::string> TriangularityFailure(const Ring& a,
                                                std::span<const Element> idems,
                                                const Limits& limits = {});

bool IsStronglyTriangular(const Ring& a, std::span<const Element> idems,
                          const Limits& limits = {});

// The generalized upper triangular matrix form of A with respect to a
// triangulating sequence.
struct PeirceDecomposition {
  TriangularSequence seq;
  // components[i][j] = e_i A e_j, for all i, j.
  std::vector<std::vector<Subgroup>> components;
  // rows[i] = e_i A (e_{i+1} + ... + e_m), the i-th truncated row.
  std::vector<Subgroup> rows;

  std::size_t length() const { return seq.length(); }
  const CornerRing& corner(std::size_t i) const { return seq.corner(i); }
  const CornerRing& tail(std::size_t i) const { return seq.tail(i); }
};

// Throws kInvalidSequence if `seq` does not belong to `a` or the direct-sum
// bookkeeping fails.
PeirceDecomposition PeirceDecompose(const Ring& a,
                                    const TriangularSequence& seq);

// seq reordered so that position p holds seq[sigma[p]]. Throws
// kInadmissiblePermutation if sigma is not a permutation or the reordered
// sequence is not strongly triangular.
TriangularSequence Reordered(const TriangularSequence& seq,
                             const Permutation& sigma,
                             const Limits& limits = {});

// Moves f_j (0-based) to the front. Requires M_ij == 0 for every i < j;
// throws kPreconditionViolated naming the first offending i.
TriangularSequence ReorderFront(const Ring& b, const TriangularSequence& seq,
                                std::size_t j, const Limits& limits = {});

// Every sigma for which {f_sigma(1), ..., f_sigma(m)} is again strongly
// triangular, in lexicographic order. Throws kTooManyBlocks above
// limits.max_blocks.
std::vector<Permutation> AdmissibleOrders(const Ring& b,
                                          const TriangularSequence& seq,
                                          const Limits& limits = {});

// Blocks j (0-based) whose off-diagonal row and column components all
// vanish, so that B is the ring direct sum of S_j and the corner on the
// remaining idempotents. Empty for m < 2.
std::vector<std::size_t> DetectDirectSum(const Ring& b,
                                         const PeirceDecomposition& dec);

}  // namespace peirce

#endif  // PEIRCE_TRIANGULAR_H_
