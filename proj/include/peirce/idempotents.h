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

#ifndef PEIRCE_IDEMPOTENTS_H_
#define PEIRCE_IDEMPOTENTS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "peirce/corner.h"
#include "peirce/ring.h"

namespace peirce {

// All x with x^2 = x, lexicographically ordered. Throws kCapExceeded.
std::vector<Element> EnumerateIdempotents(const Ring& a,
                                          const Limits& limits = {});

// (1 - e) A e == 0. Throws kNotIdempotent.
bool IsSemicentral(const Ring& a, const Element& e);

// The only semicentral idempotents of `a` are 0 and 1.
bool IsSemicentralReduced(const Ring& a, const Limits& limits = {});

// Variants relative to a corner uAu given by its unit u, evaluated on
// ambient elements. `idempotents` must be the full idempotent list of `a`.
bool IsSemicentralWithin(const Ring& a, const Element& unit, const Element& e);
bool HasReducedCorner(const Ring& a, const Element& e,
                      std::span<const Element> idempotents);
// Complete set of left triangulating idempotents of uAu, built greedily from
// the lexicographically smallest nonzero semicentral idempotent with reduced
// corner.
std::vector<Element> TriangulateWithin(const Ring& a, const Element& unit,
                                       std::span<const Element> idempotents);

// An ordered complete set of left triangulating idempotents e_1..e_m, with
// the corner rings R_i = e_i A e_i and tail corners A_i = E_i A E_i where
// E_i = e_i + ... + e_m.
class TriangularSequence {
 public:
  // Validates; throws kInvalidSequence naming the first failed condition.
  static TriangularSequence Make(const Ring& ring, std::vector<Element> idems,
                                 const Limits& limits = {});

  const Ring& ring() const { return ring_; }
  const std::vector<Element>& idempotents() const { return idems_; }
  std::size_t length() const { return idems_.size(); }
  const Element& operator[](std::size_t i) const { return idems_[i]; }

  const CornerRing& corner(std::size_t i) const { return corners_[i]; }
  const CornerRing& tail(std::size_t i) const { return tails_[i]; }
  // E_i; E_m (one past the end) is zero.
  const Element& tail_unit(std::size_t i) const;

 private:
  TriangularSequence() = default;

  Ring ring_ = Ring::Validate({});
  std::vector<Element> idems_;
  std::vector<CornerRing> corners_;
  std::vector<CornerRing> tails_;
  std::vector<Element> tail_units_;
};

TriangularSequence CompleteTriangulatingSet(const Ring& a,
                                            const Limits& limits = {});

struct Location {
  std::size_t index;  // 0-based j
  Element offset;     // f - f_j, an element of the truncated row M_j
};

// For a semicentral idempotent f of B with reduced corner, finds the unique
// j with f_j f f_j = f_j, and checks f - f_j in M_j and M_ij = 0 for i < j.
// Throws kNotSemicentralReduced or kStructureViolation.
Location LocateReduced(const Ring& b, const TriangularSequence& seq,
                       const Element& f, const Limits& limits = {});

// The same, for a triangulating sequence `idems` of the corner uBu, where
// u = sum(idems). Skips the reducedness precondition check.
Location LocateWithin(const Ring& b, std::span<const Element> idems,
                      const Element& f);

struct Extension {
  TriangularSequence sequence;
  std::size_t prefix_length;  // l: the first l idempotents sum to e
};

// Extends a semicentral idempotent e to a complete triangulating sequence
// whose first l terms sum to e. Throws kNotSemicentral.
Extension ExtendSemicentral(const Ring& a, const Element& e,
                            const Limits& limits = {});

}  // namespace peirce

#endif  // PEIRCE_IDEMPOTENTS_H_
