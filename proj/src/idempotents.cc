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

#include "peirce/idempotents.h"

#include <string>
#include <utility>

#include "peirce/triangular.h"

namespace peirce {

std::vector<Element> EnumerateIdempotents(const Ring& a, const Limits& limits) {
  std::vector<Element> out;
  a.ForEachElement(limits, [&](const Element& x) {
    if (a.Mul(x, x) == x) out.push_back(x);
    return true;
  });
  return out;
}

bool IsSemicentral(const Ring& a, const Element& e) {
  a.Check(e);
  if (!a.IsIdempotent(e)) {
    throw Error(ErrorKind::kNotIdempotent, ToString(e) + " is not idempotent");
  }
  return PeirceComponent(a, a.Sub(a.one(), e), e).IsZero();
}

bool IsSemicentralWithin(const Ring& a, const Element& unit, const Element& e) {
  const Element complement = a.Sub(unit, e);
  for (std::size_t i = 0; i < a.rank(); ++i) {
    if (!a.IsZero(a.Mul(complement, a.generator(i), e))) return false;
  }
  return true;
}

bool IsSemicentralReduced(const Ring& a, const Limits& limits) {
  for (const Element& e : EnumerateIdempotents(a, limits)) {
    if (a.IsZero(e) || e == a.one()) continue;
    if (IsSemicentralWithin(a, a.one(), e)) return false;
  }
  return true;
}

namespace {

// g lies in the corner uAu.
bool InCorner(const Ring& a, const Element& u, const Element& g) {
  return a.Mul(u, g) == g && a.Mul(g, u) == g;
}

Element Sum(const Ring& a, std::span<const Element> xs) {
  Element s = a.zero();
  for (const Element& x : xs) s = a.Add(s, x);
  return s;
}

}  // namespace

bool HasReducedCorner(const Ring& a, const Element& e,
                      std::span<const Element> idempotents) {
  for (const Element& g : idempotents) {
    if (a.IsZero(g) || g == e) continue;
    if (InCorner(a, e, g) && IsSemicentralWithin(a, e, g)) return false;
  }
  return true;
}

std::vector<Element> TriangulateWithin(const Ring& a, const Element& unit,
                                       std::span<const Element> idempotents) {
  std::vector<Element> out;
  Element current = unit;
  while (!a.IsZero(current)) {
    const Element* head = nullptr;
    for (const Element& g : idempotents) {
      if (a.IsZero(g) || !InCorner(a, current, g)) continue;
      if (!IsSemicentralWithin(a, current, g)) continue;
      if (!HasReducedCorner(a, g, idempotents)) continue;
      head = &g;
      break;
    }
    // A finite nonzero ring always has one: a minimal nonzero semicentral
    // idempotent has reduced corner.
    if (head == nullptr) {
      throw Error(ErrorKind::kStructureViolation,
                  "no reduced semicentral idempotent in corner of " +
                      ToString(current));
    }
    out.push_back(*head);
    current = a.Sub(current, *head);
  }
  return out;
}

TriangularSequence TriangularSequence::Make(const Ring& ring,
                                            std::vector<Element> idems,
                                            const Limits& limits) {
  if (std::optional<std::string> failure =
          TriangularityFailure(ring, idems, limits)) {
    throw Error(ErrorKind::kInvalidSequence, *failure);
  }
  TriangularSequence seq;
  seq.ring_ = ring;
  seq.idems_ = std::move(idems);
  const std::size_t m = seq.idems_.size();
  seq.tail_units_.assign(m + 1, ring.zero());
  for (std::size_t i = m; i-- > 0;) {
    seq.tail_units_[i] = ring.Add(seq.tail_units_[i + 1], seq.idems_[i]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    seq.corners_.push_back(MakeCornerRing(ring, seq.idems_[i]));
    seq.tails_.push_back(MakeCornerRing(ring, seq.tail_units_[i]));
  }
  return seq;
}

const Element& TriangularSequence::tail_unit(std::size_t i) const {
  return tail_units_.at(i);
}

TriangularSequence CompleteTriangulatingSet(const Ring& a,
                                            const Limits& limits) {
  const std::vector<Element> idems = EnumerateIdempotents(a, limits);
  return TriangularSequence::Make(a, TriangulateWithin(a, a.one(), idems),
                                  limits);
}

Location LocateWithin(const Ring& b, std::span<const Element> idems,
                      const Element& f) {
  std::vector<std::size_t> hits;
  for (std::size_t j = 0; j < idems.size(); ++j) {
    if (!b.IsZero(b.Mul(idems[j], f, idems[j]))) hits.push_back(j);
  }
  if (hits.size() != 1) {
    throw Error(ErrorKind::kStructureViolation,
                std::to_string(hits.size()) + " indices j have f_j f f_j != 0 "
                "for f = " + ToString(f) + ", expected exactly one");
  }
  const std::size_t j = hits[0];
  const Element& fj = idems[j];
  if (b.Mul(fj, f, fj) != fj) {
    throw Error(ErrorKind::kStructureViolation,
                "f_j f f_j != f_j at j = " + std::to_string(j + 1), {j});
  }
  Element offset = b.Sub(f, fj);
  const Element later = Sum(b, idems.subspan(j + 1));
  if (!PeirceComponent(b, fj, later).Contains(offset)) {
    throw Error(ErrorKind::kStructureViolation,
                "f - f_j is not in the truncated row M_" + std::to_string(j + 1),
                {j});
  }
  for (std::size_t i = 0; i < j; ++i) {
    if (!PeirceComponent(b, idems[i], fj).IsZero()) {
      throw Error(ErrorKind::kStructureViolation,
                  "M_" + std::to_string(i + 1) + std::to_string(j + 1) +
                      " != 0 above the located block",
                  {i, j});
    }
  }
  return Location{j, std::move(offset)};
}

Location LocateReduced(const Ring& b, const TriangularSequence& seq,
                       const Element& f, const Limits& limits) {
  b.Check(f);
  if (!(seq.ring() == b)) {
    throw Error(ErrorKind::kInvalidSequence,
                "sequence belongs to a different ring");
  }
  if (b.IsZero(f) || !b.IsIdempotent(f) || !IsSemicentralWithin(b, b.one(), f)) {
    throw Error(ErrorKind::kNotSemicentralReduced,
                ToString(f) + " is not a nonzero semicentral idempotent");
  }
  if (!HasReducedCorner(b, f, EnumerateIdempotents(b, limits))) {
    throw Error(ErrorKind::kNotSemicentralReduced,
                "corner of " + ToString(f) + " is not semicentral reduced");
  }
  return LocateWithin(b, seq.idempotents(), f);
}

Extension ExtendSemicentral(const Ring& a, const Element& e,
                            const Limits& limits) {
  a.Check(e);
  if (!a.IsIdempotent(e) || !IsSemicentralWithin(a, a.one(), e)) {
    throw Error(ErrorKind::kNotSemicentral,
                ToString(e) + " is not a semicentral idempotent");
  }
  const std::vector<Element> idems = EnumerateIdempotents(a, limits);
  std::vector<Element> seq = TriangulateWithin(a, e, idems);
  const std::size_t prefix = seq.size();
  for (Element& g : TriangulateWithin(a, a.Sub(a.one(), e), idems)) {
    seq.push_back(std::move(g));
  }
  return Extension{TriangularSequence::Make(a, std::move(seq), limits), prefix};
}

}  // namespace peirce
