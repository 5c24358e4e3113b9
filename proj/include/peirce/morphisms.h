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

#ifndef PEIRCE_MORPHISMS_H_
#define PEIRCE_MORPHISMS_H_

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "peirce/corner.h"
#include "peirce/idempotents.h"
#include "peirce/ring.h"
#include "peirce/subgroup.h"
#include "peirce/triangular.h"

namespace peirce {

// A homomorphism of finite abelian groups Z_{d_1} x ... x Z_{d_k} -> codomain,
// given by the images of the k standard generators.
struct AdditiveMap {
  std::vector<Coeff> domain_orders;
  std::vector<Coeff> codomain_orders;
  std::vector<Element> images;

  Element Apply(const Element& x) const;
  // d_i * images[i] == 0 for every generator.
  bool IsWellDefined() const;
  bool IsBijective() const;

  friend bool operator==(const AdditiveMap&, const AdditiveMap&) = default;
  friend auto operator<=>(const AdditiveMap&, const AdditiveMap&) = default;
};

AdditiveMap IdentityMap(const std::vector<Coeff>& orders);

// f after g. Throws kShapeMismatch unless g's codomain is f's domain.
AdditiveMap Compose(const AdditiveMap& f, const AdditiveMap& g);

// Throws kNotBijective.
AdditiveMap Invert(const AdditiveMap& f);

// Well-defined, unital, multiplicative on generator pairs and bijective.
// Throws kShapeMismatch when f does not have the shape of a map A -> B.
bool VerifyRingIso(const AdditiveMap& f, const Ring& a, const Ring& b);

class RingIsomorphism {
 public:
  // Throws kNotIsomorphism unless VerifyRingIso holds.
  static RingIsomorphism Make(Ring domain, Ring codomain, AdditiveMap map);
  static RingIsomorphism Identity(const Ring& a);

  const Ring& domain() const { return domain_; }
  const Ring& codomain() const { return codomain_; }
  const AdditiveMap& map() const { return map_; }
  const std::vector<Element>& images() const { return map_.images; }
  Element Apply(const Element& x) const { return map_.Apply(x); }

  friend bool operator==(const RingIsomorphism& a, const RingIsomorphism& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ &&
           a.map_ == b.map_;
  }

 private:
  RingIsomorphism(Ring domain, Ring codomain, AdditiveMap map)
      : domain_(std::move(domain)),
        codomain_(std::move(codomain)),
        map_(std::move(map)) {}

  Ring domain_;
  Ring codomain_;
  AdditiveMap map_;
};

// f after g.
RingIsomorphism Compose(const RingIsomorphism& f, const RingIsomorphism& g);
RingIsomorphism Invert(const RingIsomorphism& f);

std::optional<Element> FindInverse(const Ring& a, const Element& u);
std::vector<Element> Units(const Ring& a, const Limits& limits = {});

// x -> u x u^{-1}. Throws kNotIsomorphism when u is not a unit.
RingIsomorphism InnerAutomorphism(const Ring& a, const Element& u);

// An additive bijection between two subgroups, in their generator
// coordinates. Source and target live in ambient coordinates of their rings.
struct BimoduleIsomorphism {
  Subgroup source;
  Subgroup target;
  AdditiveMap map;

  Element Apply(const Element& x) const;

  friend bool operator==(const BimoduleIsomorphism& a,
                         const BimoduleIsomorphism& b) {
    return a.source == b.source && a.target == b.target && a.map == b.map;
  }
};

// The block split of uAu along a semicentral idempotent e of uAu:
// head = eAe, rest = (u-e)A(u-e), off_diagonal = eA(u-e).
struct PeirceSplit {
  CornerRing whole;
  CornerRing head;
  CornerRing rest;
  Subgroup off_diagonal;

  const Ring& ambient() const { return whole.parent; }
  const Element& idem() const { return head.idem; }
  const Element& complement() const { return rest.idem; }
};

// Throws kNotSemicentral unless e is an idempotent of uAu with (u-e)Ae = 0.
PeirceSplit MakePeirceSplit(const Ring& a, const Element& unit,
                            const Element& e);

struct CornerQuadruple {
  RingIsomorphism rho;     // head of A -> head of B
  RingIsomorphism phibar;  // rest of A -> rest of B
  BimoduleIsomorphism chi;
  Element m;  // in the off-diagonal component of B, ambient coordinates
};

// phi(r + l + a) = rho(r) + rho(r) m + chi(l) - m phibar(a) + phibar(a),
// as a map of the whole corners. Throws kInconsistentQuadruple.
RingIsomorphism Synthesize(const PeirceSplit& sa, const PeirceSplit& sb,
                           const CornerQuadruple& q);

// Inverse of Synthesize. Throws kLocationMismatch when phi(e) - f is not in
// the off-diagonal component of B.
CornerQuadruple Decompose(const PeirceSplit& sa, const PeirceSplit& sb,
                          const RingIsomorphism& phi);

// Whole-ring forms of the two operations above.
RingIsomorphism CornerSynthesize(const Ring& a, const Ring& b, const Element& e,
                                 const Element& f, const CornerQuadruple& q);
CornerQuadruple CornerDecompose(const RingIsomorphism& phi, const Element& e,
                                const Element& f);

struct IsoLayer {
  RingIsomorphism rho;
  BimoduleIsomorphism chi;
  Element m;

  friend bool operator==(const IsoLayer&, const IsoLayer&) = default;
};

struct IsoDecomposition {
  Permutation sigma;  // 0-based; block i of A goes to block sigma[i] of B
  std::vector<IsoLayer> layers;
  RingIsomorphism last_rho;

  friend bool operator==(const IsoDecomposition&,
                         const IsoDecomposition&) = default;
};

RingIsomorphism IsoSynthesize(const TriangularSequence& seq_a,
                              const TriangularSequence& seq_b,
                              const IsoDecomposition& d,
                              const Limits& limits = {});

IsoDecomposition IsoDecompose(const RingIsomorphism& phi,
                              const TriangularSequence& seq_a,
                              const TriangularSequence& seq_b);

// All ring isomorphisms R -> S by generator images, in lexicographic order.
std::vector<RingIsomorphism> CornerIsomorphisms(const Ring& r, const Ring& s,
                                                const Limits& limits = {});

// All additive bijections chi: L -> M compatible with rho and phibar.
std::vector<BimoduleIsomorphism> CompatibleBimoduleMaps(
    const PeirceSplit& sa, const PeirceSplit& sb, const RingIsomorphism& rho,
    const RingIsomorphism& phibar, const Limits& limits = {});

using IsoCallback =
    std::function<bool(const RingIsomorphism&, const IsoDecomposition&)>;

// Visits every isomorphism A -> B through its decomposition data. Stops
// early when the callback returns false; returns false in that case.
bool ForEachIsomorphism(const TriangularSequence& seq_a,
                        const TriangularSequence& seq_b, const IsoCallback& fn,
                        const Limits& limits = {});

std::optional<RingIsomorphism> IsoSearch(const Ring& a, const Ring& b,
                                         const Limits& limits = {});

// Distinct isomorphisms, ordered by image matrix.
std::vector<RingIsomorphism> AllIsomorphisms(const Ring& a, const Ring& b,
                                             const Limits& limits = {});

}  // namespace peirce

#endif  // PEIRCE_MORPHISMS_H_
