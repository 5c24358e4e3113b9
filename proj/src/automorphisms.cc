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

#include "peirce/automorphisms.h"

#include <algorithm>
#include <set>

namespace peirce {

namespace {

bool Contains(const std::vector<RingIsomorphism>& sorted,
              const AdditiveMap& map) {
  auto it = std::lower_bound(
      sorted.begin(), sorted.end(), map,
      [](const RingIsomorphism& x, const AdditiveMap& m) { return x.map() < m; });
  return it != sorted.end() && it->map() == map;
}

}  // namespace

AutomorphismGroup AutGroup(const Ring& a, const Limits& limits) {
  AutomorphismGroup group{a, AllIsomorphisms(a, a, limits), 0};
  group.order = group.elements.size();
  const auto& els = group.elements;

  if (!Contains(els, RingIsomorphism::Identity(a).map())) {
    throw Error(ErrorKind::kStructureViolation,
                "automorphism list lacks the identity");
  }
  for (const RingIsomorphism& f : els) {
    if (!Contains(els, Invert(f).map())) {
      throw Error(ErrorKind::kStructureViolation,
                  "automorphism list is not closed under inverses");
    }
    for (const RingIsomorphism& g : els) {
      if (!Contains(els, Compose(f.map(), g.map()))) {
        throw Error(ErrorKind::kStructureViolation,
                    "automorphism list is not closed under composition");
      }
    }
  }
  return group;
}

std::uint64_t AutOrder(const Ring& a, const Limits& limits) {
  const TriangularSequence seq = CompleteTriangulatingSet(a, limits);
  std::set<std::vector<Element>> images;
  ForEachIsomorphism(
      seq, seq,
      [&](const RingIsomorphism& phi, const IsoDecomposition&) {
        images.insert(phi.images());
        return true;
      },
      limits);
  return images.size();
}

}  // namespace peirce
