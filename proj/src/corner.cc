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

#include "peirce/corner.h"

#include <string>
#include <vector>

namespace peirce {

namespace {

void RequireIdempotent(const Ring& a, const Element& e) {
  a.Check(e);
  if (!a.IsIdempotent(e)) {
    throw Error(ErrorKind::kNotIdempotent, ToString(e) + " is not idempotent");
  }
}

}  // namespace

Subgroup PeirceComponent(const Ring& a, const Element& e, const Element& f) {
  RequireIdempotent(a, e);
  RequireIdempotent(a, f);
  std::vector<Element> products;
  products.reserve(a.rank());
  for (std::size_t i = 0; i < a.rank(); ++i) {
    products.push_back(a.Mul(e, a.generator(i), f));
  }
  return Subgroup::Span(a.orders(), products);
}

Element CornerRing::Embed(const Element& corner_element) const {
  presentation.Check(corner_element);
  return group.FromCoordinates(corner_element);
}

Element CornerRing::Coordinates(const Element& x) const {
  std::optional<Element> c = group.Coordinates(x);
  if (!c) {
    throw Error(ErrorKind::kAmbientMismatch,
                ToString(x) + " does not lie in the corner of " +
                    ToString(idem));
  }
  return *std::move(c);
}

Element CornerRing::Project(const Element& x) const {
  return Coordinates(parent.Mul(idem, x, idem));
}

CornerRing MakeCornerRing(const Ring& a, const Element& e) {
  RequireIdempotent(a, e);
  if (e == a.one()) {
    return CornerRing{a, e, Subgroup::Whole(a.orders()), a};
  }
  Subgroup group = PeirceComponent(a, e, e);
  const std::vector<Element>& gens = group.generators();
  const std::size_t r = gens.size();

  RawPresentation raw;
  raw.name = a.name().empty() ? std::string() : a.name() + "[" + ToString(e) + "]";
  raw.orders = group.generator_orders();
  raw.mul.assign(r, std::vector<std::vector<Coeff>>(r));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      std::optional<Element> c = group.Coordinates(a.Mul(gens[i], gens[j]));
      if (!c) {
        throw Error(ErrorKind::kStructureViolation,
                    "corner of " + ToString(e) + " is not closed under products");
      }
      raw.mul[i][j] = std::move(c->coeffs);
    }
  }
  std::optional<Element> unit = group.Coordinates(e);
  raw.one = unit->coeffs;
  return CornerRing{a, e, group, Ring::Validate(raw)};
}

}  // namespace peirce
