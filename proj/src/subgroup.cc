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

#include "peirce/subgroup.h"

#include <algorithm>

#include "peirce/lattice.h"

namespace peirce {

using lattice::Int;
using lattice::Row;

namespace {

Int Modulus(const std::vector<Coeff>& ambient) {
  Int n = 1;
  for (Coeff d : ambient) n = lattice::Lcm(n, d);
  return n;
}

Row ScaleUp(const Element& x, const std::vector<Coeff>& ambient, Int n) {
  Row row(ambient.size());
  for (std::size_t c = 0; c < ambient.size(); ++c) {
    row[c] = lattice::MulMod(lattice::Mod(x.coeffs[c], ambient[c]),
                             n / ambient[c], n);
  }
  return row;
}

Element ScaleDown(const Row& row, const std::vector<Coeff>& ambient, Int n) {
  Element x{std::vector<Coeff>(ambient.size())};
  for (std::size_t c = 0; c < ambient.size(); ++c) {
    x.coeffs[c] = row[c] / (n / ambient[c]);
  }
  return x;
}

}  // namespace

void Subgroup::CheckAmbient(const Element& x) const {
  const auto& ambient = data_->ambient;
  if (x.coeffs.size() != ambient.size()) {
    throw Error(ErrorKind::kAmbientMismatch,
                "element " + ToString(x) + " does not match ambient rank " +
                    std::to_string(ambient.size()));
  }
  for (std::size_t i = 0; i < ambient.size(); ++i) {
    if (x.coeffs[i] < 0 || x.coeffs[i] >= ambient[i]) {
      throw Error(ErrorKind::kAmbientMismatch,
                  "element " + ToString(x) + " is not reduced", {i});
    }
  }
}

Subgroup Subgroup::Span(const std::vector<Coeff>& ambient_orders,
                        std::span<const Element> elements) {
  auto data = std::make_shared<Data>();
  data->ambient = ambient_orders;
  data->modulus = Modulus(ambient_orders);
  const Int n = data->modulus;
  const std::size_t k = ambient_orders.size();

  std::vector<Row> rows;
  rows.reserve(elements.size());
  for (const Element& x : elements) {
    if (x.coeffs.size() != k) {
      throw Error(ErrorKind::kAmbientMismatch,
                  "element " + ToString(x) + " does not match ambient rank " +
                      std::to_string(k));
    }
    rows.push_back(ScaleUp(x, ambient_orders, n));
  }
  data->howell = lattice::HowellForm(std::move(rows), n, k);
  data->order = lattice::HowellOrder(data->howell, n);
  for (const Row& row : data->howell) {
    data->basis.push_back(ScaleDown(row, ambient_orders, n));
  }

  std::vector<Row> unscaled;
  for (const lattice::CyclicGenerator& g :
       lattice::IndependentGenerators(data->howell, n)) {
    Element y = ScaleDown(g.row, ambient_orders, n);
    unscaled.push_back(y.coeffs);
    data->generators.push_back(std::move(y));
    data->orders.push_back(g.order);
  }
  data->solver.emplace(ambient_orders, unscaled, data->orders);
  return Subgroup(data);
}

Subgroup Subgroup::Zero(const std::vector<Coeff>& ambient_orders) {
  return Span(ambient_orders, {});
}

Subgroup Subgroup::Whole(const std::vector<Coeff>& ambient_orders) {
  std::vector<Element> gens;
  for (std::size_t i = 0; i < ambient_orders.size(); ++i) {
    Element g{std::vector<Coeff>(ambient_orders.size(), 0)};
    g.coeffs[i] = 1;
    gens.push_back(std::move(g));
  }
  return Span(ambient_orders, gens);
}

bool Subgroup::Contains(const Element& x) const {
  CheckAmbient(x);
  return lattice::HowellContains(
      data_->howell, ScaleUp(x, data_->ambient, data_->modulus),
      data_->modulus);
}

std::optional<Element> Subgroup::Coordinates(const Element& x) const {
  CheckAmbient(x);
  std::optional<Row> c = data_->solver->Solve(x.coeffs);
  if (!c) return std::nullopt;
  return Element{std::move(*c)};
}

Element Subgroup::FromCoordinates(const Element& coords) const {
  const auto& ambient = data_->ambient;
  if (coords.coeffs.size() != data_->generators.size()) {
    throw Error(ErrorKind::kAmbientMismatch,
                "coordinate vector " + ToString(coords) + " has wrong length");
  }
  Element x{std::vector<Coeff>(ambient.size(), 0)};
  for (std::size_t i = 0; i < coords.coeffs.size(); ++i) {
    const Coeff c = coords.coeffs[i];
    if (c == 0) continue;
    for (std::size_t l = 0; l < ambient.size(); ++l) {
      x.coeffs[l] = lattice::Mod(
          x.coeffs[l] +
              lattice::MulMod(c, data_->generators[i].coeffs[l], ambient[l]),
          ambient[l]);
    }
  }
  return x;
}

std::vector<Element> Subgroup::Elements(const Limits& limits) const {
  if (order() > limits.element_cap) {
    throw Error(ErrorKind::kCapExceeded,
                "subgroup has " + std::to_string(order()) +
                    " elements, enumeration cap is " +
                    std::to_string(limits.element_cap));
  }
  std::vector<Element> out;
  out.reserve(order());
  ForEachCoefficientVector(data_->orders, [&](const Element& c) {
    out.push_back(FromCoordinates(c));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool Subgroup::IsSubgroupOf(const Subgroup& other) const {
  if (data_->ambient != other.data_->ambient) return false;
  return std::all_of(data_->basis.begin(), data_->basis.end(),
                     [&](const Element& b) { return other.Contains(b); });
}

}  // namespace peirce
