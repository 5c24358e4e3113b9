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

#ifndef PEIRCE_SUBGROUP_H_
#define PEIRCE_SUBGROUP_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "peirce/lattice.h"
#include "peirce/ring.h"

namespace peirce {

// An additive subgroup of Z_{d_1} x ... x Z_{d_k}, stored in Howell normal
// form so that equal subgroups have bit-identical bases. Also carries an
// independent cyclic decomposition used as its coordinate system: every
// element is uniquely sum_i c_i * generators()[i] with c_i mod
// generator_orders()[i].
class Subgroup {
 public:
  // Throws kAmbientMismatch if an element does not fit the ambient orders.
  static Subgroup Span(const std::vector<Coeff>& ambient_orders,
                       std::span<const Element> elements);
  static Subgroup Zero(const std::vector<Coeff>& ambient_orders);
  static Subgroup Whole(const std::vector<Coeff>& ambient_orders);

  const std::vector<Coeff>& ambient_orders() const { return data_->ambient; }
  // Canonical (Howell) basis in ambient coordinates.
  const std::vector<Element>& basis() const { return data_->basis; }
  const std::vector<Element>& generators() const { return data_->generators; }
  const std::vector<Coeff>& generator_orders() const { return data_->orders; }

  std::uint64_t order() const { return data_->order; }
  bool IsZero() const { return data_->basis.empty(); }
  bool Contains(const Element& x) const;
  // Throws kAmbientMismatch on a malformed element.
  void CheckAmbient(const Element& x) const;

  // Coordinates of x with respect to generators(); nullopt if x is not in
  // the subgroup.
  std::optional<Element> Coordinates(const Element& x) const;
  // sum_i coords[i] * generators()[i].
  Element FromCoordinates(const Element& coords) const;

  // All elements in lexicographic (ambient) order.
  std::vector<Element> Elements(const Limits& limits = {}) const;

  bool IsSubgroupOf(const Subgroup& other) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.data_->ambient == b.data_->ambient &&
           a.data_->basis == b.data_->basis;
  }

 private:
  struct Data {
    std::vector<Coeff> ambient;
    lattice::Int modulus = 1;
    std::vector<lattice::Row> howell;  // scaled
    std::vector<Element> basis;
    std::vector<Element> generators;
    std::vector<Coeff> orders;
    std::uint64_t order = 1;
    std::optional<lattice::LinearSolver> solver;
  };
  explicit Subgroup(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

}  // namespace peirce

#endif  // PEIRCE_SUBGROUP_H_
