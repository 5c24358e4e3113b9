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

#ifndef PEIRCE_RING_H_
#define PEIRCE_RING_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "peirce/error.h"

namespace peirce {

using Coeff = std::int64_t;

// Coefficient vector with respect to the additive generators of a ring,
// entry i reduced to [0, d_i). Ordering is lexicographic and is used for
// every deterministic tie-break in the library.
struct Element {
  std::vector<Coeff> coeffs;

  friend bool operator==(const Element&, const Element&) = default;
  friend auto operator<=>(const Element&, const Element&) = default;
};

// Enumeration guards. Exceeding any of them raises kCapExceeded.
struct Limits {
  // Largest ring (or subgroup) enumerated element by element.
  std::uint64_t element_cap = 1u << 12;
  // Largest number of candidate generator-image tuples tried when
  // brute-forcing corner ring isomorphisms or bimodule maps.
  std::uint64_t map_candidate_cap = 1u << 20;
  // Largest triangulating length for permutation enumeration.
  std::size_t max_blocks = 8;
};

// Unvalidated structure-constant data, as read from a file.
struct RawPresentation {
  std::string name;
  std::vector<Coeff> orders;
  // mul[i][j][l]: coefficient of g_l in g_i * g_j.
  std::vector<std::vector<std::vector<Coeff>>> mul;
  std::vector<Coeff> one;
};

// A finite ring presented by structure constants over Z_{d_1} x ... x Z_{d_k}.
// Immutable; copies share storage.
class Ring {
 public:
  // Checks shape, reduction, order compatibility, associativity and the
  // unit law, in that order; throws on the first violation.
  static Ring Validate(const RawPresentation& raw);

  std::size_t rank() const { return data_->orders.size(); }
  const std::vector<Coeff>& orders() const { return data_->orders; }
  const std::string& name() const { return data_->name; }
  Coeff structure_constant(std::size_t i, std::size_t j, std::size_t l) const {
    return data_->mul[(i * rank() + j) * rank() + l];
  }
  // Number of elements; saturates at UINT64_MAX.
  std::uint64_t size() const { return data_->size; }

  const Element& one() const { return data_->one; }
  Element zero() const;
  Element generator(std::size_t i) const;

  // Throws kAmbientMismatch unless x is a reduced element of this ring.
  void Check(const Element& x) const;
  Element Reduce(std::vector<Coeff> coeffs) const;

  Element Add(const Element& a, const Element& b) const;
  Element Sub(const Element& a, const Element& b) const;
  Element Neg(const Element& a) const;
  Element Mul(const Element& a, const Element& b) const;
  Element Scale(Coeff k, const Element& a) const;
  // a * b * c
  Element Mul(const Element& a, const Element& b, const Element& c) const;

  bool IsZero(const Element& x) const;
  bool IsIdempotent(const Element& x) const;

  // Calls fn on every element in lexicographic order; stops early when fn
  // returns false. Throws kCapExceeded when size() > limits.element_cap.
  void ForEachElement(const Limits& limits,
                      const std::function<bool(const Element&)>& fn) const;
  std::vector<Element> Elements(const Limits& limits = {}) const;

  RawPresentation ToRaw() const;
  Ring WithName(std::string name) const;

  // Structural equality; the name is ignored.
  friend bool operator==(const Ring& a, const Ring& b);

 private:
  struct Data {
    std::string name;
    std::vector<Coeff> orders;
    std::vector<Coeff> mul;
    Element one;
    std::uint64_t size = 1;
  };
  explicit Ring(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

// Calls fn on every coefficient vector of Z_{orders[0]} x ... in
// lexicographic order; stops when fn returns false.
void ForEachCoefficientVector(const std::vector<Coeff>& orders,
                              const std::function<bool(const Element&)>& fn);

std::uint64_t GroupOrder(const std::vector<Coeff>& orders);

std::string ToString(const Element& x);

}  // namespace peirce

#endif  // PEIRCE_RING_H_
