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

#include "peirce/ring.h"

#include <limits>
#include <sstream>

#include "peirce/lattice.h"

namespace peirce {

std::string_view ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kShapeMismatch: return "ShapeMismatch";
    case ErrorKind::kUnreduced: return "Unreduced";
    case ErrorKind::kFormat: return "Format";
    case ErrorKind::kNonAssociative: return "NonAssociative";
    case ErrorKind::kOrderViolation: return "OrderViolation";
    case ErrorKind::kUnitFailure: return "UnitFailure";
    case ErrorKind::kAmbientMismatch: return "AmbientMismatch";
    case ErrorKind::kNotIdempotent: return "NotIdempotent";
    case ErrorKind::kNotSemicentral: return "NotSemicentral";
    case ErrorKind::kNotSemicentralReduced: return "NotSemicentralReduced";
    case ErrorKind::kInvalidSequence: return "InvalidSequence";
    case ErrorKind::kPreconditionViolated: return "PreconditionViolated";
    case ErrorKind::kTooManyBlocks: return "TooManyBlocks";
    case ErrorKind::kStructureViolation: return "StructureViolation";
    case ErrorKind::kNotBijective: return "NotBijective";
    case ErrorKind::kNotIsomorphism: return "NotIsomorphism";
    case ErrorKind::kInconsistentQuadruple: return "InconsistentQuadruple";
    case ErrorKind::kLocationMismatch: return "LocationMismatch";
    case ErrorKind::kInadmissiblePermutation: return "InadmissiblePermutation";
    case ErrorKind::kCapExceeded: return "CapExceeded";
  }
  return "Unknown";
}

std::uint64_t GroupOrder(const std::vector<Coeff>& orders) {
  std::uint64_t size = 1;
  for (Coeff d : orders) {
    const auto du = static_cast<std::uint64_t>(d);
    if (size > std::numeric_limits<std::uint64_t>::max() / du) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    size *= du;
  }
  return size;
}

std::string ToString(const Element& x) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (i) out << ',';
    out << x.coeffs[i];
  }
  out << ']';
  return out.str();
}

void ForEachCoefficientVector(const std::vector<Coeff>& orders,
                              const std::function<bool(const Element&)>& fn) {
  Element x{std::vector<Coeff>(orders.size(), 0)};
  for (;;) {
    if (!fn(x)) return;
    std::size_t i = orders.size();
    while (i > 0) {
      --i;
      if (++x.coeffs[i] < orders[i]) break;
      x.coeffs[i] = 0;
      if (i == 0) return;
    }
    if (orders.empty()) return;
  }
}

namespace {

std::string Triple(std::size_t i, std::size_t j, std::size_t l) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + "," +
         std::to_string(l) + ")";
}

}  // namespace

Ring Ring::Validate(const RawPresentation& raw) {
  const std::size_t k = raw.orders.size();
  if (raw.one.size() != k) {
    throw Error(ErrorKind::kShapeMismatch,
                "unit vector has length " + std::to_string(raw.one.size()) +
                    ", expected " + std::to_string(k));
  }
  if (raw.mul.size() != k) {
    throw Error(ErrorKind::kShapeMismatch, "mul has wrong first dimension");
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (raw.orders[i] < 2) {
      throw Error(ErrorKind::kShapeMismatch,
                  "generator order must be >= 2 at index " + std::to_string(i),
                  {i});
    }
    if (raw.mul[i].size() != k) {
      throw Error(ErrorKind::kShapeMismatch, "mul has wrong second dimension",
                  {i});
    }
    for (std::size_t j = 0; j < k; ++j) {
      if (raw.mul[i][j].size() != k) {
        throw Error(ErrorKind::kShapeMismatch, "mul has wrong third dimension",
                    {i, j});
      }
    }
  }
  for (std::size_t l = 0; l < k; ++l) {
    if (raw.one[l] < 0 || raw.one[l] >= raw.orders[l]) {
      throw Error(ErrorKind::kUnreduced,
                  "unit coefficient " + std::to_string(raw.one[l]) +
                      " not reduced modulo " + std::to_string(raw.orders[l]),
                  {l});
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        const Coeff c = raw.mul[i][j][l];
        if (c < 0 || c >= raw.orders[l]) {
          throw Error(ErrorKind::kUnreduced,
                      "structure constant " + Triple(i, j, l) + " = " +
                          std::to_string(c) + " not reduced modulo " +
                          std::to_string(raw.orders[l]),
                      {i, j, l});
        }
      }
    }
  }

  auto data = std::make_shared<Data>();
  data->name = raw.name;
  data->orders = raw.orders;
  data->mul.resize(k * k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        data->mul[(i * k + j) * k + l] = raw.mul[i][j][l];
      }
    }
  }
  data->one = Element{raw.one};
  data->size = GroupOrder(raw.orders);
  Ring ring(data);

  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        const Coeff c = raw.mul[i][j][l];
        if (lattice::MulMod(raw.orders[i], c, raw.orders[l]) != 0 ||
            lattice::MulMod(raw.orders[j], c, raw.orders[l]) != 0) {
          throw Error(ErrorKind::kOrderViolation,
                      "product of generators " + std::to_string(i) + " and " +
                          std::to_string(j) +
                          " is not annihilated by their orders",
                      {i, j});
        }
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Element gi = ring.generator(i);
    for (std::size_t j = 0; j < k; ++j) {
      const Element gj = ring.generator(j);
      const Element gij = ring.Mul(gi, gj);
      for (std::size_t l = 0; l < k; ++l) {
        const Element gl = ring.generator(l);
        if (ring.Mul(gij, gl) != ring.Mul(gi, ring.Mul(gj, gl))) {
          throw Error(ErrorKind::kNonAssociative,
                      "(g_i g_j) g_l != g_i (g_j g_l) for " + Triple(i, j, l),
                      {i, j, l});
        }
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    const Element gi = ring.generator(i);
    if (ring.Mul(ring.one(), gi) != gi || ring.Mul(gi, ring.one()) != gi) {
      throw Error(ErrorKind::kUnitFailure,
                  "unit does not act trivially on generator " +
                      std::to_string(i),
                  {i});
    }
  }
  return ring;
}

Element Ring::zero() const { return Element{std::vector<Coeff>(rank(), 0)}; }

Element Ring::generator(std::size_t i) const {
  Element g = zero();
  g.coeffs.at(i) = 1;
  return g;
}

void Ring::Check(const Element& x) const {
  if (x.coeffs.size() != rank()) {
    throw Error(ErrorKind::kAmbientMismatch,
                "element " + ToString(x) + " has " +
                    std::to_string(x.coeffs.size()) +
                    " coefficients, ring has rank " + std::to_string(rank()));
  }
  for (std::size_t i = 0; i < rank(); ++i) {
    if (x.coeffs[i] < 0 || x.coeffs[i] >= orders()[i]) {
      throw Error(ErrorKind::kAmbientMismatch,
                  "element " + ToString(x) + " is not reduced", {i});
    }
  }
}

Element Ring::Reduce(std::vector<Coeff> coeffs) const {
  if (coeffs.size() != rank()) {
    throw Error(ErrorKind::kAmbientMismatch, "coefficient vector has length " +
                                                 std::to_string(coeffs.size()));
  }
  for (std::size_t i = 0; i < rank(); ++i) {
    coeffs[i] = lattice::Mod(coeffs[i], orders()[i]);
  }
  return Element{std::move(coeffs)};
}

Element Ring::Add(const Element& a, const Element& b) const {
  Check(a);
  Check(b);
  Element out = a;
  for (std::size_t i = 0; i < rank(); ++i) {
    out.coeffs[i] += b.coeffs[i];
    if (out.coeffs[i] >= orders()[i]) out.coeffs[i] -= orders()[i];
  }
  return out;
}

Element Ring::Neg(const Element& a) const {
  Check(a);
  Element out = a;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (out.coeffs[i] != 0) out.coeffs[i] = orders()[i] - out.coeffs[i];
  }
  return out;
}

Element Ring::Sub(const Element& a, const Element& b) const {
  return Add(a, Neg(b));
}

Element Ring::Scale(Coeff k, const Element& a) const {
  Check(a);
  Element out = a;
  for (std::size_t i = 0; i < rank(); ++i) {
    out.coeffs[i] = lattice::MulMod(k, out.coeffs[i], orders()[i]);
  }
  return out;
}

Element Ring::Mul(const Element& a, const Element& b) const {
  Check(a);
  Check(b);
  const std::size_t k = rank();
  std::vector<lattice::Wide> acc(k, 0);
  for (std::size_t i = 0; i < k; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < k; ++j) {
      if (b.coeffs[j] == 0) continue;
      const lattice::Wide ab =
          static_cast<lattice::Wide>(a.coeffs[i]) *
          static_cast<lattice::Wide>(b.coeffs[j]);
      const Coeff* row = &data_->mul[(i * k + j) * k];
      for (std::size_t l = 0; l < k; ++l) {
        if (row[l] != 0) acc[l] = (acc[l] + ab * row[l]) % orders()[l];
      }
    }
  }
  Element out = zero();
  for (std::size_t l = 0; l < k; ++l) {
    out.coeffs[l] = static_cast<Coeff>(acc[l]);
  }
  return out;
}

Element Ring::Mul(const Element& a, const Element& b, const Element& c) const {
  return Mul(Mul(a, b), c);
}

bool Ring::IsZero(const Element& x) const {
  Check(x);
  for (Coeff c : x.coeffs) {
    if (c != 0) return false;
  }
  return true;
}

bool Ring::IsIdempotent(const Element& x) const { return Mul(x, x) == x; }

void Ring::ForEachElement(const Limits& limits,
                          const std::function<bool(const Element&)>& fn) const {
  if (size() > limits.element_cap) {
    throw Error(ErrorKind::kCapExceeded,
                "ring " + (name().empty() ? std::string("<unnamed>") : name()) +
                    " has " + std::to_string(size()) +
                    " elements, enumeration cap is " +
                    std::to_string(limits.element_cap));
  }
  ForEachCoefficientVector(orders(), fn);
}

std::vector<Element> Ring::Elements(const Limits& limits) const {
  std::vector<Element> out;
  ForEachElement(limits, [&](const Element& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

RawPresentation Ring::ToRaw() const {
  const std::size_t k = rank();
  RawPresentation raw;
  raw.name = name();
  raw.orders = orders();
  raw.one = one().coeffs;
  raw.mul.assign(k, std::vector<std::vector<Coeff>>(k, std::vector<Coeff>(k)));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        raw.mul[i][j][l] = structure_constant(i, j, l);
      }
    }
  }
  return raw;
}

Ring Ring::WithName(std::string name) const {
  auto data = std::make_shared<Data>(*data_);
  data->name = std::move(name);
  return Ring(data);
}

bool operator==(const Ring& a, const Ring& b) {
  if (a.data_ == b.data_) return true;
  return a.data_->orders == b.data_->orders && a.data_->mul == b.data_->mul &&
         a.data_->one == b.data_->one;
}

}  // namespace peirce
