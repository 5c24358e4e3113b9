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

#include "peirce/constructions.h"

#include <algorithm>
#include <utility>

#include "peirce/lattice.h"

namespace peirce {

namespace {

using Tensor = std::vector<std::vector<std::vector<Coeff>>>;

Tensor ZeroTensor(std::size_t k) {
  return Tensor(k, std::vector<std::vector<Coeff>>(k, std::vector<Coeff>(k, 0)));
}

}  // namespace

Ring Cyclic(Coeff n) {
  RawPresentation raw{"Z" + std::to_string(n), {n}, {{{1 % n}}}, {1 % n}};
  return Ring::Validate(raw);
}

Ring FiniteField(Coeff p, const std::vector<Coeff>& poly) {
  const std::size_t k = poly.size();
  // powers[d] = x^d reduced, for d < 2k - 1.
  std::vector<std::vector<Coeff>> powers;
  for (std::size_t d = 0; d + 1 < 2 * k || d == 0; ++d) {
    std::vector<Coeff> v(k, 0);
    if (d < k) {
      v[d] = 1 % p;
    } else {
      // x * x^{d-1}, then fold x^k = -(c_0 + ... + c_{k-1} x^{k-1}).
      const std::vector<Coeff>& prev = powers[d - 1];
      const Coeff top = prev[k - 1];
      for (std::size_t i = k - 1; i > 0; --i) v[i] = prev[i - 1];
      for (std::size_t i = 0; i < k; ++i) {
        v[i] = lattice::Mod(v[i] - top * poly[i], p);
      }
    }
    powers.push_back(std::move(v));
  }
  RawPresentation raw;
  raw.name = "GF" + std::to_string(p) + "^" + std::to_string(k);
  raw.orders.assign(k, p);
  raw.mul = ZeroTensor(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) raw.mul[i][j] = powers[i + j];
  }
  raw.one.assign(k, 0);
  if (k > 0) raw.one[0] = 1 % p;
  return Ring::Validate(raw);
}

Ring UpperTriangular(std::size_t n, Coeff q) {
  std::vector<std::pair<std::size_t, std::size_t>> units;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) units.emplace_back(i, j);
  }
  const std::size_t k = units.size();
  RawPresentation raw;
  raw.name = "T" + std::to_string(n) + "(Z" + std::to_string(q) + ")";
  raw.orders.assign(k, q);
  raw.mul = ZeroTensor(k);
  raw.one.assign(k, 0);
  for (std::size_t s = 0; s < k; ++s) {
    const auto [i, j] = units[s];
    if (i == j) raw.one[s] = 1;
    for (std::size_t t = 0; t < k; ++t) {
      const auto [j2, l] = units[t];
      if (j != j2) continue;
      const auto it = std::find(units.begin(), units.end(), std::make_pair(i, l));
      raw.mul[s][t][static_cast<std::size_t>(it - units.begin())] = 1;
    }
  }
  return Ring::Validate(raw);
}

Ring DirectProduct(const Ring& a, const Ring& b) {
  const std::size_t ka = a.rank();
  const std::size_t k = ka + b.rank();
  RawPresentation raw;
  raw.name = a.name() + "x" + b.name();
  raw.orders = a.orders();
  raw.orders.insert(raw.orders.end(), b.orders().begin(), b.orders().end());
  raw.one = a.one().coeffs;
  raw.one.insert(raw.one.end(), b.one().coeffs.begin(), b.one().coeffs.end());
  raw.mul = ZeroTensor(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      for (std::size_t l = 0; l < k; ++l) {
        if (i < ka && j < ka && l < ka) {
          raw.mul[i][j][l] = a.structure_constant(i, j, l);
        } else if (i >= ka && j >= ka && l >= ka) {
          raw.mul[i][j][l] = b.structure_constant(i - ka, j - ka, l - ka);
        }
      }
    }
  }
  return Ring::Validate(raw);
}

Ring ThreeBlock() {
  // 0 E11, 1 E12, 2 E22, 3 E23, 4 E33
  RawPresentation raw;
  raw.name = "three_block";
  raw.orders.assign(5, 2);
  raw.mul = ZeroTensor(5);
  raw.mul[0][0][0] = 1;
  raw.mul[0][1][1] = 1;
  raw.mul[1][2][1] = 1;
  raw.mul[2][2][2] = 1;
  raw.mul[2][3][3] = 1;
  raw.mul[3][4][3] = 1;
  raw.mul[4][4][4] = 1;
  raw.one = {1, 0, 1, 0, 1};
  return Ring::Validate(raw);
}

Ring PermuteGenerators(const Ring& a, const std::vector<std::size_t>& perm) {
  const std::size_t k = a.rank();
  std::vector<std::size_t> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  bool ok = sorted.size() == k;
  for (std::size_t i = 0; ok && i < k; ++i) ok = sorted[i] == i;
  if (!ok) {
    throw Error(ErrorKind::kShapeMismatch, "not a permutation of generators");
  }
  RawPresentation raw;
  raw.name = a.name();
  raw.mul = ZeroTensor(k);
  for (std::size_t t = 0; t < k; ++t) {
    raw.orders.push_back(a.orders()[perm[t]]);
    raw.one.push_back(a.one().coeffs[perm[t]]);
    for (std::size_t u = 0; u < k; ++u) {
      for (std::size_t v = 0; v < k; ++v) {
        raw.mul[t][u][v] = a.structure_constant(perm[t], perm[u], perm[v]);
      }
    }
  }
  return Ring::Validate(raw);
}

std::vector<std::string> FixtureNames() {
  return {"z6", "f2", "f4", "z4", "t2f2", "t2z4", "t3f2", "z2xz3", "three_block"};
}

Ring Fixture(const std::string& name) {
  if (name == "z6") return Cyclic(6).WithName("z6");
  if (name == "f2") return Cyclic(2).WithName("f2");
  if (name == "f4") return FiniteField(2, {1, 1}).WithName("f4");
  if (name == "z4") return Cyclic(4).WithName("z4");
  if (name == "t2f2") return UpperTriangular(2, 2).WithName("t2f2");
  if (name == "t2z4") return UpperTriangular(2, 4).WithName("t2z4");
  if (name == "t3f2") return UpperTriangular(3, 2).WithName("t3f2");
  if (name == "z2xz3") {
    return DirectProduct(Cyclic(2), Cyclic(3)).WithName("z2xz3");
  }
  if (name == "three_block") return ThreeBlock();
  throw Error(ErrorKind::kFormat, "unknown fixture '" + name + "'");
}

}  // namespace peirce
