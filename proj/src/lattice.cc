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

#include "peirce/lattice.h"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <utility>

namespace peirce::lattice {

Int Mod(Int a, Int n) {
  const Int r = a % n;
  return r < 0 ? r + n : r;
}

Int MulMod(Int a, Int b, Int n) {
  const Wide p = static_cast<Wide>(a) * static_cast<Wide>(b);
  Wide r = p % n;
  if (r < 0) r += n;
  return static_cast<Int>(r);
}

Int Gcd(Int a, Int b) { return std::gcd(a, b); }

Int Lcm(Int a, Int b) { return std::lcm(a, b); }

Xgcd ExtendedGcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    const Int q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  return {old_r, old_s, old_t};
}

Int NormalizingUnit(Int a, Int n) {
  a = Mod(a, n);
  if (a == 0 || n == 1) return 1;
  const Int h = Gcd(a, n);
  const Int reduced_n = n / h;
  if (reduced_n == 1) return 1;
  Int u = Mod(ExtendedGcd(a / h, reduced_n).s, reduced_n);
  // Any lift of u modulo n/h works; pick the first one coprime to n.
  while (Gcd(u, n) != 1) u += reduced_n;
  return Mod(u, n);
}

namespace {

bool IsZero(const Row& row) {
  return std::all_of(row.begin(), row.end(), [](Int v) { return v == 0; });
}

// a*x + b*y, reduced.
Row Combine(Int a, const Row& x, Int b, const Row& y, Int n) {
  Row out(x.size());
  for (std::size_t c = 0; c < x.size(); ++c) {
    out[c] = Mod(MulMod(a, x[c], n) + MulMod(b, y[c], n), n);
  }
  return out;
}

void ScaleInPlace(Row& row, Int a, Int n) {
  for (Int& v : row) v = MulMod(a, v, n);
}

// row -= q * other.
void SubtractMultiple(Row& row, Int q, const Row& other, Int n) {
  for (std::size_t c = 0; c < row.size(); ++c) {
    row[c] = Mod(row[c] - MulMod(q, other[c], n), n);
  }
}

}  // namespace

std::size_t PivotColumn(const Row& row) {
  for (std::size_t c = 0; c < row.size(); ++c) {
    if (row[c] != 0) return c;
  }
  return row.size();
}

std::vector<Row> HowellForm(std::vector<Row> rows, Int n, std::size_t ncols) {
  std::vector<Row> work;
  for (Row& r : rows) {
    assert(r.size() == ncols);
    for (Int& v : r) v = Mod(v, n);
    if (!IsZero(r)) work.push_back(std::move(r));
  }

  std::vector<Row> result;
  for (std::size_t col = 0; col < ncols; ++col) {
    std::optional<Row> pivot;
    std::vector<Row> next;
    for (Row& r : work) {
      if (r[col] == 0) {
        next.push_back(std::move(r));
        continue;
      }
      if (!pivot) {
        pivot = std::move(r);
        continue;
      }
      const Int a = (*pivot)[col];
      const Int b = r[col];
      const Xgcd x = ExtendedGcd(a, b);
      Row p2 = Combine(x.s, *pivot, x.t, r, n);
      Row r2 = Combine(-(b / x.g), *pivot, a / x.g, r, n);
      pivot = std::move(p2);
      if (!IsZero(r2)) next.push_back(std::move(r2));
    }
    if (pivot) {
      ScaleInPlace(*pivot, NormalizingUnit((*pivot)[col], n), n);
      const Int h = (*pivot)[col];
      assert(h != 0 && n % h == 0);
      Row annihilated = *pivot;
      ScaleInPlace(annihilated, n / h, n);
      if (!IsZero(annihilated)) next.push_back(std::move(annihilated));
      result.push_back(std::move(*pivot));
    }
    work.clear();
    for (Row& r : next) {
      if (!IsZero(r)) work.push_back(std::move(r));
    }
  }

  for (std::size_t i = 0; i < result.size(); ++i) {
    const std::size_t c = PivotColumn(result[i]);
    const Int h = result[i][c];
    for (std::size_t j = 0; j < i; ++j) {
      const Int q = result[j][c] / h;
      if (q != 0) SubtractMultiple(result[j], q, result[i], n);
    }
  }
  return result;
}

bool HowellContains(std::span<const Row> howell, Row x, Int n) {
  for (Int& v : x) v = Mod(v, n);
  for (const Row& row : howell) {
    const std::size_t c = PivotColumn(row);
    const Int h = row[c];
    if (x[c] % h != 0) return false;
    const Int q = x[c] / h;
    if (q != 0) SubtractMultiple(x, q, row, n);
  }
  return IsZero(x);
}

std::uint64_t HowellOrder(std::span<const Row> howell, Int n) {
  std::uint64_t order = 1;
  for (const Row& row : howell) {
    order *= static_cast<std::uint64_t>(n / row[PivotColumn(row)]);
  }
  return order;
}

namespace {

Int RowOrder(const Row& row, Int n) {
  Int g = n;
  for (Int v : row) g = Gcd(g, v);
  return n / g;
}

// Diagonalizes H (r x k) by unimodular operations, U*H*V = D, tracking V^-1.
// The rows of D*V^-1 = U*H span the same module as H and are independent.
std::vector<CyclicGenerator> Diagonalize(std::vector<Row> h, Int n) {
  const std::size_t r = h.size();
  const std::size_t k = r == 0 ? 0 : h[0].size();
  std::vector<Row> v_inverse(k, Row(k, 0));
  for (std::size_t i = 0; i < k; ++i) v_inverse[i][i] = 1;

  auto swap_columns = [&](std::size_t a, std::size_t b) {
    for (Row& row : h) std::swap(row[a], row[b]);
    std::swap(v_inverse[a], v_inverse[b]);
  };

  std::size_t t = 0;
  for (; t < std::min(r, k); ++t) {
    std::size_t best_i = r, best_j = k;
    Int best_g = 0;
    for (std::size_t i = t; i < r; ++i) {
      for (std::size_t j = t; j < k; ++j) {
        if (h[i][j] == 0) continue;
        const Int g = Gcd(h[i][j], n);
        if (best_i == r || g < best_g) {
          best_i = i;
          best_j = j;
          best_g = g;
        }
      }
    }
    if (best_i == r) break;
    std::swap(h[t], h[best_i]);
    if (best_j != t) swap_columns(t, best_j);

    for (;;) {
      ScaleInPlace(h[t], NormalizingUnit(h[t][t], n), n);
      const Int p = h[t][t];
      bool combined = false;
      for (std::size_t i = t + 1; i < r; ++i) {
        const Int a = h[i][t];
        if (a == 0) continue;
        if (a % p == 0) {
          SubtractMultiple(h[i], a / p, h[t], n);
          continue;
        }
        const Xgcd x = ExtendedGcd(p, a);
        Row top = Combine(x.s, h[t], x.t, h[i], n);
        Row bottom = Combine(-(a / x.g), h[t], p / x.g, h[i], n);
        h[t] = std::move(top);
        h[i] = std::move(bottom);
        combined = true;
        break;
      }
      if (combined) continue;
      for (std::size_t j = t + 1; j < k; ++j) {
        const Int b = h[t][j];
        if (b == 0) continue;
        if (b % p == 0) {
          const Int q = b / p;
          for (Row& row : h) row[j] = Mod(row[j] - MulMod(q, row[t], n), n);
          for (std::size_t c = 0; c < k; ++c) {
            v_inverse[t][c] =
                Mod(v_inverse[t][c] + MulMod(q, v_inverse[j][c], n), n);
          }
          continue;
        }
        // Columns (t, j) <- (t, j) * [[s, -b/g], [u, p/g]]; the inverse
        // acts on rows (t, j) of V^-1 by [[p/g, b/g], [-u, s]].
        const Xgcd x = ExtendedGcd(p, b);
        for (Row& row : h) {
          const Int ct = row[t], cj = row[j];
          row[t] = Mod(MulMod(x.s, ct, n) + MulMod(x.t, cj, n), n);
          row[j] = Mod(MulMod(-(b / x.g), ct, n) + MulMod(p / x.g, cj, n), n);
        }
        Row vt = Combine(p / x.g, v_inverse[t], b / x.g, v_inverse[j], n);
        Row vj = Combine(-x.t, v_inverse[t], x.s, v_inverse[j], n);
        v_inverse[t] = std::move(vt);
        v_inverse[j] = std::move(vj);
        combined = true;
        break;
      }
      if (!combined) break;
    }
  }

  std::vector<CyclicGenerator> out;
  for (std::size_t i = 0; i < t; ++i) {
    const Int d = h[i][i];
    if (d == 0) continue;
    Row y = v_inverse[i];
    ScaleInPlace(y, d, n);
    const Int order = n / d;
    if (order > 1) out.push_back({std::move(y), order});
  }
  return out;
}

}  // namespace

std::vector<CyclicGenerator> IndependentGenerators(std::span<const Row> howell,
                                                   Int n) {
  const std::uint64_t total = HowellOrder(howell, n);
  std::vector<CyclicGenerator> direct;
  std::uint64_t product = 1;
  for (const Row& row : howell) {
    const Int order = RowOrder(row, n);
    product *= static_cast<std::uint64_t>(order);
    direct.push_back({row, order});
  }
  if (product == total) return direct;

  std::vector<CyclicGenerator> diagonal =
      Diagonalize(std::vector<Row>(howell.begin(), howell.end()), n);
  [[maybe_unused]] std::uint64_t check = 1;
  for (const CyclicGenerator& g : diagonal) check *= g.order;
  assert(check == total);
  return diagonal;
}

LinearSolver::LinearSolver(std::vector<Int> ambient_orders,
                           std::span<const Row> generators,
                           std::vector<Int> generator_orders)
    : ambient_orders_(std::move(ambient_orders)),
      generator_orders_(std::move(generator_orders)) {
  for (Int d : ambient_orders_) modulus_ = Lcm(modulus_, d);
  for (Int o : generator_orders_) modulus_ = Lcm(modulus_, o);
  const std::size_t k = ambient_orders_.size();
  const std::size_t r = generators.size();
  std::vector<Row> rows;
  rows.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    Row row(k + r, 0);
    for (std::size_t c = 0; c < k; ++c) {
      row[c] = MulMod(generators[i][c], modulus_ / ambient_orders_[c], modulus_);
    }
    row[k + i] = modulus_ / generator_orders_[i];
    rows.push_back(std::move(row));
  }
  howell_ = HowellForm(std::move(rows), modulus_, k + r);
}

std::optional<Row> LinearSolver::Solve(const Row& target) const {
  const std::size_t k = ambient_orders_.size();
  const std::size_t r = generator_orders_.size();
  const Int n = modulus_;
  Row residual(k + r, 0);
  for (std::size_t c = 0; c < k; ++c) {
    residual[c] = MulMod(Mod(target[c], ambient_orders_[c]),
                         n / ambient_orders_[c], n);
  }
  for (const Row& row : howell_) {
    const std::size_t c = PivotColumn(row);
    if (c >= k) break;
    const Int h = row[c];
    if (residual[c] % h != 0) return std::nullopt;
    const Int q = residual[c] / h;
    if (q != 0) SubtractMultiple(residual, q, row, n);
  }
  for (std::size_t c = 0; c < k; ++c) {
    if (residual[c] != 0) return std::nullopt;
  }
  Row coefficients(r);
  for (std::size_t i = 0; i < r; ++i) {
    const Int scale = n / generator_orders_[i];
    coefficients[i] = Mod(-(residual[k + i] / scale), generator_orders_[i]);
  }
  return coefficients;
}

}  // namespace peirce::lattice
