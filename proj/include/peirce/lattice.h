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

#ifndef PEIRCE_LATTICE_H_
#define PEIRCE_LATTICE_H_

// Linear algebra over Z/nZ for mixed-modulus abelian groups
// Z_{d_1} x ... x Z_{d_k}. Such a group is embedded into (Z/NZ)^k with
// N = lcm(d_i) by scaling coordinate i by N/d_i; all routines here work on
// scaled rows.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace peirce::lattice {

using Int = std::int64_t;
using Row = std::vector<Int>;
__extension__ typedef __int128 Wide;  // products of two Ints

// Representative of a in [0, n).
Int Mod(Int a, Int n);
Int MulMod(Int a, Int b, Int n);
Int Gcd(Int a, Int b);
Int Lcm(Int a, Int b);

struct Xgcd {
  Int g;
  Int s;
  Int t;
};
// s*a + t*b == g == gcd(a, b) for a, b >= 0.
Xgcd ExtendedGcd(Int a, Int b);

// A unit u of Z/nZ with u*a == gcd(a, n) (mod n). Returns 1 for a == 0.
Int NormalizingUnit(Int a, Int n);

// Howell normal form of the row span of `rows` over Z/nZ. Rows are echelon,
// each pivot divides n, entries above a pivot lie in [0, pivot), and every
// element of the span whose first c coordinates vanish lies in the span of
// the rows with pivot column >= c. Two generating sets of the same
// submodule produce identical output.
std::vector<Row> HowellForm(std::vector<Row> rows, Int n, std::size_t ncols);

// Column index of the first nonzero entry, or row.size() for a zero row.
std::size_t PivotColumn(const Row& row);

// True iff `x` lies in the span of a Howell basis.
bool HowellContains(std::span<const Row> howell, Row x, Int n);

// Order of the submodule spanned by a Howell basis.
std::uint64_t HowellOrder(std::span<const Row> howell, Int n);

struct CyclicGenerator {
  Row row;
  Int order;
};

// Generators y_1..y_r of the span of a Howell basis with the span equal to
// the internal direct sum of the cyclic groups <y_i>. The Howell rows are
// reused when they are already independent; otherwise the basis is
// diagonalized by unimodular row/column operations.
std::vector<CyclicGenerator> IndependentGenerators(std::span<const Row> howell,
                                                   Int n);

// Solves sum_i c_i * y_i == t in Z_{d_1} x ... x Z_{d_k}, with c_i taken
// modulo o_i, where o_i * y_i == 0. Rows here are *unscaled* coordinates.
class LinearSolver {
 public:
  LinearSolver(std::vector<Int> ambient_orders, std::span<const Row> generators,
               std::vector<Int> generator_orders);

  std::optional<Row> Solve(const Row& target) const;

 private:
  std::vector<Int> ambient_orders_;
  std::vector<Int> generator_orders_;
  Int modulus_ = 1;
  std::vector<Row> howell_;
};

}  // namespace peirce::lattice

#endif  // PEIRCE_LATTICE_H_
