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

#include "peirce/triangular.h"

#include <algorithm>
#include <functional>

namespace peirce {

namespace {

std::string Index(std::size_t i) { return std::to_string(i + 1); }

}  // namespace

std::optional<std::string> TriangularityFailure(const Ring& a,
                                                std::span<const Element> idems,
                                                const Limits& limits) {
  const std::size_t m = idems.size();
  for (std::size_t i = 0; i < m; ++i) {
    try {
      a.Check(idems[i]);
    } catch (const Error& e) {
      return "e_" + Index(i) + " is not an element of the ring: " + e.message();
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (a.IsZero(idems[i])) return "e_" + Index(i) + " is zero";
    if (!a.IsIdempotent(idems[i])) {
      return "e_" + Index(i) + " = " + ToString(idems[i]) + " is not idempotent";
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j && !a.IsZero(a.Mul(idems[i], idems[j]))) {
        return "e_" + Index(i) + " e_" + Index(j) + " != 0";
      }
    }
  }
  Element sum = a.zero();
  for (const Element& e : idems) sum = a.Add(sum, e);
  if (sum != a.one()) return "idempotents sum to " + ToString(sum) + ", not 1";
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (!PeirceComponent(a, idems[j], idems[i]).IsZero()) {
        return "e_" + Index(j) + " A e_" + Index(i) + " != 0";
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    if (!IsSemicentralReduced(MakeCornerRing(a, idems[i]).presentation,
                              limits)) {
      return "corner e_" + Index(i) + " A e_" + Index(i) +
             " is not semicentral reduced";
    }
  }
  return std::nullopt;
}

bool IsStronglyTriangular(const Ring& a, std::span<const Element> idems,
                          const Limits& limits) {
  return !TriangularityFailure(a, idems, limits).has_value();
}

PeirceDecomposition PeirceDecompose(const Ring& a,
                                    const TriangularSequence& seq) {
  if (!(seq.ring() == a)) {
    throw Error(ErrorKind::kInvalidSequence,
                "sequence belongs to a different ring");
  }
  const std::size_t m = seq.length();
  PeirceDecomposition dec{seq, {}, {}};
  dec.components.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      dec.components[i].push_back(PeirceComponent(a, seq[i], seq[j]));
    }
    dec.rows.push_back(PeirceComponent(a, seq[i], seq.tail_unit(i + 1)));
  }

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < m; ++i) {
    std::uint64_t row_order = 1;
    for (std::size_t j = 0; j < m; ++j) {
      const Subgroup& c = dec.components[i][j];
      if (j < i) {
        if (!c.IsZero()) {
          throw Error(ErrorKind::kInvalidSequence,
                      "lower component L_" + Index(i) + Index(j) + " != 0");
        }
        continue;
      }
      total *= c.order();
      if (j > i) row_order *= c.order();
    }
    if (row_order != dec.rows[i].order()) {
      throw Error(ErrorKind::kInvalidSequence,
                  "truncated row " + Index(i) +
                      " is not the direct sum of its components");
    }
  }
  if (total != a.size()) {
    throw Error(ErrorKind::kInvalidSequence,
                "component orders multiply to " + std::to_string(total) +
                    ", ring has " + std::to_string(a.size()) + " elements");
  }
  return dec;
}

TriangularSequence Reordered(const TriangularSequence& seq,
                             const Permutation& sigma, const Limits& limits) {
  const std::size_t m = seq.length();
  Permutation sorted = sigma;
  std::sort(sorted.begin(), sorted.end());
  bool is_permutation = sorted.size() == m;
  for (std::size_t i = 0; is_permutation && i < m; ++i) {
    is_permutation = sorted[i] == i;
  }
  if (!is_permutation) {
    throw Error(ErrorKind::kInadmissiblePermutation,
                "not a permutation of the " + std::to_string(m) + " blocks");
  }
  std::vector<Element> idems;
  for (std::size_t p : sigma) idems.push_back(seq[p]);
  if (std::optional<std::string> failure =
          TriangularityFailure(seq.ring(), idems, limits)) {
    throw Error(ErrorKind::kInadmissiblePermutation, *failure);
  }
  return TriangularSequence::Make(seq.ring(), std::move(idems), limits);
}

TriangularSequence ReorderFront(const Ring& b, const TriangularSequence& seq,
                                std::size_t j, const Limits& limits) {
  if (!(seq.ring() == b)) {
    throw Error(ErrorKind::kInvalidSequence,
                "sequence belongs to a different ring");
  }
  if (j >= seq.length()) {
    throw Error(ErrorKind::kPreconditionViolated,
                "block index " + Index(j) + " out of range");
  }
  for (std::size_t i = 0; i < j; ++i) {
    if (!PeirceComponent(b, seq[i], seq[j]).IsZero()) {
      throw Error(ErrorKind::kPreconditionViolated,
                  "M_" + Index(i) + Index(j) + " != 0", {i});
    }
  }
  Permutation sigma{j};
  for (std::size_t i = 0; i < seq.length(); ++i) {
    if (i != j) sigma.push_back(i);
  }
  return Reordered(seq, sigma, limits);
}

std::vector<Permutation> AdmissibleOrders(const Ring& b,
                                          const TriangularSequence& seq,
                                          const Limits& limits) {
  const std::size_t m = seq.length();
  if (m > limits.max_blocks) {
    throw Error(ErrorKind::kTooManyBlocks,
                std::to_string(m) + " blocks exceed the permutation limit of " +
                    std::to_string(limits.max_blocks));
  }
  if (!(seq.ring() == b)) {
    throw Error(ErrorKind::kInvalidSequence,
                "sequence belongs to a different ring");
  }
  // vanishes[c][q]: f_c B f_q == 0, required whenever c is placed after q.
  std::vector<std::vector<bool>> vanishes(m, std::vector<bool>(m, true));
  for (std::size_t c = 0; c < m; ++c) {
    for (std::size_t q = 0; q < m; ++q) {
      if (c != q) vanishes[c][q] = PeirceComponent(b, seq[c], seq[q]).IsZero();
    }
  }

  std::vector<Permutation> out;
  Permutation prefix;
  std::vector<bool> used(m, false);
  std::function<void()> extend = [&] {
    if (prefix.size() == m) {
      out.push_back(prefix);
      return;
    }
    for (std::size_t c = 0; c < m; ++c) {
      if (used[c]) continue;
      const bool ok = std::all_of(prefix.begin(), prefix.end(),
                                  [&](std::size_t q) { return vanishes[c][q]; });
      if (!ok) continue;
      used[c] = true;
      prefix.push_back(c);
      extend();
      prefix.pop_back();
      used[c] = false;
    }
  };
  extend();
  return out;
}

std::vector<std::size_t> DetectDirectSum(const Ring& b,
                                         const PeirceDecomposition& dec) {
  (void)b;
  const std::size_t m = dec.length();
  std::vector<std::size_t> splits;
  if (m < 2) return splits;
  for (std::size_t j = 0; j < m; ++j) {
    bool isolated = true;
    for (std::size_t i = 0; i < m && isolated; ++i) {
      if (i == j) continue;
      isolated = dec.components[i][j].IsZero() && dec.components[j][i].IsZero();
    }
    if (isolated) splits.push_back(j);
  }
  return splits;
}

}  // namespace peirce
