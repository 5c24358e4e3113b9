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

#include "peirce/oracle.h"

#include <algorithm>
#include <set>
#include <string>

namespace peirce::oracle {

namespace {

void RequireSize(const Ring& a) {
  if (a.size() > kElementCap) {
    throw Error(ErrorKind::kCapExceeded,
                "oracle refuses rings with more than " +
                    std::to_string(kElementCap) + " elements");
  }
}

// Elements of the corner eAe, as a sorted set.
std::vector<Element> CornerElements(const Ring& a, const Element& e) {
  std::set<Element> corner;
  for (const Element& x : BruteElements(a)) corner.insert(a.Mul(e, x, e));
  return {corner.begin(), corner.end()};
}

bool CornerReduced(const Ring& a, const Element& e) {
  const std::vector<Element> corner = CornerElements(a, e);
  for (const Element& h : corner) {
    if (a.IsZero(h) || h == e || a.Mul(h, h) != h) continue;
    const Element c = a.Sub(e, h);
    const bool semicentral =
        std::all_of(corner.begin(), corner.end(), [&](const Element& y) {
          return a.IsZero(a.Mul(c, y, h));
        });
    if (semicentral) return false;
  }
  return true;
}

Element Evaluate(const Ring& b, const std::vector<Element>& images,
                 const Element& x) {
  Element y = b.zero();
  for (std::size_t t = 0; t < images.size(); ++t) {
    y = b.Add(y, b.Scale(x.coeffs[t], images[t]));
  }
  return y;
}

}  // namespace

std::vector<Element> BruteElements(const Ring& a) {
  RequireSize(a);
  const std::vector<Coeff>& d = a.orders();
  std::vector<Element> out;
  Element x{std::vector<Coeff>(d.size(), 0)};
  while (true) {
    out.push_back(x);
    std::size_t i = d.size();
    while (i > 0 && ++x.coeffs[i - 1] == d[i - 1]) x.coeffs[--i] = 0;
    if (i == 0) break;
  }
  return out;
}

std::vector<Element> BruteIdempotents(const Ring& a) {
  std::vector<Element> out;
  for (const Element& x : BruteElements(a)) {
    if (a.Mul(x, x) == x) out.push_back(x);
  }
  return out;
}

bool BruteSemicentral(const Ring& a, const Element& e) {
  const Element c = a.Sub(a.one(), e);
  for (const Element& x : BruteElements(a)) {
    if (!a.IsZero(a.Mul(c, x, e))) return false;
  }
  return true;
}

std::vector<Element> BruteSemicentralIdempotents(const Ring& a) {
  std::vector<Element> out;
  for (const Element& e : BruteIdempotents(a)) {
    if (BruteSemicentral(a, e)) out.push_back(e);
  }
  return out;
}

bool BruteSemicentralReduced(const Ring& a) {
  for (const Element& e : BruteSemicentralIdempotents(a)) {
    if (!a.IsZero(e) && e != a.one()) return false;
  }
  return true;
}

std::vector<Element> BruteReducedSemicentralIdempotents(const Ring& a) {
  std::vector<Element> out;
  for (const Element& e : BruteSemicentralIdempotents(a)) {
    if (!a.IsZero(e) && CornerReduced(a, e)) out.push_back(e);
  }
  return out;
}

bool BruteTriangularCheck(const Ring& a, std::span<const Element> idems) {
  const std::vector<Element> elements = BruteElements(a);
  Element sum = a.zero();
  for (std::size_t i = 0; i < idems.size(); ++i) {
    const Element& e = idems[i];
    if (e.coeffs.size() != a.rank()) return false;
    for (std::size_t l = 0; l < a.rank(); ++l) {
      if (e.coeffs[l] < 0 || e.coeffs[l] >= a.orders()[l]) return false;
    }
    if (a.IsZero(e) || a.Mul(e, e) != e) return false;
    sum = a.Add(sum, e);
  }
  if (sum != a.one()) return false;
  for (std::size_t i = 0; i < idems.size(); ++i) {
    for (std::size_t j = 0; j < idems.size(); ++j) {
      if (i != j && !a.IsZero(a.Mul(idems[i], idems[j]))) return false;
      if (j <= i) continue;
      for (const Element& x : elements) {
        if (!a.IsZero(a.Mul(idems[j], x, idems[i]))) return false;
      }
    }
  }
  return std::all_of(idems.begin(), idems.end(),
                     [&](const Element& e) { return CornerReduced(a, e); });
}

std::vector<Element> BruteUnits(const Ring& a) {
  const std::vector<Element> elements = BruteElements(a);
  std::vector<Element> out;
  for (const Element& x : elements) {
    for (const Element& y : elements) {
      if (a.Mul(x, y) == a.one() && a.Mul(y, x) == a.one()) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

bool BruteIsRingIso(const Ring& a, const Ring& b,
                    const std::vector<Element>& images) {
  if (images.size() != a.rank() || a.size() != b.size()) return false;
  for (std::size_t t = 0; t < images.size(); ++t) {
    if (!b.IsZero(b.Scale(a.orders()[t], images[t]))) return false;
  }
  const std::vector<Element> elements = BruteElements(a);
  std::set<Element> seen;
  for (const Element& x : elements) seen.insert(Evaluate(b, images, x));
  if (seen.size() != elements.size()) return false;
  if (Evaluate(b, images, a.one()) != b.one()) return false;
  for (const Element& x : elements) {
    const Element fx = Evaluate(b, images, x);
    for (const Element& y : elements) {
      if (Evaluate(b, images, a.Mul(x, y)) != b.Mul(fx, Evaluate(b, images, y))) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<Element>> BruteIsos(const Ring& a, const Ring& b) {
  std::vector<std::vector<Element>> out;
  if (a.size() != b.size()) return out;
  const std::vector<Element> targets = BruteElements(b);
  const std::size_t k = a.rank();
  std::vector<std::vector<Element>> candidates(k);
  std::uint64_t space = 1;
  for (std::size_t t = 0; t < k; ++t) {
    for (const Element& y : targets) {
      if (b.IsZero(b.Scale(a.orders()[t], y))) candidates[t].push_back(y);
    }
    space *= candidates[t].size();
    if (space > kCandidateCap) {
      throw Error(ErrorKind::kCapExceeded,
                  "oracle isomorphism search space exceeds " +
                      std::to_string(kCandidateCap) + " tuples");
    }
  }

  std::vector<std::size_t> pick(k, 0);
  std::vector<Element> images(k);
  while (true) {
    for (std::size_t t = 0; t < k; ++t) images[t] = candidates[t][pick[t]];
    bool ok = Evaluate(b, images, a.one()) == b.one();
    for (std::size_t i = 0; ok && i < k; ++i) {
      for (std::size_t j = 0; ok && j < k; ++j) {
        ok = Evaluate(b, images, a.Mul(a.generator(i), a.generator(j))) ==
             b.Mul(images[i], images[j]);
      }
    }
    if (ok && BruteIsRingIso(a, b, images)) out.push_back(images);
    std::size_t t = k;
    while (t > 0 && ++pick[t - 1] == candidates[t - 1].size()) pick[--t] = 0;
    if (t == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace peirce::oracle
