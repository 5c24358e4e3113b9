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

#include "peirce/morphisms.h"

#include <algorithm>
#include <string>
#include <utility>

#include "peirce/lattice.h"

namespace peirce {

namespace {

using lattice::Mod;
using lattice::MulMod;

bool IsReducedVector(const Element& x, const std::vector<Coeff>& orders) {
  if (x.coeffs.size() != orders.size()) return false;
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (x.coeffs[i] < 0 || x.coeffs[i] >= orders[i]) return false;
  }
  return true;
}

Element ScaleVector(Coeff k, const Element& x, const std::vector<Coeff>& orders) {
  Element out{std::vector<Coeff>(orders.size())};
  for (std::size_t l = 0; l < orders.size(); ++l) {
    out.coeffs[l] = MulMod(Mod(k, orders[l]), x.coeffs[l], orders[l]);
  }
  return out;
}

bool IsZeroVector(const Element& x) {
  return std::all_of(x.coeffs.begin(), x.coeffs.end(),
                     [](Coeff c) { return c == 0; });
}

// Order of x in Z_{d_1} x ... x Z_{d_k}.
Coeff AdditiveOrder(const Element& x, const std::vector<Coeff>& orders) {
  Coeff o = 1;
  for (std::size_t l = 0; l < orders.size(); ++l) {
    o = lattice::Lcm(o, orders[l] / lattice::Gcd(x.coeffs[l], orders[l]));
  }
  return o;
}

std::size_t LastSupport(const Element& x) {
  std::size_t last = 0;
  for (std::size_t l = 0; l < x.coeffs.size(); ++l) {
    if (x.coeffs[l] != 0) last = l;
  }
  return last;
}

void CountNode(std::uint64_t& nodes, const Limits& limits) {
  if (++nodes > limits.map_candidate_cap) {
    throw Error(ErrorKind::kCapExceeded,
                "map search exceeded " +
                    std::to_string(limits.map_candidate_cap) + " candidates");
  }
}

Element Sum(const Ring& r, const std::vector<Element>& xs) {
  Element s = r.zero();
  for (const Element& x : xs) s = r.Add(s, x);
  return s;
}

// Image in ambient B of an element of the head (or rest) of A.
Element Transport(const CornerRing& from, const CornerRing& to,
                  const RingIsomorphism& iso, const Element& x) {
  return to.Embed(iso.Apply(from.Coordinates(x)));
}

}  // namespace

Element AdditiveMap::Apply(const Element& x) const {
  if (!IsReducedVector(x, domain_orders)) {
    throw Error(ErrorKind::kShapeMismatch,
                ToString(x) + " is not in the domain of the map");
  }
  Element out{std::vector<Coeff>(codomain_orders.size(), 0)};
  for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
    if (x.coeffs[i] == 0) continue;
    for (std::size_t l = 0; l < codomain_orders.size(); ++l) {
      out.coeffs[l] = Mod(out.coeffs[l] + MulMod(x.coeffs[i], images[i].coeffs[l],
                                                 codomain_orders[l]),
                          codomain_orders[l]);
    }
  }
  return out;
}

bool AdditiveMap::IsWellDefined() const {
  if (images.size() != domain_orders.size()) return false;
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!IsReducedVector(images[i], codomain_orders)) return false;
    if (!IsZeroVector(ScaleVector(domain_orders[i], images[i], codomain_orders))) {
      return false;
    }
  }
  return true;
}

bool AdditiveMap::IsBijective() const {
  if (!IsWellDefined()) return false;
  const std::uint64_t n = GroupOrder(codomain_orders);
  return GroupOrder(domain_orders) == n &&
         Subgroup::Span(codomain_orders, images).order() == n;
}

AdditiveMap IdentityMap(const std::vector<Coeff>& orders) {
  AdditiveMap f{orders, orders, {}};
  for (std::size_t i = 0; i < orders.size(); ++i) {
    Element e{std::vector<Coeff>(orders.size(), 0)};
    e.coeffs[i] = 1;
    f.images.push_back(std::move(e));
  }
  return f;
}

AdditiveMap Compose(const AdditiveMap& f, const AdditiveMap& g) {
  if (g.codomain_orders != f.domain_orders) {
    throw Error(ErrorKind::kShapeMismatch, "maps are not composable");
  }
  AdditiveMap h{g.domain_orders, f.codomain_orders, {}};
  for (const Element& y : g.images) h.images.push_back(f.Apply(y));
  return h;
}

AdditiveMap Invert(const AdditiveMap& f) {
  if (!f.IsBijective()) {
    throw Error(ErrorKind::kNotBijective, "map is not an additive bijection");
  }
  std::vector<lattice::Row> rows;
  for (const Element& y : f.images) rows.push_back(y.coeffs);
  const lattice::LinearSolver solver(f.codomain_orders, rows, f.domain_orders);
  AdditiveMap inv{f.codomain_orders, f.domain_orders, {}};
  for (std::size_t j = 0; j < f.codomain_orders.size(); ++j) {
    lattice::Row target(f.codomain_orders.size(), 0);
    target[j] = 1;
    std::optional<lattice::Row> c = solver.Solve(target);
    if (!c) {
      throw Error(ErrorKind::kNotBijective, "generator has no preimage", {j});
    }
    Element x{std::move(*c)};
    for (std::size_t i = 0; i < x.coeffs.size(); ++i) {
      x.coeffs[i] = Mod(x.coeffs[i], f.domain_orders[i]);
    }
    inv.images.push_back(std::move(x));
  }
  return inv;
}

bool VerifyRingIso(const AdditiveMap& f, const Ring& a, const Ring& b) {
  if (f.domain_orders != a.orders() || f.codomain_orders != b.orders() ||
      f.images.size() != a.rank()) {
    throw Error(ErrorKind::kShapeMismatch,
                "map shape does not match " + a.name() + " -> " + b.name());
  }
  for (const Element& y : f.images) {
    if (y.coeffs.size() != b.rank()) {
      throw Error(ErrorKind::kShapeMismatch, "image has wrong length");
    }
  }
  if (!f.IsWellDefined()) return false;
  if (f.Apply(a.one()) != b.one()) return false;
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = 0; j < a.rank(); ++j) {
      const Element lhs = f.Apply(a.Mul(a.generator(i), a.generator(j)));
      if (lhs != b.Mul(f.images[i], f.images[j])) return false;
    }
  }
  return f.IsBijective();
}

RingIsomorphism RingIsomorphism::Make(Ring domain, Ring codomain,
                                      AdditiveMap map) {
  if (!VerifyRingIso(map, domain, codomain)) {
    throw Error(ErrorKind::kNotIsomorphism,
                "map is not a ring isomorphism " + domain.name() + " -> " +
                    codomain.name());
  }
  return RingIsomorphism(std::move(domain), std::move(codomain),
                         std::move(map));
}

RingIsomorphism RingIsomorphism::Identity(const Ring& a) {
  return RingIsomorphism(a, a, IdentityMap(a.orders()));
}

RingIsomorphism Compose(const RingIsomorphism& f, const RingIsomorphism& g) {
  if (!(g.codomain() == f.domain())) {
    throw Error(ErrorKind::kShapeMismatch, "isomorphisms are not composable");
  }
  return RingIsomorphism::Make(g.domain(), f.codomain(),
                               Compose(f.map(), g.map()));
}

RingIsomorphism Invert(const RingIsomorphism& f) {
  return RingIsomorphism::Make(f.codomain(), f.domain(), Invert(f.map()));
}

std::optional<Element> FindInverse(const Ring& a, const Element& u) {
  a.Check(u);
  AdditiveMap left{a.orders(), a.orders(), {}};
  for (std::size_t t = 0; t < a.rank(); ++t) {
    left.images.push_back(a.Mul(u, a.generator(t)));
  }
  if (!left.IsBijective()) return std::nullopt;
  Element v = Invert(left).Apply(a.one());
  if (a.Mul(u, v) != a.one() || a.Mul(v, u) != a.one()) return std::nullopt;
  return v;
}

std::vector<Element> Units(const Ring& a, const Limits& limits) {
  std::vector<Element> out;
  a.ForEachElement(limits, [&](const Element& x) {
    if (FindInverse(a, x)) out.push_back(x);
    return true;
  });
  return out;
}

RingIsomorphism InnerAutomorphism(const Ring& a, const Element& u) {
  std::optional<Element> inv = FindInverse(a, u);
  if (!inv) {
    throw Error(ErrorKind::kNotIsomorphism, ToString(u) + " is not a unit");
  }
  AdditiveMap f{a.orders(), a.orders(), {}};
  for (std::size_t t = 0; t < a.rank(); ++t) {
    f.images.push_back(a.Mul(u, a.generator(t), *inv));
  }
  return RingIsomorphism::Make(a, a, std::move(f));
}

Element BimoduleIsomorphism::Apply(const Element& x) const {
  std::optional<Element> c = source.Coordinates(x);
  if (!c) {
    throw Error(ErrorKind::kAmbientMismatch,
                ToString(x) + " is not in the source module");
  }
  return target.FromCoordinates(map.Apply(*c));
}

PeirceSplit MakePeirceSplit(const Ring& a, const Element& unit,
                            const Element& e) {
  a.Check(unit);
  a.Check(e);
  const bool inside = a.Mul(unit, e) == e && a.Mul(e, unit) == e;
  if (!a.IsIdempotent(unit) || !a.IsIdempotent(e) || !inside ||
      !IsSemicentralWithin(a, unit, e)) {
    throw Error(ErrorKind::kNotSemicentral,
                ToString(e) + " is not a semicentral idempotent of the corner " +
                    ToString(unit));
  }
  const Element complement = a.Sub(unit, e);
  return PeirceSplit{MakeCornerRing(a, unit), MakeCornerRing(a, e),
                     MakeCornerRing(a, complement),
                     PeirceComponent(a, e, complement)};
}

namespace {

void RequireConsistent(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::kInconsistentQuadruple, what);
}

// chi(r l) == rho(r) chi(l) and chi(l a) == chi(l) phibar(a) on generators.
bool ActionsCompatible(const PeirceSplit& sa, const PeirceSplit& sb,
                       const RingIsomorphism& rho,
                       const RingIsomorphism& phibar,
                       const BimoduleIsomorphism& chi) {
  const Ring& a = sa.ambient();
  const Ring& b = sb.ambient();
  for (const Element& l : sa.off_diagonal.generators()) {
    const Element cl = chi.Apply(l);
    for (std::size_t s = 0; s < sa.head.presentation.rank(); ++s) {
      const Element r = sa.head.Embed(sa.head.presentation.generator(s));
      const Element rr = Transport(sa.head, sb.head, rho, r);
      if (chi.Apply(a.Mul(r, l)) != b.Mul(rr, cl)) return false;
    }
    for (std::size_t s = 0; s < sa.rest.presentation.rank(); ++s) {
      const Element x = sa.rest.Embed(sa.rest.presentation.generator(s));
      const Element px = Transport(sa.rest, sb.rest, phibar, x);
      if (chi.Apply(a.Mul(l, x)) != b.Mul(cl, px)) return false;
    }
  }
  return true;
}

}  // namespace

RingIsomorphism Synthesize(const PeirceSplit& sa, const PeirceSplit& sb,
                           const CornerQuadruple& q) {
  RequireConsistent(q.rho.domain() == sa.head.presentation &&
                        q.rho.codomain() == sb.head.presentation,
                    "rho does not map the head corner of A to that of B");
  RequireConsistent(q.phibar.domain() == sa.rest.presentation &&
                        q.phibar.codomain() == sb.rest.presentation,
                    "phibar does not map the tail corner of A to that of B");
  RequireConsistent(q.chi.source == sa.off_diagonal &&
                        q.chi.target == sb.off_diagonal,
                    "chi does not map L to M");
  RequireConsistent(
      q.chi.map.domain_orders == sa.off_diagonal.generator_orders() &&
          q.chi.map.codomain_orders == sb.off_diagonal.generator_orders() &&
          q.chi.map.IsBijective(),
      "chi is not an additive bijection L -> M");
  const Ring& a = sa.ambient();
  const Ring& b = sb.ambient();
  RequireConsistent(IsReducedVector(q.m, b.orders()) &&
                        sb.off_diagonal.Contains(q.m),
                    "m = " + ToString(q.m) + " is not in M");
  RequireConsistent(ActionsCompatible(sa, sb, q.rho, q.phibar, q.chi),
                    "chi is not compatible with rho and phibar");

  const Element& e = sa.idem();
  const Element& c = sa.complement();
  const Ring& whole = sa.whole.presentation;
  AdditiveMap map{whole.orders(), sb.whole.presentation.orders(), {}};
  for (std::size_t t = 0; t < whole.rank(); ++t) {
    const Element x = sa.whole.Embed(whole.generator(t));
    const Element rr = Transport(sa.head, sb.head, q.rho, a.Mul(e, x, e));
    const Element cl = q.chi.Apply(a.Mul(e, x, c));
    const Element pa = Transport(sa.rest, sb.rest, q.phibar, a.Mul(c, x, c));
    Element y = b.Add(rr, b.Mul(rr, q.m));
    y = b.Add(y, cl);
    y = b.Sub(y, b.Mul(q.m, pa));
    y = b.Add(y, pa);
    map.images.push_back(sb.whole.Coordinates(y));
  }
  return RingIsomorphism::Make(whole, sb.whole.presentation, std::move(map));
}

CornerQuadruple Decompose(const PeirceSplit& sa, const PeirceSplit& sb,
                          const RingIsomorphism& phi) {
  if (!(phi.domain() == sa.whole.presentation) ||
      !(phi.codomain() == sb.whole.presentation)) {
    throw Error(ErrorKind::kShapeMismatch,
                "isomorphism does not match the split corners");
  }
  const Ring& b = sb.ambient();
  auto lift = [&](const Element& x) {
    return Transport(sa.whole, sb.whole, phi, x);
  };
  const Element& f = sb.idem();
  const Element& fc = sb.complement();

  Element m = b.Sub(lift(sa.idem()), f);
  if (!sb.off_diagonal.Contains(m)) {
    throw Error(ErrorKind::kLocationMismatch,
                "phi(e) - f = " + ToString(m) + " is not in fB(1-f)");
  }

  auto corner_map = [&](const CornerRing& from, const CornerRing& to,
                        const Element& g) {
    AdditiveMap map{from.presentation.orders(), to.presentation.orders(), {}};
    for (std::size_t t = 0; t < from.presentation.rank(); ++t) {
      const Element x = from.Embed(from.presentation.generator(t));
      map.images.push_back(to.Coordinates(b.Mul(g, lift(x), g)));
    }
    return RingIsomorphism::Make(from.presentation, to.presentation,
                                 std::move(map));
  };
  RingIsomorphism rho = corner_map(sa.head, sb.head, f);
  RingIsomorphism phibar = corner_map(sa.rest, sb.rest, fc);

  AdditiveMap chi_map{sa.off_diagonal.generator_orders(),
                      sb.off_diagonal.generator_orders(), {}};
  for (const Element& l : sa.off_diagonal.generators()) {
    std::optional<Element> c = sb.off_diagonal.Coordinates(lift(l));
    if (!c) {
      throw Error(ErrorKind::kStructureViolation,
                  "phi does not map L into M");
    }
    chi_map.images.push_back(std::move(*c));
  }
  if (!chi_map.IsBijective()) {
    throw Error(ErrorKind::kStructureViolation,
                "restriction of phi to L is not a bijection onto M");
  }
  return CornerQuadruple{
      std::move(rho), std::move(phibar),
      BimoduleIsomorphism{sa.off_diagonal, sb.off_diagonal, std::move(chi_map)},
      std::move(m)};
}

RingIsomorphism CornerSynthesize(const Ring& a, const Ring& b, const Element& e,
                                 const Element& f, const CornerQuadruple& q) {
  return Synthesize(MakePeirceSplit(a, a.one(), e),
                    MakePeirceSplit(b, b.one(), f), q);
}

CornerQuadruple CornerDecompose(const RingIsomorphism& phi, const Element& e,
                                const Element& f) {
  const Ring& a = phi.domain();
  const Ring& b = phi.codomain();
  a.Check(e);
  b.Check(f);
  const Subgroup m = PeirceComponent(b, f, b.Sub(b.one(), f));
  if (!m.Contains(b.Sub(phi.Apply(e), f))) {
    throw Error(ErrorKind::kLocationMismatch,
                "phi(e) = " + ToString(phi.Apply(e)) + " is not in " +
                    ToString(f) + " + fB(1-f)");
  }
  return Decompose(MakePeirceSplit(a, a.one(), e),
                   MakePeirceSplit(b, b.one(), f), phi);
}

RingIsomorphism IsoSynthesize(const TriangularSequence& seq_a,
                              const TriangularSequence& seq_b,
                              const IsoDecomposition& d, const Limits& limits) {
  const Ring& a = seq_a.ring();
  const Ring& b = seq_b.ring();
  const std::size_t m = seq_a.length();
  if (seq_b.length() != m) {
    throw Error(ErrorKind::kShapeMismatch, "sequences have different lengths");
  }
  if (d.sigma.size() != m) {
    throw Error(ErrorKind::kInadmissiblePermutation,
                "sigma has length " + std::to_string(d.sigma.size()) +
                    ", expected " + std::to_string(m));
  }
  Reordered(seq_b, d.sigma, limits);
  if (m == 0) {
    RequireConsistent(d.layers.empty() && d.last_rho.domain() == a &&
                          d.last_rho.codomain() == b,
                      "zero-ring decomposition must be a single map A -> B");
    return d.last_rho;
  }
  if (d.layers.size() != m - 1) {
    throw Error(ErrorKind::kInconsistentQuadruple,
                std::to_string(d.layers.size()) + " layers for " +
                    std::to_string(m) + " blocks");
  }
  std::vector<Element> unit_b(m + 1, b.zero());
  for (std::size_t i = m; i-- > 0;) {
    unit_b[i] = b.Add(unit_b[i + 1], seq_b[d.sigma[i]]);
  }

  RingIsomorphism phi = d.last_rho;
  if (!(phi.domain() == MakeCornerRing(a, seq_a[m - 1]).presentation) ||
      !(phi.codomain() == MakeCornerRing(b, seq_b[d.sigma[m - 1]]).presentation)) {
    throw Error(ErrorKind::kInconsistentQuadruple,
                "last rho does not match the corners of level " +
                    std::to_string(m),
                {m - 1});
  }
  for (std::size_t i = m - 1; i-- > 0;) {
    const IsoLayer& layer = d.layers[i];
    const PeirceSplit sa = MakePeirceSplit(a, seq_a.tail_unit(i), seq_a[i]);
    const PeirceSplit sb = MakePeirceSplit(b, unit_b[i], seq_b[d.sigma[i]]);
    try {
      phi = Synthesize(sa, sb, CornerQuadruple{layer.rho, phi, layer.chi, layer.m});
    } catch (const Error& err) {
      if (err.kind() != ErrorKind::kInconsistentQuadruple) throw;
      throw Error(ErrorKind::kInconsistentQuadruple,
                  "level " + std::to_string(i + 1) + ": " + err.message(), {i});
    }
  }
  return phi;
}

IsoDecomposition IsoDecompose(const RingIsomorphism& phi,
                              const TriangularSequence& seq_a,
                              const TriangularSequence& seq_b) {
  const Ring& a = seq_a.ring();
  const Ring& b = seq_b.ring();
  if (!(phi.domain() == a) || !(phi.codomain() == b)) {
    throw Error(ErrorKind::kShapeMismatch,
                "isomorphism does not match the sequenced rings");
  }
  const std::size_t m = seq_a.length();
  if (seq_b.length() != m) {
    throw Error(ErrorKind::kStructureViolation,
                "sequences have different lengths " + std::to_string(m) +
                    " and " + std::to_string(seq_b.length()));
  }
  IsoDecomposition d{{}, {}, phi};
  if (m == 0) return d;

  std::vector<std::size_t> rem(m);
  for (std::size_t k = 0; k < m; ++k) rem[k] = k;
  RingIsomorphism current = phi;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    std::vector<Element> idems;
    for (std::size_t k : rem) idems.push_back(seq_b[k]);
    const Element unit_b = Sum(b, idems);
    const CornerRing whole_b = MakeCornerRing(b, unit_b);
    const PeirceSplit sa = MakePeirceSplit(a, seq_a.tail_unit(i), seq_a[i]);
    const Element target = Transport(sa.whole, whole_b, current, seq_a[i]);
    const std::size_t p = LocateWithin(b, idems, target).index;
    const PeirceSplit sb = MakePeirceSplit(b, unit_b, seq_b[rem[p]]);
    CornerQuadruple q = Decompose(sa, sb, current);
    d.sigma.push_back(rem[p]);
    d.layers.push_back(IsoLayer{std::move(q.rho), std::move(q.chi), std::move(q.m)});
    current = std::move(q.phibar);
    rem.erase(rem.begin() + static_cast<std::ptrdiff_t>(p));
  }
  d.sigma.push_back(rem[0]);
  d.last_rho = std::move(current);
  return d;
}

std::vector<RingIsomorphism> CornerIsomorphisms(const Ring& r, const Ring& s,
                                                const Limits& limits) {
  std::vector<RingIsomorphism> out;
  if (r.size() != s.size()) return out;
  const std::size_t k = r.rank();
  const std::vector<Element> targets = s.Elements(limits);

  // A product g_i g_j can be checked once every generator in its support
  // has an image.
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> checks(k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Element p = r.Mul(r.generator(i), r.generator(j));
      checks[std::max({i, j, LastSupport(p)})].emplace_back(i, j);
    }
  }
  const std::size_t unit_level = k == 0 ? 0 : LastSupport(r.one());

  std::vector<std::vector<const Element*>> candidates(k);
  for (std::size_t t = 0; t < k; ++t) {
    for (const Element& y : targets) {
      if (AdditiveOrder(y, s.orders()) == r.orders()[t]) {
        candidates[t].push_back(&y);
      }
    }
  }

  AdditiveMap map{r.orders(), s.orders(),
                  std::vector<Element>(k, s.zero())};
  std::uint64_t nodes = 0;
  std::function<void(std::size_t)> assign = [&](std::size_t t) {
    if (t == k) {
      if (VerifyRingIso(map, r, s)) {
        out.push_back(RingIsomorphism::Make(r, s, map));
      }
      return;
    }
    for (const Element* y : candidates[t]) {
      CountNode(nodes, limits);
      map.images[t] = *y;
      bool ok = t != unit_level || map.Apply(r.one()) == s.one();
      for (auto [i, j] : checks[t]) {
        if (!ok) break;
        ok = map.Apply(r.Mul(r.generator(i), r.generator(j))) ==
             s.Mul(map.images[i], map.images[j]);
      }
      if (ok) assign(t + 1);
    }
    map.images[t] = s.zero();
  };
  assign(0);
  return out;
}

std::vector<BimoduleIsomorphism> CompatibleBimoduleMaps(
    const PeirceSplit& sa, const PeirceSplit& sb, const RingIsomorphism& rho,
    const RingIsomorphism& phibar, const Limits& limits) {
  std::vector<BimoduleIsomorphism> out;
  const Subgroup& l_group = sa.off_diagonal;
  const Subgroup& m_group = sb.off_diagonal;
  if (l_group.order() != m_group.order()) return out;
  const Ring& a = sa.ambient();
  const Ring& b = sb.ambient();
  const std::vector<Element>& gens = l_group.generators();
  const std::size_t k = gens.size();
  const std::vector<Element> targets = m_group.Elements(limits);

  // Action equations: chi(x) == y_left * chi(l_t) or chi(l_t) * y_right,
  // where x = r l_t or l_t a in L coordinates.
  struct Equation {
    Element x;  // L coordinates
    Element factor;  // rho(r) or phibar(a), ambient B
    std::size_t t;
    bool left;
  };
  std::vector<std::vector<Equation>> equations(k);
  auto add = [&](Element product, Element factor, std::size_t t, bool left) {
    Element x = *l_group.Coordinates(product);
    const std::size_t level = std::max(t, LastSupport(x));
    equations[level].push_back(Equation{std::move(x), std::move(factor), t, left});
  };
  for (std::size_t t = 0; t < k; ++t) {
    for (std::size_t s = 0; s < sa.head.presentation.rank(); ++s) {
      const Element r = sa.head.Embed(sa.head.presentation.generator(s));
      add(a.Mul(r, gens[t]), Transport(sa.head, sb.head, rho, r), t, true);
    }
    for (std::size_t s = 0; s < sa.rest.presentation.rank(); ++s) {
      const Element x = sa.rest.Embed(sa.rest.presentation.generator(s));
      add(a.Mul(gens[t], x), Transport(sa.rest, sb.rest, phibar, x), t, false);
    }
  }

  std::vector<std::vector<const Element*>> candidates(k);
  for (std::size_t t = 0; t < k; ++t) {
    for (const Element& y : targets) {
      if (AdditiveOrder(y, b.orders()) == l_group.generator_orders()[t]) {
        candidates[t].push_back(&y);
      }
    }
  }

  std::vector<Element> images(k, b.zero());  // ambient B
  auto evaluate = [&](const Element& x) {
    Element y = b.zero();
    for (std::size_t t = 0; t < k; ++t) {
      if (x.coeffs[t] != 0) y = b.Add(y, b.Scale(x.coeffs[t], images[t]));
    }
    return y;
  };
  std::uint64_t nodes = 0;
  std::function<void(std::size_t)> assign = [&](std::size_t t) {
    if (t == k) {
      if (Subgroup::Span(b.orders(), images).order() != m_group.order()) return;
      AdditiveMap map{l_group.generator_orders(), m_group.generator_orders(), {}};
      for (const Element& y : images) map.images.push_back(*m_group.Coordinates(y));
      out.push_back(BimoduleIsomorphism{l_group, m_group, std::move(map)});
      return;
    }
    for (const Element* y : candidates[t]) {
      CountNode(nodes, limits);
      images[t] = *y;
      bool ok = true;
      for (const Equation& eq : equations[t]) {
        const Element rhs = eq.left ? b.Mul(eq.factor, images[eq.t])
                                    : b.Mul(images[eq.t], eq.factor);
        if (evaluate(eq.x) != rhs) {
          ok = false;
          break;
        }
      }
      if (ok) assign(t + 1);
    }
    images[t] = b.zero();
  };
  assign(0);
  return out;
}

namespace {

using TailSink = std::function<bool(const RingIsomorphism&, Permutation,
                                    std::vector<IsoLayer>,
                                    const RingIsomorphism&)>;

class IsoEnumerator {
 public:
  IsoEnumerator(const TriangularSequence& seq_a, const TriangularSequence& seq_b,
                const Limits& limits)
      : seq_a_(seq_a), seq_b_(seq_b), limits_(limits) {}

  // Enumerates the isomorphisms of tail corner i of A onto the corner of B
  // cut out by the blocks in rem.
  bool Run(std::size_t i, const std::vector<std::size_t>& rem,
           const TailSink& sink) {
    const Ring& a = seq_a_.ring();
    const Ring& b = seq_b_.ring();
    if (rem.size() == 1) {
      for (const RingIsomorphism& rho :
           CornerIsomorphisms(seq_a_.corner(i).presentation,
                              MakeCornerRing(b, seq_b_[rem[0]]).presentation,
                              limits_)) {
        if (!sink(rho, {rem[0]}, {}, rho)) return false;
      }
      return true;
    }
    std::vector<Element> idems;
    for (std::size_t k : rem) idems.push_back(seq_b_[k]);
    const Element unit_b = Sum(b, idems);
    const PeirceSplit sa = MakePeirceSplit(a, seq_a_.tail_unit(i), seq_a_[i]);

    for (std::size_t p = 0; p < rem.size(); ++p) {
      bool front = true;
      for (std::size_t q = 0; q < p && front; ++q) {
        front = PeirceComponent(b, idems[q], idems[p]).IsZero();
      }
      if (!front) continue;
      const PeirceSplit sb = MakePeirceSplit(b, unit_b, idems[p]);
      if (sa.head.group.order() != sb.head.group.order() ||
          sa.rest.group.order() != sb.rest.group.order() ||
          sa.off_diagonal.order() != sb.off_diagonal.order()) {
        continue;
      }
      const std::vector<RingIsomorphism> rhos = CornerIsomorphisms(
          sa.head.presentation, sb.head.presentation, limits_);
      if (rhos.empty()) continue;
      const std::vector<Element> offsets = sb.off_diagonal.Elements(limits_);
      std::vector<std::size_t> tail = rem;
      tail.erase(tail.begin() + static_cast<std::ptrdiff_t>(p));

      for (const RingIsomorphism& rho : rhos) {
        const bool more = Run(
            i + 1, tail,
            [&](const RingIsomorphism& phibar, Permutation sigma,
                std::vector<IsoLayer> layers, const RingIsomorphism& last) {
              for (const BimoduleIsomorphism& chi :
                   CompatibleBimoduleMaps(sa, sb, rho, phibar, limits_)) {
                for (const Element& m : offsets) {
                  RingIsomorphism phi =
                      Synthesize(sa, sb, CornerQuadruple{rho, phibar, chi, m});
                  Permutation s{rem[p]};
                  s.insert(s.end(), sigma.begin(), sigma.end());
                  std::vector<IsoLayer> l{IsoLayer{rho, chi, m}};
                  l.insert(l.end(), layers.begin(), layers.end());
                  if (!sink(phi, std::move(s), std::move(l), last)) return false;
                }
              }
              return true;
            });
        if (!more) return false;
      }
    }
    return true;
  }

 private:
  const TriangularSequence& seq_a_;
  const TriangularSequence& seq_b_;
  const Limits& limits_;
};

}  // namespace

bool ForEachIsomorphism(const TriangularSequence& seq_a,
                        const TriangularSequence& seq_b, const IsoCallback& fn,
                        const Limits& limits) {
  const Ring& a = seq_a.ring();
  const Ring& b = seq_b.ring();
  const std::size_t m = seq_a.length();
  if (seq_b.length() != m || a.size() != b.size()) return true;
  if (m == 0) {
    RingIsomorphism phi =
        RingIsomorphism::Make(a, b, AdditiveMap{a.orders(), b.orders(), {}});
    return fn(phi, IsoDecomposition{{}, {}, phi});
  }
  std::vector<std::size_t> all(m);
  for (std::size_t k = 0; k < m; ++k) all[k] = k;
  IsoEnumerator enumerator(seq_a, seq_b, limits);
  return enumerator.Run(
      0, all,
      [&](const RingIsomorphism& phi, Permutation sigma,
          std::vector<IsoLayer> layers, const RingIsomorphism& last) {
        return fn(phi, IsoDecomposition{std::move(sigma), std::move(layers), last});
      });
}

std::optional<RingIsomorphism> IsoSearch(const Ring& a, const Ring& b,
                                         const Limits& limits) {
  if (a.size() != b.size()) return std::nullopt;
  const TriangularSequence seq_a = CompleteTriangulatingSet(a, limits);
  const TriangularSequence seq_b = CompleteTriangulatingSet(b, limits);
  if (seq_a.length() != seq_b.length()) return std::nullopt;
  std::optional<RingIsomorphism> found;
  ForEachIsomorphism(
      seq_a, seq_b,
      [&](const RingIsomorphism& phi, const IsoDecomposition&) {
        found = phi;
        return false;
      },
      limits);
  return found;
}

std::vector<RingIsomorphism> AllIsomorphisms(const Ring& a, const Ring& b,
                                             const Limits& limits) {
  std::vector<RingIsomorphism> out;
  if (a.size() != b.size()) return out;
  const TriangularSequence seq_a = CompleteTriangulatingSet(a, limits);
  const TriangularSequence seq_b = CompleteTriangulatingSet(b, limits);
  ForEachIsomorphism(
      seq_a, seq_b,
      [&](const RingIsomorphism& phi, const IsoDecomposition&) {
        out.push_back(phi);
        return true;
      },
      limits);
  std::sort(out.begin(), out.end(),
            [](const RingIsomorphism& x, const RingIsomorphism& y) {
              return x.map() < y.map();
            });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace peirce
