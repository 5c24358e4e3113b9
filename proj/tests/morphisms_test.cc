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

#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "peirce/oracle.h"
#include "testing.h"

namespace peirce {
namespace {

using testing::E;

ErrorKind KindOf(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::kFormat;
}

// (id, id, id, m) for the split of A along e against itself.
CornerQuadruple Trivial(const PeirceSplit& s, const Element& m) {
  const Subgroup& l = s.off_diagonal;
  return CornerQuadruple{RingIsomorphism::Identity(s.head.presentation),
                         RingIsomorphism::Identity(s.rest.presentation),
                         BimoduleIsomorphism{l, l, IdentityMap(l.generator_orders())},
                         m};
}

// x -> (1+m)^{-1} x (1+m).
RingIsomorphism ConjugateBy(const Ring& a, const Element& m) {
  return InnerAutomorphism(a, *FindInverse(a, a.Add(a.one(), m)));
}

TEST(AdditiveMapTest, ComposeAndInvert) {
  const AdditiveMap f{{4, 2}, {4, 2}, {E({1, 1}), E({2, 1})}};
  ASSERT_TRUE(f.IsBijective());
  EXPECT_EQ(Compose(f, Invert(f)), IdentityMap({4, 2}));
  EXPECT_EQ(Compose(Invert(f), f), IdentityMap({4, 2}));
  const AdditiveMap g{{4, 2}, {4, 2}, {E({2, 0}), E({0, 1})}};
  EXPECT_FALSE(g.IsBijective());
  EXPECT_EQ(KindOf([&] { Invert(g); }), ErrorKind::kNotBijective);
  const AdditiveMap h{{6}, {6}, {E({1})}};
  EXPECT_EQ(KindOf([&] { Compose(f, h); }), ErrorKind::kShapeMismatch);
  EXPECT_FALSE((AdditiveMap{{2}, {4}, {E({1})}}.IsWellDefined()));
}

TEST(VerifyRingIsoTest, Examples) {
  for (const std::string& name : FixtureNames()) {
    const Ring a = Fixture(name);
    EXPECT_TRUE(VerifyRingIso(IdentityMap(a.orders()), a, a)) << name;
  }
  const Ring z6 = Cyclic(6);
  EXPECT_FALSE(VerifyRingIso(AdditiveMap{{6}, {6}, {E({5})}}, z6, z6));
  const Ring t = UpperTriangular(2, 2);
  EXPECT_TRUE(VerifyRingIso(InnerAutomorphism(t, E({1, 1, 1})).map(), t, t));
  EXPECT_EQ(KindOf([&] { VerifyRingIso(IdentityMap({6}), t, t); }),
            ErrorKind::kShapeMismatch);
  EXPECT_EQ(KindOf([&] { RingIsomorphism::Make(z6, z6, AdditiveMap{{6}, {6}, {E({5})}}); }),
            ErrorKind::kNotIsomorphism);
  EXPECT_EQ(KindOf([&] { InnerAutomorphism(t, E({1, 0, 0})); }),
            ErrorKind::kNotIsomorphism);
}

TEST(MapOpsTest, Examples) {
  const Ring t = UpperTriangular(2, 2);
  const RingIsomorphism u = InnerAutomorphism(t, E({1, 1, 1}));
  EXPECT_EQ(Invert(u), u);
  EXPECT_EQ(Compose(u, Invert(u)), RingIsomorphism::Identity(t));

  const Ring z6 = Cyclic(6);
  const Ring z23 = DirectProduct(Cyclic(2), Cyclic(3));
  const RingIsomorphism crt = *IsoSearch(z6, z23);
  const RingIsomorphism back = *IsoSearch(z23, z6);
  EXPECT_EQ(Compose(back, crt), RingIsomorphism::Identity(z6));
  EXPECT_EQ(Compose(crt, back), RingIsomorphism::Identity(z23));
}

TEST(UnitsTest, MatchOracle) {
  for (const std::string& name : FixtureNames()) {
    const Ring a = Fixture(name);
    EXPECT_EQ(Units(a), oracle::BruteUnits(a)) << name;
  }
}

TEST(CornerSynthesizeTest, TriangularF2) {
  const Ring t = UpperTriangular(2, 2);
  const Element e11 = E({1, 0, 0}), e12 = E({0, 1, 0});
  const PeirceSplit s = MakePeirceSplit(t, t.one(), e11);
  const RingIsomorphism phi = CornerSynthesize(t, t, e11, e11, Trivial(s, e12));
  EXPECT_EQ(phi, ConjugateBy(t, e12));
  // [[r, l], [0, a]] -> [[r, r + l + a], [0, a]]
  for (const Element& x : t.Elements()) {
    const Coeff r = x.coeffs[0], l = x.coeffs[1], a = x.coeffs[2];
    EXPECT_EQ(phi.Apply(x), E({r, (r + l + a) % 2, a}));
  }
  EXPECT_EQ(CornerSynthesize(t, t, e11, e11, Trivial(s, t.zero())),
            RingIsomorphism::Identity(t));
}

TEST(CornerSynthesizeTest, SignMattersOverZ4) {
  const Ring t = UpperTriangular(2, 4);
  const Element e11 = E({1, 0, 0});
  const PeirceSplit s = MakePeirceSplit(t, t.one(), e11);
  for (Coeff k = 0; k < 4; ++k) {
    const Element m = E({0, k, 0});
    const RingIsomorphism phi = CornerSynthesize(t, t, e11, e11, Trivial(s, m));
    EXPECT_EQ(phi, ConjugateBy(t, m));
    const Element u = t.Add(t.one(), m);
    EXPECT_EQ(phi == InnerAutomorphism(t, u), k % 2 == 0) << k;
  }
}

TEST(CornerSynthesizeTest, ZeroBimodule) {
  const Ring z6 = Cyclic(6);
  const PeirceSplit s = MakePeirceSplit(z6, z6.one(), E({3}));
  EXPECT_TRUE(s.off_diagonal.IsZero());
  EXPECT_EQ(CornerSynthesize(z6, z6, E({3}), E({3}), Trivial(s, E({0}))),
            RingIsomorphism::Identity(z6));
}

TEST(CornerSynthesizeTest, RejectsInconsistentQuadruples) {
  const Ring t = UpperTriangular(2, 4);
  const Element e11 = E({1, 0, 0});
  const PeirceSplit s = MakePeirceSplit(t, t.one(), e11);
  CornerQuadruple q = Trivial(s, E({1, 0, 0}));  // m outside M
  EXPECT_EQ(KindOf([&] { CornerSynthesize(t, t, e11, e11, q); }),
            ErrorKind::kInconsistentQuadruple);
  q = Trivial(s, t.zero());
  // The corners act on L = Z4 E12 through scalars, so -1 is compatible while
  // doubling is not even bijective.
  q.chi.map.images[0] = E({3});
  EXPECT_NO_THROW(CornerSynthesize(t, t, e11, e11, q));
  q.chi.map.images[0] = E({2});
  EXPECT_EQ(KindOf([&] { CornerSynthesize(t, t, e11, e11, q); }),
            ErrorKind::kInconsistentQuadruple);
  EXPECT_EQ(KindOf([&] { MakePeirceSplit(t, t.one(), E({0, 0, 1})); }),
            ErrorKind::kNotSemicentral);
}

TEST(CornerDecomposeTest, Examples) {
  const Ring t = UpperTriangular(2, 2);
  const Element e11 = E({1, 0, 0}), e22 = E({0, 0, 1});
  const RingIsomorphism u = InnerAutomorphism(t, E({1, 1, 1}));
  CornerQuadruple q = CornerDecompose(u, e11, e11);
  EXPECT_EQ(q.m, E({0, 1, 0}));
  EXPECT_EQ(q.rho, RingIsomorphism::Identity(q.rho.domain()));
  EXPECT_EQ(q.phibar, RingIsomorphism::Identity(q.phibar.domain()));
  EXPECT_EQ(q.chi.map, IdentityMap(q.chi.source.generator_orders()));
  EXPECT_EQ(CornerSynthesize(t, t, e11, e11, q), u);

  q = CornerDecompose(RingIsomorphism::Identity(t), e11, e11);
  EXPECT_EQ(q.m, t.zero());

  EXPECT_EQ(KindOf([&] { CornerDecompose(u, e11, e22); }),
            ErrorKind::kLocationMismatch);
}

TEST(IsoSynthesizeTest, SingleBlock) {
  const Ring f4 = FiniteField(2, {1, 1});
  const TriangularSequence seq = CompleteTriangulatingSet(f4);
  for (const RingIsomorphism& rho : CornerIsomorphisms(f4, f4)) {
    EXPECT_EQ(IsoSynthesize(seq, seq, IsoDecomposition{{0}, {}, rho}), rho);
  }
}

TEST(IsoSynthesizeTest, TriangularF2Automorphisms) {
  const Ring t = UpperTriangular(2, 2);
  const TriangularSequence seq = CompleteTriangulatingSet(t);
  const PeirceSplit s = MakePeirceSplit(t, t.one(), seq[0]);
  for (const Element& m : {E({0, 0, 0}), E({0, 1, 0})}) {
    const CornerQuadruple q = Trivial(s, m);
    const IsoDecomposition d{{0, 1}, {IsoLayer{q.rho, q.chi, m}}, q.phibar};
    EXPECT_EQ(IsoSynthesize(seq, seq, d), ConjugateBy(t, m));
  }
}

TEST(IsoSynthesizeTest, Z6Permutations) {
  const Ring z6 = Cyclic(6);
  const TriangularSequence seq = CompleteTriangulatingSet(z6);
  const PeirceSplit s = MakePeirceSplit(z6, z6.one(), seq[0]);
  const CornerQuadruple q = Trivial(s, z6.zero());
  IsoDecomposition d{{0, 1}, {IsoLayer{q.rho, q.chi, q.m}}, q.phibar};
  EXPECT_EQ(IsoSynthesize(seq, seq, d), RingIsomorphism::Identity(z6));
  d.sigma = {1, 0};
  try {
    IsoSynthesize(seq, seq, d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInconsistentQuadruple);
  }
  d.sigma = {0, 0};
  EXPECT_EQ(KindOf([&] { IsoSynthesize(seq, seq, d); }),
            ErrorKind::kInadmissiblePermutation);
  const Ring t = UpperTriangular(2, 2);
  const TriangularSequence st = CompleteTriangulatingSet(t);
  const CornerQuadruple qt = Trivial(MakePeirceSplit(t, t.one(), st[0]), t.zero());
  EXPECT_EQ(KindOf([&] {
              IsoSynthesize(st, st, IsoDecomposition{{1, 0}, {IsoLayer{qt.rho, qt.chi, qt.m}}, qt.phibar});
            }),
            ErrorKind::kInadmissiblePermutation);
}

TEST(IsoDecomposeTest, Examples) {
  const Ring t = UpperTriangular(2, 2);
  const TriangularSequence st = CompleteTriangulatingSet(t);
  IsoDecomposition d = IsoDecompose(RingIsomorphism::Identity(t), st, st);
  EXPECT_EQ(d.sigma, (Permutation{0, 1}));
  EXPECT_EQ(d.layers[0].m, t.zero());
  d = IsoDecompose(InnerAutomorphism(t, E({1, 1, 1})), st, st);
  EXPECT_EQ(d.sigma, (Permutation{0, 1}));
  EXPECT_EQ(d.layers[0].m, E({0, 1, 0}));
  EXPECT_EQ(d.layers[0].rho, RingIsomorphism::Identity(d.layers[0].rho.domain()));
  EXPECT_EQ(d.last_rho, RingIsomorphism::Identity(d.last_rho.domain()));

  const Ring z6 = Cyclic(6);
  const TriangularSequence s6 = CompleteTriangulatingSet(z6);
  d = IsoDecompose(RingIsomorphism::Identity(z6), s6, s6);
  EXPECT_EQ(d.sigma, (Permutation{0, 1}));
}

TEST(IsoDecomposeTest, CrossRingDecompositionUsesSwap) {
  // Z6 -> Z3 x Z2: the block {0,3} of Z6 lands on the second factor.
  const Ring z6 = Cyclic(6);
  const Ring z32 = DirectProduct(Cyclic(3), Cyclic(2));
  const TriangularSequence sa = CompleteTriangulatingSet(z6);
  const TriangularSequence sb = CompleteTriangulatingSet(z32);
  const RingIsomorphism phi = *IsoSearch(z6, z32);
  const IsoDecomposition d = IsoDecompose(phi, sa, sb);
  EXPECT_EQ(sa.corner(0).presentation.size(), 2u);
  EXPECT_EQ(MakeCornerRing(z32, sb[d.sigma[0]]).presentation.size(), 2u);
  EXPECT_EQ(IsoSynthesize(sa, sb, d), phi);
}

TEST(IsoSearchTest, Examples) {
  const Ring t = UpperTriangular(2, 2);
  EXPECT_EQ(*IsoSearch(t, t), RingIsomorphism::Identity(t));
  EXPECT_FALSE(IsoSearch(Cyclic(6), t).has_value());
  EXPECT_FALSE(IsoSearch(Cyclic(4), FiniteField(2, {1, 1})).has_value());
  const Ring z23 = DirectProduct(Cyclic(2), Cyclic(3));
  const auto crt = IsoSearch(Cyclic(6), z23);
  ASSERT_TRUE(crt.has_value());
  EXPECT_EQ(crt->images(), std::vector<Element>{E({1, 1})});
}

// Every isomorphism round-trips through its decomposition, and every
// enumerated decomposition round-trips through its isomorphism.
TEST(RoundtripTest, BothDirectionsOnEveryFixture) {
  for (const std::string& name : FixtureNames()) {
    const Ring a = Fixture(name);
    const TriangularSequence seq = CompleteTriangulatingSet(a);
    std::size_t count = 0;
    ForEachIsomorphism(seq, seq, [&](const RingIsomorphism& phi,
                                     const IsoDecomposition& d) {
      ++count;
      EXPECT_EQ(IsoSynthesize(seq, seq, d), phi) << name;
      EXPECT_EQ(IsoDecompose(phi, seq, seq), d) << name;
      return true;
    });
    EXPECT_GT(count, 0u);
  }
}

TEST(RoundtripTest, AcrossPresentations) {
  std::mt19937 rng(99);
  for (const std::string& name : FixtureNames()) {
    const Ring a = Fixture(name);
    std::vector<std::size_t> perm(a.rank());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Ring b = PermuteGenerators(a, perm);
    const TriangularSequence sa = CompleteTriangulatingSet(a);
    const TriangularSequence sb = CompleteTriangulatingSet(b);
    ForEachIsomorphism(sa, sb, [&](const RingIsomorphism& phi,
                                   const IsoDecomposition& d) {
      EXPECT_EQ(IsoSynthesize(sa, sb, d), phi) << name;
      EXPECT_EQ(IsoDecompose(phi, sa, sb), d) << name;
      return true;
    });
  }
}

// Random admissible quadruples always synthesize to ring isomorphisms.
TEST(SynthesizeTest, RandomQuadruplesGiveIsomorphisms) {
  std::mt19937 rng(5);
  for (const char* name : {"t2z4", "t3f2", "three_block", "t2f2"}) {
    const Ring a = Fixture(name);
    const TriangularSequence seq = CompleteTriangulatingSet(a);
    const PeirceSplit s = MakePeirceSplit(a, a.one(), seq[0]);
    const auto rhos = CornerIsomorphisms(s.head.presentation, s.head.presentation);
    const auto bars = AllIsomorphisms(s.rest.presentation, s.rest.presentation);
    const auto offsets = s.off_diagonal.Elements();
    for (int trial = 0; trial < 25; ++trial) {
      const auto& rho = rhos[rng() % rhos.size()];
      const auto& bar = bars[rng() % bars.size()];
      const auto chis = CompatibleBimoduleMaps(s, s, rho, bar);
      ASSERT_FALSE(chis.empty());
      const CornerQuadruple q{rho, bar, chis[rng() % chis.size()],
                              offsets[rng() % offsets.size()]};
      const RingIsomorphism phi = Synthesize(s, s, q);
      EXPECT_TRUE(VerifyRingIso(phi.map(), a, a));
      const CornerQuadruple back = Decompose(s, s, phi);
      EXPECT_EQ(back.rho, q.rho);
      EXPECT_EQ(back.phibar, q.phibar);
      EXPECT_EQ(back.chi, q.chi);
      EXPECT_EQ(back.m, q.m);
    }
  }
}

TEST(FunctorialityTest, ComposeAndInvertStayIsomorphisms) {
  for (const char* name : {"t2z4", "t3f2", "f4"}) {
    const Ring a = Fixture(name);
    const auto isos = AllIsomorphisms(a, a);
    for (const auto& f : isos) {
      EXPECT_TRUE(VerifyRingIso(Invert(f).map(), a, a));
      for (const auto& g : isos) {
        EXPECT_TRUE(VerifyRingIso(Compose(f, g).map(), a, a));
      }
    }
  }
}

TEST(CompletenessTest, EnumerationMatchesOracle) {
  std::mt19937 rng(3);
  const auto names = testing::SmallFixtures();
  for (const std::string& x : names) {
    for (const std::string& y : names) {
      const Ring a = Fixture(x);
      Ring b = Fixture(y);
      if (a.size() != b.size()) continue;
      std::vector<std::size_t> perm(b.rank());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      b = PermuteGenerators(b, perm);
      std::vector<std::vector<Element>> engine;
      for (const auto& f : AllIsomorphisms(a, b)) engine.push_back(f.images());
      EXPECT_EQ(engine, oracle::BruteIsos(a, b)) << x << " -> " << y;
    }
  }
}

}  // namespace
}  // namespace peirce
