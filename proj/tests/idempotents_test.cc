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

#include "peirce/idempotents.h"

#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "peirce/oracle.h"
#include "peirce/triangular.h"
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

TEST(EnumerateIdempotentsTest, Examples) {
  EXPECT_EQ(EnumerateIdempotents(Cyclic(6)),
            (std::vector<Element>{E({0}), E({1}), E({3}), E({4})}));
  EXPECT_EQ(EnumerateIdempotents(Cyclic(2)),
            (std::vector<Element>{E({0}), E({1})}));
  // 0, E22, E12+E22, E11, E11+E12, 1 in lexicographic order.
  EXPECT_EQ(EnumerateIdempotents(UpperTriangular(2, 2)),
            (std::vector<Element>{E({0, 0, 0}), E({0, 0, 1}), E({0, 1, 1}),
                                  E({1, 0, 0}), E({1, 0, 1}), E({1, 1, 0})}));
}

TEST(SemicentralTest, Examples) {
  const Ring t = UpperTriangular(2, 2);
  EXPECT_TRUE(IsSemicentral(t, E({1, 0, 0})));
  EXPECT_FALSE(IsSemicentral(t, E({0, 0, 1})));
  EXPECT_TRUE(IsSemicentral(t, E({1, 1, 0})));
  for (const std::string& name : FixtureNames()) {
    const Ring a = Fixture(name);
    EXPECT_TRUE(IsSemicentral(a, a.zero()));
    EXPECT_TRUE(IsSemicentral(a, a.one()));
  }
  EXPECT_EQ(KindOf([] { IsSemicentral(Cyclic(6), E({2})); }),
            ErrorKind::kNotIdempotent);
}

TEST(SemicentralTest, ReducedExamples) {
  EXPECT_TRUE(IsSemicentralReduced(Cyclic(2)));
  EXPECT_TRUE(IsSemicentralReduced(Cyclic(4)));
  EXPECT_TRUE(IsSemicentralReduced(FiniteField(2, {1, 1})));
  EXPECT_FALSE(IsSemicentralReduced(Cyclic(6)));
  EXPECT_FALSE(IsSemicentralReduced(UpperTriangular(2, 2)));
}

TEST(SemicentralTest, AgreesWithDefinitionOnEveryFixture) {
  for (const std::string& name : FixtureNames()) {
    const Ring a = Fixture(name);
    for (const Element& e : EnumerateIdempotents(a)) {
      EXPECT_EQ(IsSemicentral(a, e), oracle::BruteSemicentral(a, e))
          << name << " " << ToString(e);
    }
  }
}

TEST(CompleteTriangulatingSetTest, Examples) {
  EXPECT_EQ(CompleteTriangulatingSet(Cyclic(6)).idempotents(),
            (std::vector<Element>{E({3}), E({4})}));
  EXPECT_EQ(CompleteTriangulatingSet(Cyclic(2)).idempotents(),
            (std::vector<Element>{E({1})}));
  EXPECT_EQ(CompleteTriangulatingSet(UpperTriangular(2, 2)).idempotents(),
            (std::vector<Element>{E({1, 0, 0}), E({0, 0, 1})}));
  EXPECT_EQ(CompleteTriangulatingSet(UpperTriangular(3, 2)).length(), 3u);
}

TEST(CompleteTriangulatingSetTest, ZeroRingHasEmptySequence) {
  EXPECT_EQ(CompleteTriangulatingSet(Ring::Validate({})).length(), 0u);
}

TEST(CompleteTriangulatingSetTest, OutputIsValidEverywhere) {
  for (const std::string& name : FixtureNames()) {
    const Ring a = Fixture(name);
    const TriangularSequence seq = CompleteTriangulatingSet(a);
    EXPECT_TRUE(IsStronglyTriangular(a, seq.idempotents())) << name;
    for (std::size_t i = 0; i < seq.length(); ++i) {
      EXPECT_TRUE(IsSemicentralReduced(seq.corner(i).presentation));
      EXPECT_EQ(seq.tail(i).idem, seq.tail_unit(i));
    }
  }
}

TEST(CompleteTriangulatingSetTest, LengthIsPresentationIndependent) {
  std::mt19937 rng(7);
  for (const std::string& name : FixtureNames()) {
    const Ring a = Fixture(name);
    const std::size_t m = CompleteTriangulatingSet(a).length();
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<std::size_t> perm(a.rank());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      EXPECT_EQ(CompleteTriangulatingSet(PermuteGenerators(a, perm)).length(), m)
          << name;
    }
  }
}

TEST(TriangularSequenceTest, RejectsInvalidSequences) {
  const Ring t = UpperTriangular(2, 2);
  EXPECT_EQ(KindOf([&] { TriangularSequence::Make(t, {E({0, 0, 1}), E({1, 0, 0})}); }),
            ErrorKind::kInvalidSequence);
  EXPECT_EQ(KindOf([&] { TriangularSequence::Make(t, {t.one()}); }),
            ErrorKind::kInvalidSequence);
}

TEST(LocateReducedTest, Examples) {
  const Ring t = UpperTriangular(2, 2);
  const TriangularSequence seq = CompleteTriangulatingSet(t);
  Location loc = LocateReduced(t, seq, E({1, 1, 0}));
  EXPECT_EQ(loc.index, 0u);
  EXPECT_EQ(loc.offset, E({0, 1, 0}));
  loc = LocateReduced(t, seq, E({1, 0, 0}));
  EXPECT_EQ(loc.index, 0u);
  EXPECT_EQ(loc.offset, t.zero());

  const Ring z6 = Cyclic(6);
  loc = LocateReduced(z6, CompleteTriangulatingSet(z6), E({4}));
  EXPECT_EQ(loc.index, 1u);
  EXPECT_EQ(loc.offset, E({0}));
}

TEST(LocateReducedTest, RejectsUnsuitableIdempotents) {
  const Ring t = UpperTriangular(2, 2);
  const TriangularSequence seq = CompleteTriangulatingSet(t);
  EXPECT_EQ(KindOf([&] { LocateReduced(t, seq, E({0, 0, 1})); }),
            ErrorKind::kNotSemicentralReduced);
  EXPECT_EQ(KindOf([&] { LocateReduced(t, seq, t.one()); }),
            ErrorKind::kNotSemicentralReduced);
  EXPECT_EQ(KindOf([&] { LocateReduced(t, seq, t.zero()); }),
            ErrorKind::kNotSemicentralReduced);
}

// Exactly one j has f_j f f_j != 0; for it f_j f f_j = f_j, f - f_j lies in
// the truncated row and the column above f_j vanishes.
TEST(LocateReducedTest, UniqueLocationOnEveryFixture) {
  for (const std::string& name : FixtureNames()) {
    const Ring b = Fixture(name);
    const TriangularSequence seq = CompleteTriangulatingSet(b);
    for (const Element& f : oracle::BruteReducedSemicentralIdempotents(b)) {
      std::size_t hits = 0;
      for (std::size_t j = 0; j < seq.length(); ++j) {
        hits += !b.IsZero(b.Mul(seq[j], f, seq[j]));
      }
      EXPECT_EQ(hits, 1u) << name << " " << ToString(f);
      const Location loc = LocateReduced(b, seq, f);
      EXPECT_EQ(b.Add(seq[loc.index], loc.offset), f);
      EXPECT_TRUE(PeirceComponent(b, seq[loc.index], seq.tail_unit(loc.index + 1))
                      .Contains(loc.offset));
      for (std::size_t i = 0; i < loc.index; ++i) {
        EXPECT_TRUE(PeirceComponent(b, seq[i], seq[loc.index]).IsZero());
      }
    }
  }
}

TEST(ExtendSemicentralTest, Examples) {
  const Ring z6 = Cyclic(6);
  Extension ext = ExtendSemicentral(z6, E({3}));
  EXPECT_EQ(ext.prefix_length, 1u);
  EXPECT_EQ(ext.sequence.idempotents(), (std::vector<Element>{E({3}), E({4})}));

  const Ring t = UpperTriangular(2, 2);
  ext = ExtendSemicentral(t, t.one());
  EXPECT_EQ(ext.prefix_length, 2u);
  EXPECT_EQ(ext.sequence.idempotents(), CompleteTriangulatingSet(t).idempotents());

  ext = ExtendSemicentral(t, E({1, 1, 0}));
  EXPECT_EQ(ext.prefix_length, 1u);
  EXPECT_EQ(ext.sequence.idempotents(),
            (std::vector<Element>{E({1, 1, 0}), E({0, 1, 1})}));

  EXPECT_EQ(KindOf([&] { ExtendSemicentral(t, E({0, 0, 1})); }),
            ErrorKind::kNotSemicentral);
}

TEST(ExtendSemicentralTest, PrefixSumsTelescopeOnEveryFixture) {
  for (const std::string& name : FixtureNames()) {
    const Ring a = Fixture(name);
    for (const Element& e : oracle::BruteSemicentralIdempotents(a)) {
      const Extension ext = ExtendSemicentral(a, e);
      Element sum = a.zero();
      for (std::size_t i = 0; i < ext.prefix_length; ++i) {
        sum = a.Add(sum, ext.sequence[i]);
      }
      EXPECT_EQ(sum, e) << name << " " << ToString(e);
      EXPECT_TRUE(IsStronglyTriangular(a, ext.sequence.idempotents()));
      EXPECT_EQ(ext.prefix_length,
                CompleteTriangulatingSet(MakeCornerRing(a, e).presentation).length());
    }
  }
}

}  // namespace
}  // namespace peirce
