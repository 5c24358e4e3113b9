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

#include "peirce/automorphisms.h"

#include <map>

#include <gtest/gtest.h>

#include "peirce/oracle.h"
#include "testing.h"

namespace peirce {
namespace {

TEST(AutGroupTest, KnownOrders) {
  const std::map<std::string, std::uint64_t> expected = {
      {"z6", 1}, {"f2", 1}, {"f4", 2}, {"z4", 1}, {"t2f2", 2},
      {"t2z4", 8}, {"t3f2", 8}, {"z2xz3", 1}, {"three_block", 4}};
  for (const auto& [name, order] : expected) {
    const AutomorphismGroup g = AutGroup(Fixture(name));
    EXPECT_EQ(g.order, order) << name;
    EXPECT_EQ(g.elements.size(), order);
    EXPECT_EQ(AutOrder(Fixture(name)), order) << name;
  }
  EXPECT_EQ(AutOrder(Ring::Validate({})), 1u);
}

TEST(AutGroupTest, ElementsAreSortedAndDistinct) {
  const AutomorphismGroup g = AutGroup(Fixture("t2z4"));
  for (std::size_t i = 1; i < g.elements.size(); ++i) {
    EXPECT_LT(g.elements[i - 1].map(), g.elements[i].map());
  }
}

TEST(AutGroupTest, MatchesOracleOnSmallRings) {
  for (const std::string& name : testing::SmallFixtures()) {
    const Ring a = Fixture(name);
    std::vector<std::vector<Element>> engine;
    for (const auto& f : AutGroup(a).elements) engine.push_back(f.images());
    EXPECT_EQ(engine, oracle::BruteIsos(a, a)) << name;
  }
}

TEST(AutGroupTest, ContainsEveryInnerAutomorphism) {
  for (const std::string& name : FixtureNames()) {
    const Ring a = Fixture(name);
    const AutomorphismGroup g = AutGroup(a);
    const TriangularSequence seq = CompleteTriangulatingSet(a);
    for (const Element& u : Units(a)) {
      const RingIsomorphism inner = InnerAutomorphism(a, u);
      EXPECT_NE(std::find(g.elements.begin(), g.elements.end(), inner),
                g.elements.end())
          << name << " " << ToString(u);
      EXPECT_EQ(IsoSynthesize(seq, seq, IsoDecompose(inner, seq, seq)), inner);
    }
  }
}

TEST(AutGroupTest, OrderIsAnIsomorphismInvariant) {
  for (const std::string& name : FixtureNames()) {
    const Ring a = Fixture(name);
    std::vector<std::size_t> perm(a.rank());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = perm.size() - 1 - i;
    const Ring b = PermuteGenerators(a, perm);
    ASSERT_TRUE(IsoSearch(a, b).has_value());
    EXPECT_EQ(AutOrder(a), AutOrder(b)) << name;
  }
  EXPECT_EQ(AutOrder(Fixture("z6")), AutOrder(Fixture("z2xz3")));
}

}  // namespace
}  // namespace peirce
