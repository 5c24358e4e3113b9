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

#include <gtest/gtest.h>

#include "testing.h"

namespace peirce::oracle {
namespace {

using testing::E;

TEST(OracleTest, Semicentral) {
  const Ring t = UpperTriangular(2, 2);
  EXPECT_TRUE(BruteSemicentral(t, E({1, 0, 0})));
  EXPECT_FALSE(BruteSemicentral(t, E({0, 0, 1})));
  EXPECT_TRUE(BruteSemicentral(t, t.one()));
  EXPECT_EQ(BruteSemicentralIdempotents(t),
            (std::vector<Element>{E({0, 0, 0}), E({1, 0, 0}), E({1, 0, 1}),
                                  E({1, 1, 0})}));
}

TEST(OracleTest, Isomorphisms) {
  const Ring z6 = Cyclic(6);
  EXPECT_EQ(BruteIsos(z6, z6), (std::vector<std::vector<Element>>{{E({1})}}));
  EXPECT_EQ(BruteIsos(UpperTriangular(2, 2), UpperTriangular(2, 2)).size(), 2u);
  EXPECT_TRUE(BruteIsos(Cyclic(2), Cyclic(3)).empty());
}

TEST(OracleTest, TriangularCheck) {
  const Ring t = UpperTriangular(2, 2);
  EXPECT_TRUE(BruteTriangularCheck(t, std::vector{E({1, 0, 0}), E({0, 0, 1})}));
  EXPECT_FALSE(BruteTriangularCheck(t, std::vector{E({0, 0, 1}), E({1, 0, 0})}));
  EXPECT_TRUE(BruteTriangularCheck(Cyclic(2), std::vector{E({1})}));
  EXPECT_TRUE(BruteTriangularCheck(FiniteField(2, {1, 1}), std::vector{E({1, 0})}));
}

TEST(OracleTest, CapsAreHardErrors) {
  const Ring big = UpperTriangular(4, 2);  // 1024 elements: at the cap
  EXPECT_NO_THROW(BruteElements(big));
  try {
    BruteElements(DirectProduct(big, Cyclic(2)));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCapExceeded);
  }
  try {
    BruteIsos(Fixture("t3f2"), Fixture("t3f2"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kCapExceeded);
  }
}

}  // namespace
}  // namespace peirce::oracle
