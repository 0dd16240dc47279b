// Copyright 2026 The Authors.
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

#include <random>

#include <gtest/gtest.h>

#include "splitmat/census.h"
#include "splitmat/errors.h"
#include "splitmat/matroid.h"
#include "test_support.h"

namespace splitmat {
namespace {

using testing::FromBasesText;
using testing::FromNonBases;

TEST(SubsetCodecTest, MatchesBruteForceLexOrder) {
  for (int n = 1; n <= 8; ++n) {
    for (int k = 0; k <= n; ++k) {
      const SubsetCodec codec(n, k);
      const std::vector<ElementSet> expected = testing::AllSubsetsOfSize(n, k);
      ASSERT_EQ(codec.subsets(), expected) << n << " " << k;
      for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_EQ(codec.index(expected[i]), i);
      }
    }
  }
}

TEST(SubsetCodecTest, ColexIsNumericOrder) {
  const std::vector<ElementSet> colex = ColexSubsets(5, 2);
  ASSERT_EQ(colex.size(), 10u);
  EXPECT_TRUE(std::is_sorted(colex.begin(), colex.end()));
  EXPECT_EQ(colex.front(), MakeSet({1, 2}));
  EXPECT_EQ(colex[1], MakeSet({1, 3}));
  EXPECT_EQ(colex[2], MakeSet({2, 3}));
}

TEST(SubsetTest, CompactRoundTrip) {
  EXPECT_EQ(SetToCompact(MakeSet({1, 2, 5})), "125");
  EXPECT_EQ(SetToCompact(MakeSet({1, 10, 11})), "1.10.11");
  EXPECT_EQ(ParseCompactSet("125"), MakeSet({1, 2, 5}));
  EXPECT_EQ(ParseCompactSet("1.10.11"), MakeSet({1, 10, 11}));
  EXPECT_EQ(ParseCompactSet("{3,4}"), MakeSet({3, 4}));
  EXPECT_EQ(SetToString(MakeSet({3, 4})), "{3,4}");
  EXPECT_THROW(ParseCompactSet("1x"), FormatError);
  EXPECT_THROW(ParseCompactSet("10"), FormatError);
}

TEST(BitmapTest, OrderIsLexicographicOnBits) {
  Bitmap a(70);
  Bitmap b(70);
  b.set(69);
  EXPECT_LT(a, b);
  a.set(0);
  EXPECT_LT(b, a);
  EXPECT_EQ(a.count(), 1u);
  EXPECT_EQ(Bitmap(3).ToString(), "000");
}

TEST(MatroidTest, RejectsInvalidInput) {
  EXPECT_THROW(Matroid::FromBases(4, 2, {}), EmptyBases);
  EXPECT_THROW(Matroid::FromBases(4, 2, {MakeSet({1, 2, 3})}), CardinalityMismatch);
  EXPECT_THROW(FromBasesText(2, 4, {"12", "34"}), ExchangeViolation);
  EXPECT_THROW(Matroid::Uniform(2, 0), InvalidParams);
  EXPECT_THROW(Matroid::Uniform(3, 2), InvalidParams);
  EXPECT_THROW(Matroid::Uniform(1, kMaxKernelElements + 1), InvalidParams);
}

TEST(MatroidTest, ExchangeWitnessNamesThePair) {
  const std::string witness =
      FindExchangeViolation(4, 2, FromNonBases(2, 4, {}).bitmap() /*valid*/);
  EXPECT_TRUE(witness.empty());
  Bitmap bad(6);
  bad.set(CodecFor(4, 2).index(MakeSet({1, 2})));
  bad.set(CodecFor(4, 2).index(MakeSet({3, 4})));
  EXPECT_EQ(FindExchangeViolation(4, 2, bad), "A={1,2} B={3,4} a=1");
}

TEST(MatroidTest, M5HasFiveBases) {
  const Matroid m = testing::M5();
  EXPECT_EQ(m.num_bases(), 5u);
  EXPECT_EQ(m.bases(), (std::vector<ElementSet>{MakeSet({1, 2}), MakeSet({1, 3}),
                                                MakeSet({1, 4}), MakeSet({2, 3}),
                                                MakeSet({2, 4})}));
  EXPECT_EQ(m.Rank(MakeSet({3, 4})), 1);
}

// Rank table, basis-intersection rank and an oracle written here agree on
// every subset of every enumerated matroid with n <= 5.
TEST(MatroidPropertyTest, RankRoutesAgree) {
  for (int n = 1; n <= 5; ++n) {
    for (int d = 0; d <= n; ++d) {
      for (const Matroid& m : EnumerateMatroids(d, n)) {
        for (ElementSet s = 0; s <= m.ground_set(); ++s) {
          const int oracle = testing::OracleRank(m.bases(), s);
          ASSERT_EQ(m.Rank(s), oracle) << m.ToString() << " S=" << SetToString(s);
          ASSERT_EQ(m.RankByBasisIntersection(s), oracle);
        }
      }
    }
  }
}

TEST(MatroidPropertyTest, RankAxioms) {
  for (const Matroid& m : EnumerateMatroids(3, 6)) {
    for (ElementSet s = 0; s <= m.ground_set(); ++s) {
      ASSERT_LE(m.Rank(s), Cardinality(s));
      for (int e : Elements(m.ground_set() & ~s)) {
        const int grown = m.Rank(s | Singleton(e));
        ASSERT_TRUE(grown == m.Rank(s) || grown == m.Rank(s) + 1);
      }
    }
    for (ElementSet a = 0; a <= m.ground_set(); a += 7) {
      for (ElementSet b = 0; b <= m.ground_set(); b += 5) {
        ASSERT_LE(m.Rank(a | b) + m.Rank(a & b), m.Rank(a) + m.Rank(b));
      }
    }
  }
}

TEST(MatroidTest, FlatsOfSnowflake) {
  const Matroid m = testing::Snowflake();
  // Rank-1 flats: the three parallel classes.
  std::vector<ElementSet> rank_one;
  for (const Flat& f : Flats(m)) {
    if (f.rank == 1) rank_one.push_back(f.elements);
    EXPECT_TRUE(IsFlat(m, f.elements));
    EXPECT_EQ(Closure(m, f.elements), f.elements);
  }
  EXPECT_EQ(rank_one, (std::vector<ElementSet>{MakeSet({1, 2}), MakeSet({3, 4}),
                                               MakeSet({5, 6})}));
  const std::vector<Flat> cyclic = CyclicFlats(m);
  ASSERT_EQ(cyclic.size(), 5u);
  EXPECT_EQ(cyclic.front(), (Flat{0, 0}));
  EXPECT_EQ(cyclic.back(), (Flat{m.ground_set(), 2}));
}

TEST(MatroidTest, CircuitsAreMinimalDependent) {
  const Matroid m = testing::CrossingFlacets();
  for (ElementSet c : Circuits(m)) {
    EXPECT_FALSE(m.IsIndependent(c));
    for (int e : Elements(c)) EXPECT_TRUE(m.IsIndependent(c & ~Singleton(e)));
  }
}

TEST(MatroidTest, LoopsAndColoops) {
  const Matroid m = FromBasesText(2, 4, {"12", "13"});
  EXPECT_EQ(Loops(m), MakeSet({4}));
  EXPECT_EQ(Coloops(m), MakeSet({1}));
  EXPECT_FALSE(IsConnected(m));
  EXPECT_EQ(ConnectedComponents(m),
            (std::vector<ElementSet>{MakeSet({1}), MakeSet({2, 3}), MakeSet({4})}));
}

TEST(MatroidTest, UniformIsRecognized) {
  EXPECT_TRUE(IsUniform(Matroid::Uniform(2, 5)));
  EXPECT_FALSE(IsUniform(testing::M5()));
  EXPECT_TRUE(IsConnected(Matroid::Uniform(2, 5)));
  EXPECT_FALSE(IsConnected(Matroid::Uniform(0, 2)));
}

TEST(MatroidPropertyTest, DualAndMinorIdentities) {
  for (const Matroid& m : EnumerateMatroids(3, 6)) {
    const Matroid dual = Dual(m);
    ASSERT_EQ(Dual(dual), m);
    for (ElementSet s = 0; s <= m.ground_set(); ++s) {
      // r*(S) = |S| + r(E - S) - r(E).
      ASSERT_EQ(dual.Rank(s),
                Cardinality(s) + m.Rank(m.ground_set() & ~s) - m.d());
    }
    for (int e = 1; e <= m.n(); ++e) {
      const ElementSet x = Singleton(e);
      // (M \ e)* = M* / e.
      ASSERT_EQ(Dual(Deletion(m, x)), Contraction(dual, x));
    }
  }
}

TEST(MatroidTest, ContractionRanks) {
  const Matroid m = testing::Snowflake();
  const Matroid c = Contraction(m, MakeSet({1, 2}));
  EXPECT_EQ(c.n(), 4);
  EXPECT_EQ(c.d(), 1);
  EXPECT_TRUE(IsUniform(c));
  const Matroid r = Restriction(m, MakeSet({1, 2}));
  EXPECT_EQ(r.d(), 1);
  EXPECT_TRUE(IsUniform(r));
}

TEST(MatroidTest, DirectSumShiftsSecondSummand) {
  const Matroid sum = DirectSum(Matroid::Uniform(1, 2), Matroid::Uniform(1, 2));
  EXPECT_EQ(sum, FromBasesText(2, 4, {"13", "14", "23", "24"}));
  EXPECT_EQ(ConnectedComponents(sum).size(), 2u);
}

TEST(CanonicalFormTest, InvariantUnderRandomRelabeling) {
  std::mt19937 rng(7);
  for (const Matroid& m : EnumerateMatroids(3, 6)) {
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 1);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Matroid relabeled = Relabel(m, perm);
    ASSERT_EQ(CanonicalForm(relabeled), CanonicalForm(m));
    ASSERT_TRUE(testing::OracleIsomorphic(m, relabeled));
  }
}

TEST(CanonicalFormTest, AgreesWithPermutationOracle) {
  const std::vector<Matroid> all = EnumerateMatroids(2, 5);
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = 0; j < all.size(); ++j) {
      ASSERT_EQ(IsIsomorphic(all[i], all[j]),
                testing::OracleIsomorphic(all[i], all[j]));
    }
  }
}

TEST(CanonicalFormTest, GuardedAboveLimit) {
  EXPECT_THROW(CanonicalForm(Matroid::Uniform(2, 10)), LimitExceeded);
  EXPECT_NO_THROW(CanonicalForm(Matroid::Uniform(2, 10), 10));
}

}  // namespace
}  // namespace splitmat
