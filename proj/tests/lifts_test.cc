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

#include <gtest/gtest.h>

#include "splitmat/census.h"
#include "splitmat/errors.h"
#include "splitmat/lifts.h"
#include "splitmat/split_analysis.h"
#include "test_support.h"

namespace splitmat {
namespace {

std::vector<Rational> Ints(std::initializer_list<int> values) {
  return std::vector<Rational>(values.begin(), values.end());
}

// Bases of the (d+1)-sets whose closed-form rank is full.
template <typename RankFn>
Matroid FromRankFormula(int n, int d, RankFn rank) {
  std::vector<ElementSet> bases;
  for (ElementSet s : testing::AllSubsetsOfSize(n, d)) {
    if (rank(s) == d) bases.push_back(s);
  }
  return Matroid::FromBases(n, d, bases);
}

std::vector<Matroid> ConnectedSplitCorpus() {
  std::vector<Matroid> out;
  for (auto [d, n] : std::vector<std::pair<int, int>>{
           {1, 2}, {1, 3}, {2, 3}, {2, 4}, {2, 5}, {3, 5}, {2, 6}, {3, 6}, {4, 6}}) {
    for (const Matroid& m : EnumerateMatroids(d, n)) {
      if (m.n() >= 2 && IsConnected(m) && IsSplit(m)) out.push_back(m);
    }
  }
  return out;
}

TEST(CorankVectorTest, M5Values) {
  const Matroid m = testing::M5();
  EXPECT_EQ(CorankVector(m, 2).heights, Ints({0, 0, 0, 0, 0, 1}));
  EXPECT_EQ(CorankVector(m, 3).heights, Ints({0, 0, 0, 0}));
  EXPECT_EQ(CorankVector(m, 1).heights, Ints({1, 1, 1, 1}));
  EXPECT_EQ(CorankVector(Matroid::Uniform(3, 6)).heights,
            std::vector<Rational>(20, Rational(0)));
  EXPECT_THROW(CorankVector(m, 5), InvalidParams);
}

TEST(SeriesFreeLiftTest, LiftOfU12) {
  const Matroid lift = SeriesFreeLift(Matroid::Uniform(1, 2));
  EXPECT_EQ(lift.d(), 2);
  EXPECT_EQ(lift.n(), 4);
  EXPECT_EQ(lift, testing::FromNonBases(2, 4, {"12"}));
}

TEST(SeriesFreeLiftTest, DoubleLiftIsTheNestedNonSplitMatroid) {
  const Matroid twice = SeriesFreeLift(SeriesFreeLift(Matroid::Uniform(1, 2)));
  EXPECT_TRUE(testing::OracleIsomorphic(twice, testing::NestedNonSplitMatrix()));
  EXPECT_FALSE(IsSplit(twice));
  EXPECT_TRUE(IsNested(twice));
}

TEST(SeriesFreeLiftTest, SplitFlacetsGainTheGroundSet) {
  const Matroid s = testing::Snowflake();
  std::vector<ElementSet> expected;
  for (const Flat& f : SplitFlacets(s)) expected.push_back(f.elements);
  expected.push_back(s.ground_set());
  std::vector<ElementSet> actual;
  for (const Flat& f : SplitFlacets(SeriesFreeLift(s))) actual.push_back(f.elements);
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  EXPECT_EQ(actual, expected);
}

TEST(SeriesFreeLiftTest, RequiresConnected) {
  EXPECT_THROW(SeriesFreeLift(testing::FromBasesText(2, 4, {"12", "13"})), NotConnected);
  EXPECT_THROW(ParallelCofreeLift(testing::FromBasesText(2, 4, {"12", "13"})),
               NotConnected);
  EXPECT_THROW(SeriesFreeLift(Matroid::Uniform(1, 1)), InvalidParams);
}

// Basis rules and the closed rank formulas describe the same matroids, on
// every subset, for every connected split matroid with n <= 6.
TEST(LiftPropertyTest, RankFormulasMatchConstructions) {
  for (const Matroid& m : ConnectedSplitCorpus()) {
    const Matroid lift = SeriesFreeLift(m);
    const Matroid colift = ParallelCofreeLift(m);
    for (ElementSet s = 0; s <= lift.ground_set(); ++s) {
      ASSERT_EQ(lift.Rank(s), SeriesFreeLiftRank(m, s)) << m.ToString();
      ASSERT_EQ(colift.Rank(s), ParallelCofreeLiftRank(m, s)) << m.ToString();
    }
  }
}

TEST(LiftPropertyTest, TwoSidedLiftIdentity) {
  for (const Matroid& m : ConnectedSplitCorpus()) {
    const LiftVector lift = CorankVector(SeriesFreeLift(m));
    const LiftVector colift = CorankVector(ParallelCofreeLift(m));
    const ElementSet fs = Singleton(m.n() + 1) | Singleton(m.n() + 2);
    const auto& subsets = CodecFor(m.n() + 2, m.d() + 1).subsets();
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      ASSERT_EQ(colift.heights[i] + 1,
                lift.heights[i] + Cardinality(subsets[i] & fs));
    }
  }
}

TEST(LiftTest, CommonBasesFormDirectSumWithU12) {
  for (const Matroid& m : {testing::Snowflake(), Matroid::Uniform(2, 4),
                           Matroid::Uniform(1, 2)}) {
    const Matroid lift = SeriesFreeLift(m);
    const Matroid colift = ParallelCofreeLift(m);
    std::vector<ElementSet> common;
    for (ElementSet b : lift.bases()) {
      if (colift.IsBasis(b)) common.push_back(b);
    }
    EXPECT_EQ(Matroid::FromBases(m.n() + 2, m.d() + 1, common),
              DirectSum(m, Matroid::Uniform(1, 2)));
  }
}

TEST(LiftTest, ParallelCofreeIsDualOfLiftOfDual) {
  const Matroid s = testing::Snowflake();
  EXPECT_EQ(ParallelCofreeLift(s), Dual(SeriesFreeLift(Dual(s))));
}

TEST(NestedMatroidTest, SnowflakeCyclicFlats) {
  const Matroid s = testing::Snowflake();
  const Matroid nf = NestedMatroid(s, Flat{MakeSet({1, 2}), 1});
  EXPECT_EQ(CyclicFlats(nf),
            (std::vector<Flat>{{0, 0},
                               {MakeSet({3, 4, 5, 6}), 1},
                               {MakeSet({3, 4, 5, 6, 7, 8}), 2},
                               {FullSet(8), 3}}));
  std::vector<ElementSet> split;
  for (const Flat& f : SplitFlacets(nf)) split.push_back(f.elements);
  std::sort(split.begin(), split.end());
  EXPECT_EQ(split, (std::vector<ElementSet>{MakeSet({3, 4, 5, 6}),
                                            MakeSet({3, 4, 5, 6, 7, 8})}));
  EXPECT_FALSE(IsSplit(nf));
  EXPECT_TRUE(IsNested(nf));
}

TEST(NestedMatroidTest, Errors) {
  EXPECT_THROW(NestedMatroid(testing::Snowflake(), Flat{MakeSet({1, 3}), 2}),
               NotASplitFlacet);
  const Matroid ex = testing::CrossingFlacets();
  EXPECT_THROW(NestedMatroid(ex, SplitFlacets(ex).front()), NotSplit);
}

TEST(NestedMatroidPropertyTest, FormulaMatchesCyclicFlatChain) {
  for (const Matroid& m : ConnectedSplitCorpus()) {
    for (const Flat& f : SplitFlacets(m)) {
      const ElementSet rest = m.ground_set() & ~f.elements;
      const ElementSet fs = Singleton(m.n() + 1) | Singleton(m.n() + 2);
      const std::vector<Flat> chain = {{0, 0},
                                       {rest, m.d() - f.rank},
                                       {rest | fs, m.d() + 1 - f.rank},
                                       {FullSet(m.n() + 2), m.d() + 1}};
      const Matroid from_chain = FromRankFormula(
          m.n() + 2, m.d() + 1, [&](ElementSet s) { return RankFromCyclicFlats(chain, s); });
      const Matroid nf = NestedMatroid(m, f);
      ASSERT_EQ(nf, from_chain) << m.ToString();
      ASSERT_EQ(CyclicFlats(nf), chain) << m.ToString();
    }
  }
}

TEST(CorankInequalityTest, SnowflakeEqualityOnBases) {
  const Matroid s = testing::Snowflake();
  const Flat f{MakeSet({1, 2}), 1};
  const Matroid nf = NestedMatroid(s, f);
  std::size_t strict = 0;
  for (ElementSet t : CodecFor(8, 3).subsets()) {
    const CorankComparison c = CompareCoranks(s, f, t);
    ASSERT_NE(c, CorankComparison::kViolated);
    if (nf.IsBasis(t)) ASSERT_EQ(c, CorankComparison::kEquality);
    strict += c == CorankComparison::kStrict;
  }
  EXPECT_GT(strict, 0u);
  // One element of F together with f and s is a basis of N_F.
  const ElementSet t = MakeSet({1, 7, 8});
  ASSERT_TRUE(nf.IsBasis(t));
  EXPECT_EQ(CompareCoranks(s, f, t), CorankComparison::kEquality);
}

TEST(CorankInequalityPropertyTest, NeverViolated) {
  for (const Matroid& m : ConnectedSplitCorpus()) {
    for (const Flat& f : SplitFlacets(m)) {
      const Matroid nf = NestedMatroid(m, f);
      for (ElementSet t : CodecFor(m.n() + 2, m.d() + 1).subsets()) {
        const CorankComparison c = CompareCoranks(m, f, t);
        ASSERT_NE(c, CorankComparison::kViolated) << m.ToString();
        if (nf.IsBasis(t)) ASSERT_EQ(c, CorankComparison::kEquality);
      }
    }
  }
}

TEST(PredictedRayCellsTest, Counts) {
  EXPECT_EQ(PredictedRayCells(testing::Snowflake()).size(), 5u);
  EXPECT_EQ(PredictedRayCells(Matroid::Uniform(1, 2)).size(), 2u);
  EXPECT_THROW(PredictedRayCells(testing::CrossingFlacets()), NotSplit);
  for (const Matroid& cell : PredictedRayCells(testing::Snowflake())) {
    EXPECT_TRUE(IsConnected(cell));
  }
}

}  // namespace
}  // namespace splitmat
