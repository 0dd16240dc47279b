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

#include "splitmat/errors.h"
#include "splitmat/exact_lp.h"
#include "splitmat/linear_algebra.h"
#include "splitmat/realization.h"
#include "test_support.h"

namespace splitmat {
namespace {

TEST(RationalTest, ParseAndPrint) {
  EXPECT_EQ(ParseRational("3"), Rational(3));
  EXPECT_EQ(ParseRational("-7/2"), Rational(-7, 2));
  EXPECT_EQ(ParseRational("0.25"), Rational(1, 4));
  EXPECT_EQ(ParseRational("010"), Rational(10));
  EXPECT_EQ(ParseRational("08/04"), Rational(2));
  EXPECT_EQ(RationalToString(Rational(6, 4)), "3/2");
  EXPECT_EQ(RationalToString(Rational(-2)), "-2");
  EXPECT_THROW(ParseRational("1/0"), FormatError);
  EXPECT_THROW(ParseRational("abc"), FormatError);
}

TEST(LinearAlgebraTest, RankNullSpaceDeterminant) {
  DenseMatrix<Rational> a(2, 3);
  a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 3;
  a(1, 0) = 2; a(1, 1) = 4; a(1, 2) = 6;
  EXPECT_EQ(MatrixRank(a), 1u);
  const auto kernel = NullSpace(a);
  ASSERT_EQ(kernel.size(), 2u);
  for (const auto& v : kernel) {
    EXPECT_EQ(v[0] + 2 * v[1] + 3 * v[2], 0);
  }
  DenseMatrix<Rational> b(2, 2);
  b(0, 0) = 0; b(0, 1) = 1;
  b(1, 0) = 1; b(1, 1) = 0;
  EXPECT_EQ(Determinant(b), -1);
}

TEST(ExactLpTest, OptimalInfeasibleUnbounded) {
  // max x1 + x2  s.t. x1 + 2 x2 + s = 4, x >= 0.
  DenseMatrix<Rational> a(1, 3);
  a(0, 0) = 1; a(0, 1) = 2; a(0, 2) = 1;
  LpResult r = MaximizeStandardForm(a, {Rational(4)}, {1, 1, 0});
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.value, 4);

  // x1 + x2 = -1 has no nonnegative solution.
  DenseMatrix<Rational> b(1, 2);
  b(0, 0) = 1; b(0, 1) = 1;
  EXPECT_EQ(MaximizeStandardForm(b, {Rational(-1)}, {1, 0}).status,
            LpStatus::kInfeasible);

  // x1 - x2 = 0 with max x1 is unbounded.
  DenseMatrix<Rational> c(1, 2);
  c(0, 0) = 1; c(0, 1) = -1;
  EXPECT_EQ(MaximizeStandardForm(c, {Rational(0)}, {1, 0}).status,
            LpStatus::kUnbounded);
}

TEST(ExactLpTest, RedundantRowsAreHandled) {
  DenseMatrix<Rational> a(2, 2);
  a(0, 0) = 1; a(0, 1) = 1;
  a(1, 0) = 2; a(1, 1) = 2;
  const LpResult r = MaximizeStandardForm(a, {Rational(3), Rational(6)}, {1, 0});
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.x[0] + r.x[1], 3);
}

TEST(RealizationTest, NestedNonSplitMatrixBases) {
  const Matroid m = testing::NestedNonSplitMatrix();
  EXPECT_EQ(m.d(), 3);
  EXPECT_EQ(m.n(), 6);
  // Columns 1 and 2 are parallel; 1, 3, 4 are collinear.
  EXPECT_FALSE(m.IsBasis(MakeSet({1, 2, 3})));
  EXPECT_FALSE(m.IsBasis(MakeSet({1, 3, 4})));
  EXPECT_TRUE(m.IsBasis(MakeSet({1, 3, 5})));
  EXPECT_EQ(m.num_bases(), 14u);
}

TEST(RealizationTest, RankDeficientMatrixRejected) {
  DenseMatrix<Rational> a(2, 3);
  a(0, 0) = 1; a(0, 1) = 1; a(0, 2) = 1;
  a(1, 0) = 1; a(1, 1) = 1; a(1, 2) = 1;
  EXPECT_THROW(MatroidFromMatrix(a), RankDeficient);
}

}  // namespace
}  // namespace splitmat
