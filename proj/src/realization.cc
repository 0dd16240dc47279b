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

#include "splitmat/realization.h"

#include <vector>

#include "splitmat/errors.h"

namespace splitmat {

Matroid MatroidFromMatrix(const DenseMatrix<Rational>& a) {
  const int d = static_cast<int>(a.rows());
  const int n = static_cast<int>(a.cols());
  if (n < 1 || n > kMaxKernelElements) {
    throw InvalidParams("matrix must have 1.." +
                        std::to_string(kMaxKernelElements) + " columns");
  }
  if (MatrixRank(a) < a.rows()) {
    throw RankDeficient("row rank below " + std::to_string(d));
  }
  std::vector<ElementSet> bases;
  for (ElementSet s : CodecFor(n, d).subsets()) {
    const std::vector<int> columns = Elements(s);
    DenseMatrix<Rational> minor(d, d);
    for (int r = 0; r < d; ++r) {
      for (int c = 0; c < d; ++c) minor(r, c) = a(r, columns[c] - 1);
    }
    if (d == 0 || Determinant(minor) != 0) bases.push_back(s);
  }
  return Matroid::FromBases(n, d, bases);
}

}  // namespace splitmat
