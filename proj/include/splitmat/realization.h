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

#ifndef SPLITMAT_REALIZATION_H_
#define SPLITMAT_REALIZATION_H_

#include "splitmat/linear_algebra.h"
#include "splitmat/matroid.h"

namespace splitmat {

// Column matroid of a d x n rational matrix of full row rank: the bases are
// the d-sets of columns with nonzero determinant.
Matroid MatroidFromMatrix(const DenseMatrix<Rational>& a);

}  // namespace splitmat

#endif  // SPLITMAT_REALIZATION_H_
