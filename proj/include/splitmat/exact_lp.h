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

// Two-phase primal simplex over the rationals with Bland's rule.

#ifndef SPLITMAT_EXACT_LP_H_
#define SPLITMAT_EXACT_LP_H_

#include <vector>

#include "splitmat/linear_algebra.h"

namespace splitmat {

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  Rational value;
  std::vector<Rational> x;
};

// maximize c.x  subject to  a x = b,  x >= 0.
LpResult MaximizeStandardForm(const DenseMatrix<Rational>& a,
                              const std::vector<Rational>& b,
                              const std::vector<Rational>& c);

}  // namespace splitmat

#endif  // SPLITMAT_EXACT_LP_H_
