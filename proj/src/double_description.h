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

// Extreme rays of a pointed cone {c : A c >= 0} with small integer A, by the
// double description method with combinatorial adjacency.

#ifndef SPLITMAT_SRC_DOUBLE_DESCRIPTION_H_
#define SPLITMAT_SRC_DOUBLE_DESCRIPTION_H_

#include <cstdint>
#include <vector>

namespace splitmat::internal {

using IntVector = std::vector<std::int64_t>;

struct ExtremeRay {
  // Primitive integer generator.
  IntVector direction;
  // Indices of the rows of A vanishing on the ray, ascending.
  std::vector<std::size_t> zero_rows;
};

// Rows of A must span R^dim; otherwise the cone has lineality and
// InvalidParams is thrown. Throws LimitExceeded on int64 overflow.
std::vector<ExtremeRay> ExtremeRays(const std::vector<IntVector>& rows,
                                    std::size_t dim);

}  // namespace splitmat::internal

#endif  // SPLITMAT_SRC_DOUBLE_DESCRIPTION_H_
