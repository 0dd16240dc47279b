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

#include "double_description.h"

#include <bit>
#include <numeric>

#include "splitmat/errors.h"
#include "splitmat/linear_algebra.h"

namespace splitmat::internal {
namespace {

class RowSet {
 public:
  explicit RowSet(std::size_t size) : words_((size + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

  std::size_t count() const {
    std::size_t total = 0;
    for (std::uint64_t w : words_) total += std::popcount(w);
    return total;
  }

  RowSet operator&(const RowSet& other) const {
    RowSet out = *this;
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= other.words_[i];
    return out;
  }

  bool IsSubsetOf(const RowSet& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVector direction;
  RowSet zeros;
};

std::int64_t Narrow(__int128 value) {
  if (value > INT64_MAX || value < INT64_MIN) {
    throw LimitExceeded("integer overflow in double description");
  }
  return static_cast<std::int64_t>(value);
}

__int128 Dot(const IntVector& row, const IntVector& ray) {
  __int128 total = 0;
  for (std::size_t i = 0; i < row.size(); ++i) {
    total += static_cast<__int128>(row[i]) * ray[i];
  }
  return total;
}

void MakePrimitive(IntVector& v) {
  std::int64_t g = 0;
  for (std::int64_t x : v) g = std::gcd(g, x);
  if (g > 1) {
    for (std::int64_t& x : v) x /= g;
  }
}

// Rows chosen greedily, in index order, until they span R^dim.
std::vector<std::size_t> SpanningRows(const std::vector<IntVector>& rows,
                                      std::size_t dim) {
  std::vector<std::size_t> chosen;
  DenseMatrix<Rational> basis(0, dim);
  for (std::size_t i = 0; i < rows.size() && chosen.size() < dim; ++i) {
    DenseMatrix<Rational> trial = basis;
    std::vector<Rational> row(rows[i].begin(), rows[i].end());
    trial.AppendRow(row);
    if (MatrixRank(trial) > chosen.size()) {
      basis = std::move(trial);
      chosen.push_back(i);
    }
  }
  if (chosen.size() < dim) {
    throw InvalidParams("constraint rows do not span the ambient space");
  }
  return chosen;
}

}  // namespace

std::vector<ExtremeRay> ExtremeRays(const std::vector<IntVector>& rows,
                                    std::size_t dim) {
  const std::size_t m = rows.size();
  const std::vector<std::size_t> chosen = SpanningRows(rows, dim);

  // Columns of the inverse of the chosen square block are the initial rays.
  DenseMatrix<Rational> block(dim, 2 * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < dim; ++c) block(r, c) = rows[chosen[r]][c];
    block(r, dim + r) = 1;
  }
  ReduceRowEchelon(block);

  std::vector<bool> processed(m, false);
  for (std::size_t i : chosen) processed[i] = true;

  std::vector<Ray> rays;
  for (std::size_t j = 0; j < dim; ++j) {
    mpz_class lcm = 1;
    for (std::size_t r = 0; r < dim; ++r) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
              block(r, dim + j).get_den_mpz_t());
    }
    IntVector direction(dim);
    for (std::size_t r = 0; r < dim; ++r) {
      const mpz_class scaled = block(r, dim + j).get_num() *
                               (lcm / block(r, dim + j).get_den());
      if (!scaled.fits_slong_p()) {
        throw LimitExceeded("integer overflow in double description");
      }
      direction[r] = scaled.get_si();
    }
    MakePrimitive(direction);
    Ray ray{std::move(direction), RowSet(m)};
    for (std::size_t r = 0; r < dim; ++r) {
      if (r != j) ray.zeros.set(chosen[r]);
    }
    rays.push_back(std::move(ray));
  }

  for (std::size_t i = 0; i < m; ++i) {
    if (processed[i]) continue;
    processed[i] = true;
    std::vector<__int128> value(rays.size());
    bool any_negative = false;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      value[r] = Dot(rows[i], rays[r].direction);
      if (value[r] < 0) any_negative = true;
    }
    if (!any_negative) {
      for (std::size_t r = 0; r < rays.size(); ++r) {
        if (value[r] == 0) rays[r].zeros.set(i);
      }
      continue;
    }
    std::vector<Ray> next;
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (value[p] < 0) continue;
      Ray kept = rays[p];
      if (value[p] == 0) kept.zeros.set(i);
      next.push_back(std::move(kept));
    }
    for (std::size_t p = 0; p < rays.size(); ++p) {
      if (value[p] <= 0) continue;
      for (std::size_t q = 0; q < rays.size(); ++q) {
        if (value[q] >= 0) continue;
        RowSet common = rays[p].zeros & rays[q].zeros;
        if (common.count() + 2 < dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && common.IsSubsetOf(rays[r].zeros)) {
            adjacent = false;
          }
        }
        if (!adjacent) continue;
        IntVector direction(dim);
        for (std::size_t c = 0; c < dim; ++c) {
          direction[c] = Narrow(value[p] * rays[q].direction[c] -
                                value[q] * rays[p].direction[c]);
        }
        MakePrimitive(direction);
        common.set(i);
        next.push_back(Ray{std::move(direction), std::move(common)});
      }
    }
    rays = std::move(next);
  }

  std::vector<ExtremeRay> out;
  out.reserve(rays.size());
  for (Ray& ray : rays) {
    ExtremeRay extreme{std::move(ray.direction), {}};
    for (std::size_t i = 0; i < m; ++i) {
      if (ray.zeros.test(i)) extreme.zero_rows.push_back(i);
    }
    out.push_back(std::move(extreme));
  }
  return out;
}

}  // namespace splitmat::internal
