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

#include "splitmat/exact_lp.h"

#include <cstddef>
#include <optional>

#include "splitmat/errors.h"

namespace splitmat {
namespace {

// Tableau rows 0..m-1 hold constraints with the right-hand side in the last
// column; row m holds reduced costs (objective is maximized, so a positive
// entry marks an improving column).
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t vars)
      : m_(rows), vars_(vars), t_(rows + 1, vars + 1), basis_(rows, 0) {}

  Rational& at(std::size_t r, std::size_t c) { return t_(r, c); }
  Rational& rhs(std::size_t r) { return t_(r, vars_); }
  std::size_t& basic(std::size_t r) { return basis_[r]; }
  std::size_t rows() const { return m_; }

  void Pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / t_(row, col);
    for (std::size_t c = 0; c <= vars_; ++c) t_(row, c) *= inv;
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == row || t_(r, col) == 0) continue;
      const Rational factor = t_(r, col);
      for (std::size_t c = 0; c <= vars_; ++c) {
        t_(r, c) -= factor * t_(row, c);
      }
    }
    basis_[row] = col;
  }

  // Loads objective coefficients and prices out the current basis.
  void SetObjective(const std::vector<Rational>& cost) {
    for (std::size_t c = 0; c <= vars_; ++c) {
      t_(m_, c) = c < cost.size() ? cost[c] : Rational(0);
    }
    for (std::size_t r = 0; r < m_; ++r) {
      const Rational factor = t_(m_, basis_[r]);
      if (factor == 0) continue;
      for (std::size_t c = 0; c <= vars_; ++c) {
        t_(m_, c) -= factor * t_(r, c);
      }
    }
  }

  // Runs Bland's rule over columns [0, allowed). Returns false if unbounded.
  bool Optimize(std::size_t allowed) {
    while (true) {
      std::optional<std::size_t> enter;
      for (std::size_t c = 0; c < allowed; ++c) {
        if (t_(m_, c) > 0) {
          enter = c;
          break;
        }
      }
      if (!enter) return true;
      std::optional<std::size_t> leave;
      Rational best;
      for (std::size_t r = 0; r < m_; ++r) {
        if (t_(r, *enter) <= 0) continue;
        const Rational ratio = t_(r, vars_) / t_(r, *enter);
        if (!leave || ratio < best ||
            (ratio == best && basis_[r] < basis_[*leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (!leave) return false;
      Pivot(*leave, *enter);
    }
  }

  // Current objective value of the maximization.
  Rational Value() const { return -t_(m_, vars_); }

  void DropRow(std::size_t row) {
    DenseMatrix<Rational> next(m_, vars_ + 1);
    std::vector<std::size_t> next_basis;
    std::size_t out = 0;
    for (std::size_t r = 0; r <= m_; ++r) {
      if (r == row) continue;
      for (std::size_t c = 0; c <= vars_; ++c) next(out, c) = t_(r, c);
      if (r < m_) next_basis.push_back(basis_[r]);
      ++out;
    }
    t_ = std::move(next);
    basis_ = std::move(next_basis);
    --m_;
  }

 private:
  std::size_t m_;
  std::size_t vars_;
  DenseMatrix<Rational> t_;
  std::vector<std::size_t> basis_;
};

}  // namespace

LpResult MaximizeStandardForm(const DenseMatrix<Rational>& a,
                              const std::vector<Rational>& b,
                              const std::vector<Rational>& c) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || c.size() != n) {
    throw InvalidParams("LP dimensions do not match");
  }
  // Columns: n structural variables, then m artificials.
  Tableau tableau(m, n + m);
  for (std::size_t r = 0; r < m; ++r) {
    const int sign = b[r] < 0 ? -1 : 1;
    for (std::size_t j = 0; j < n; ++j) tableau.at(r, j) = sign * a(r, j);
    tableau.at(r, n + r) = 1;
    tableau.rhs(r) = sign * b[r];
    tableau.basic(r) = n + r;
  }

  std::vector<Rational> phase_one(n + m, Rational(0));
  for (std::size_t r = 0; r < m; ++r) phase_one[n + r] = -1;
  tableau.SetObjective(phase_one);
  tableau.Optimize(n + m);

  LpResult result;
  if (tableau.Value() < 0) {
    result.status = LpStatus::kInfeasible;
    return result;
  }
  // Drive remaining (zero-valued) artificials out of the basis.
  for (std::size_t r = 0; r < tableau.rows();) {
    if (tableau.basic(r) < n) {
      ++r;
      continue;
    }
    std::optional<std::size_t> col;
    for (std::size_t j = 0; j < n; ++j) {
      if (tableau.at(r, j) != 0) {
        col = j;
        break;
      }
    }
    if (col) {
      tableau.Pivot(r, *col);
      ++r;
    } else {
      tableau.DropRow(r);
    }
  }

  std::vector<Rational> cost(c);
  cost.resize(n + m, Rational(0));
  tableau.SetObjective(cost);
  if (!tableau.Optimize(n)) {
    result.status = LpStatus::kUnbounded;
    return result;
  }
  result.status = LpStatus::kOptimal;
  result.value = tableau.Value();
  result.x.assign(n, Rational(0));
  for (std::size_t r = 0; r < tableau.rows(); ++r) {
    if (tableau.basic(r) < n) result.x[tableau.basic(r)] = tableau.rhs(r);
  }
  return result;
}

}  // namespace splitmat
