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

// Regular subdivisions of the hypersimplex Δ(k,n) in exact arithmetic.
//
// Vertices of Δ(k,n) are indexed by the lexicographic SubsetCodec. A maximal
// cell of the subdivision induced by a height function h is the tight set of
// a vertex a of {a : a·e_u <= h(u) for all u}; since every vertex has
// coordinate sum k, the affine offset is folded into a.

#ifndef SPLITMAT_SUBDIVISION_H_
#define SPLITMAT_SUBDIVISION_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "splitmat/lifts.h"
#include "splitmat/linear_algebra.h"
#include "splitmat/matroid.h"

namespace splitmat {

inline constexpr std::size_t kDefaultMaxVertices = 1000;

// Supporting affine function of a cell: a·e_v + b equals the height on the
// cell and is strictly smaller off it.
struct CellCertificate {
  std::vector<Rational> a;
  Rational b;
};

struct Subdivision {
  int k = 0;
  int n = 0;
  // Maximal cells as vertex bitmaps over Δ(k,n), sorted.
  std::vector<Bitmap> cells;
  // Cell index pairs (i < j) sharing a facet, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> dual_edges;
  // Parallel to `cells`; empty for subdivisions read back from text.
  std::vector<CellCertificate> certificates;
};

// Throws DegenerateParameters unless 0 < k < n, InvalidParams on a length
// mismatch, LimitExceeded if C(n,k) > max_vertices and CertificateFailure if
// any certificate, coverage or ridge check fails.
Subdivision RegularSubdivision(const LiftVector& lift,
                               std::size_t max_vertices = kDefaultMaxVertices);

// Re-checks every certificate of `sub` against `lift`.
void CheckCertificates(const Subdivision& sub, const LiftVector& lift);

// Vertex indices of a cell, ascending.
std::vector<std::size_t> CellVertices(const Bitmap& cell);

// NotAMatroid carries the exchange witness.
Matroid CellToMatroid(int k, int n, const Bitmap& cell);
bool IsMatroidSubdivision(const Subdivision& sub);
// Indices of the maximal cells whose matroid has no loops.
std::vector<std::size_t> TropicalLinearSpace(const Subdivision& sub);

// Degree of each cell in the dual graph.
std::vector<std::size_t> DualDegrees(const Subdivision& sub);
bool IsDualGraphConnected(const Subdivision& sub);

struct SecondaryConeInfo {
  std::size_t solution_dim = 0;
  std::size_t lineality_dim = 0;
  std::size_t cone_dim = 0;
};

// Dimension of the space of heights that are affine on every maximal cell.
SecondaryConeInfo SecondaryConeDimension(const Subdivision& sub);

struct RayReport {
  bool cells_match = false;
  bool count_match = false;
  bool cone_dim_one = false;
  std::size_t num_cells = 0;
  std::size_t expected_cells = 0;
  std::size_t cone_dim = 0;
  // Cells found but not predicted, and predicted but not found.
  std::vector<Bitmap> unexpected;
  std::vector<Bitmap> missing;

  bool passed() const { return cells_match && count_match && cone_dim_one; }
};

// Subdivides Δ(d+1,n+2) by the corank vector of the series-free lift and
// compares against the predicted cells.
RayReport VerifyRay(const Matroid& m,
                    std::size_t max_vertices = kDefaultMaxVertices);

// Text form: "k n num_cells", one line per cell with its k-subsets
// (comma-separated elements, space-separated subsets, lexicographic order),
// then one "i j" line per dual edge. The parser skips trailing '#' lines.
std::string ExportSubdivision(const Subdivision& sub);
Subdivision ParseSubdivision(const std::string& text);

}  // namespace splitmat

#endif  // SPLITMAT_SUBDIVISION_H_
