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

// Corank vectors and the rank-raising lifts of a connected matroid.
//
// All lifts of a (d,n)-matroid live on {1..n, f, s} with f = n+1 and
// s = n+2, and have rank d+1.

#ifndef SPLITMAT_LIFTS_H_
#define SPLITMAT_LIFTS_H_

#include <vector>

#include "splitmat/linear_algebra.h"
#include "splitmat/matroid.h"

namespace splitmat {

// Height function on the vertices of Δ(k,n), one entry per k-subset in
// lexicographic order.
struct LiftVector {
  int k = 0;
  int n = 0;
  std::vector<Rational> heights;

  friend bool operator==(const LiftVector&, const LiftVector&) = default;
};

// S -> d - rank(S) over all k-subsets S.
LiftVector CorankVector(const Matroid& m, int k);
// The d-corank vector.
inline LiftVector CorankVector(const Matroid& m) {
  return CorankVector(m, m.d());
}

inline int LiftElementF(const Matroid& m) { return m.n() + 1; }
inline int LiftElementS(const Matroid& m) { return m.n() + 2; }

// Series extension of the free extension. Bases are the (d+1)-sets B with
// either {f,s} ⊆ B and rank(B - fs) = d - 1, or exactly one of f, s in B and
// B - fs a basis of M.
Matroid SeriesFreeLift(const Matroid& m);

// Dual of the series-free lift of the dual, with the same f and s labels.
Matroid ParallelCofreeLift(const Matroid& m);

// Closed-form ranks of the lifts; S ranges over subsets of {1..n+2}.
//   series-free:     min(rank(S - fs) + |S ∩ fs|, d + 1)
//   parallel-cofree: min(rank(S - fs) + 1, |S|)
int SeriesFreeLiftRank(const Matroid& m, ElementSet s);
int ParallelCofreeLiftRank(const Matroid& m, ElementSet s);

// The nested matroid with cyclic flats
//   ∅ ⊂ [n]-F ⊂ [n]-F+fs ⊂ [n]+fs
// of ranks 0, d - rank F, d + 1 - rank F, d + 1. F must be a split flacet
// of the connected split matroid M.
Matroid NestedMatroid(const Matroid& m, const Flat& f);

// min{d+1, |S|, |S∩F| + d + 1 - rank F, |S∩(F+fs)| + d - rank F}.
int NestedMatroidRank(const Matroid& m, const Flat& f, ElementSet s);

// Rank from a chain of cyclic flats: min over G of rank(G) + |S - G|.
int RankFromCyclicFlats(const std::vector<Flat>& cyclic_flats, ElementSet s);

enum class CorankComparison { kStrict, kEquality, kViolated };

// Compares  d+1 - rank_ΛM(S) + rank F - |S∩F|  with  d+1 - rank_NF(S)
// for a (d+1)-subset S of {1..n+2}.
CorankComparison CompareCoranks(const Matroid& m, const Flat& f, ElementSet s);

// ΛM, Λ*M and N_F for each split flacet F, in that order. Requires M
// connected and split.
std::vector<Matroid> PredictedRayCells(const Matroid& m);

}  // namespace splitmat

#endif  // SPLITMAT_LIFTS_H_
