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

// Flacets, hypersimplex splits and the split / paving / nested classes.

#ifndef SPLITMAT_SPLIT_ANALYSIS_H_
#define SPLITMAT_SPLIT_ANALYSIS_H_

#include <cstdint>
#include <vector>

#include "splitmat/linear_algebra.h"
#include "splitmat/matroid.h"

namespace splitmat {

// The hyperplane  sum_{i in S} x_i = d - mu  of the hypersimplex Δ(d,n).
struct SplitHyperplane {
  ElementSet elements = 0;
  int mu = 0;

  friend bool operator==(const SplitHyperplane&,
                         const SplitHyperplane&) = default;
};

// True iff (S, mu) cuts Δ(d,n) into two cells: S proper and nonempty,
// 0 < mu < d and d - |S| < mu < n - |S|.
bool IsSplitHyperplane(int d, int n, const SplitHyperplane& h);

// Proper flats F with M|F and M/F connected. Requires M connected, n >= 2.
std::vector<Flat> Flacets(const Matroid& m);
// Flacets with 0 < rank(F) < |F|.
std::vector<Flat> SplitFlacets(const Matroid& m);

// (F, d - rank F). Throws NotASplitFlacet unless F is a split flacet.
SplitHyperplane HyperplaneOfFlacet(const Matroid& m, const Flat& f);

// |F ∩ G| + d <= rank F + rank G.
bool SplitsCompatible(int d, const Flat& f, const Flat& g);

// Exact LP check that the two hyperplanes share no relatively interior
// point of Δ(d,n). Maximizes a margin t with t <= x_i <= 1 - t on both
// hyperplanes; the splits are compatible iff the optimum is not positive.
bool SplitsCompatibleGeometric(int d, int n, const SplitHyperplane& h1,
                               const SplitHyperplane& h2);

bool IsSplit(const Matroid& m);
// Every circuit has at least d elements.
bool IsPaving(const Matroid& m);
// M and its dual are paving.
bool IsSparsePaving(const Matroid& m);
// Cyclic flats form a chain under inclusion.
bool IsNested(const Matroid& m);

// Geometric characterizations for connected M with n >= 2: split with every
// split flacet of rank d-1 (paving), additionally of cardinality d (sparse
// paving).
bool IsPavingBySplitFlacets(const Matroid& m);
bool IsSparsePavingBySplitFlacets(const Matroid& m);

// Matroid whose non-bases are exactly `stable`; every pair must differ in at
// least four coordinates (NotStable otherwise).
Matroid StableSetToMatroid(int d, int n, const std::vector<ElementSet>& stable);
// Non-bases of a connected sparse paving matroid, lexicographic order.
std::vector<ElementSet> MatroidToStableSet(const Matroid& m);
// True iff all pairs have symmetric difference of size >= 4.
bool IsStableInJohnsonGraph(const std::vector<ElementSet>& sets);

// Largest class of  v -> sum_i i*v_i mod n  over the d-subsets of [n]; ties
// go to the smallest residue. Sets are returned in lexicographic order.
std::vector<ElementSet> KnuthStableSet(int d, int n);

struct DressianBounds {
  Rational lower;       // C(n,d)/n - 1
  std::int64_t upper;   // C(n-2,d-1) - 1
};
DressianBounds DressianDimensionBounds(int d, int n);

struct ClassificationReport {
  int n = 0;
  int d = 0;
  bool connected = false;
  // Filled for connected matroids with n >= 2.
  std::vector<Flat> flacets;
  std::vector<Flat> split_flacets;
  bool is_split = false;
  bool is_paving = false;
  bool is_sparse_paving = false;
  bool is_nested = false;
  // Elements this report covers, in the labels of the classified matroid.
  ElementSet support = 0;
  // For disconnected matroids: one report per component restriction.
  std::vector<ClassificationReport> components;
};

ClassificationReport Classify(const Matroid& m);

}  // namespace splitmat

#endif  // SPLITMAT_SPLIT_ANALYSIS_H_
