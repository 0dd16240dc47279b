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

#include "splitmat/lifts.h"

#include <algorithm>

#include "splitmat/errors.h"
#include "splitmat/split_analysis.h"

namespace splitmat {
namespace {

void RequireLiftable(const Matroid& m) {
  if (m.n() < 2) throw InvalidParams("lifts need at least two elements");
  if (m.n() + 2 > kMaxKernelElements) {
    throw LimitExceeded("lift would exceed " +
                        std::to_string(kMaxKernelElements) + " elements");
  }
  if (!IsConnected(m)) throw NotConnected(m.ToString());
}

ElementSet FS(const Matroid& m) {
  return Singleton(LiftElementF(m)) | Singleton(LiftElementS(m));
}

}  // namespace

LiftVector CorankVector(const Matroid& m, int k) {
  if (k < 0 || k > m.n()) throw InvalidParams("k outside 0..n");
  LiftVector lift{k, m.n(), {}};
  const SubsetCodec& codec = CodecFor(m.n(), k);
  lift.heights.reserve(codec.size());
  for (ElementSet s : codec.subsets()) {
    lift.heights.emplace_back(m.d() - m.Rank(s));
  }
  return lift;
}

Matroid SeriesFreeLift(const Matroid& m) {
  RequireLiftable(m);
  const int d = m.d();
  const ElementSet f = Singleton(LiftElementF(m));
  const ElementSet s = Singleton(LiftElementS(m));
  std::vector<ElementSet> bases;
  for (ElementSet b : CodecFor(m.n() + 2, d + 1).subsets()) {
    const ElementSet core = b & ~(f | s);
    const bool has_f = (b & f) != 0;
    const bool has_s = (b & s) != 0;
    if (has_f && has_s) {
      if (m.Rank(core) == d - 1) bases.push_back(b);
    } else if (has_f != has_s) {
      if (m.Rank(core) == d) bases.push_back(b);
    }
  }
  return Matroid::FromBases(m.n() + 2, d + 1, bases);
}

Matroid ParallelCofreeLift(const Matroid& m) {
  RequireLiftable(m);
  return Dual(SeriesFreeLift(Dual(m)));
}

int SeriesFreeLiftRank(const Matroid& m, ElementSet s) {
  const ElementSet fs = FS(m);
  return std::min(m.Rank(s & ~fs) + Cardinality(s & fs), m.d() + 1);
}

int ParallelCofreeLiftRank(const Matroid& m, ElementSet s) {
  return std::min(m.Rank(s & ~FS(m)) + 1, Cardinality(s));
}

int NestedMatroidRank(const Matroid& m, const Flat& f, ElementSet s) {
  const int d = m.d();
  const int r = f.rank;
  return std::min({d + 1, Cardinality(s), Cardinality(s & f.elements) + d + 1 - r,
                   Cardinality(s & (f.elements | FS(m))) + d - r});
}

int RankFromCyclicFlats(const std::vector<Flat>& cyclic_flats, ElementSet s) {
  int best = Cardinality(s);
  for (const Flat& g : cyclic_flats) {
    best = std::min(best, g.rank + Cardinality(s & ~g.elements));
  }
  return best;
}

Matroid NestedMatroid(const Matroid& m, const Flat& f) {
  RequireLiftable(m);
  const std::vector<Flat> split = SplitFlacets(m);
  if (std::find(split.begin(), split.end(), f) == split.end()) {
    throw NotASplitFlacet(SetToString(f.elements));
  }
  if (!IsSplit(m)) throw NotSplit(m.ToString());
  std::vector<ElementSet> bases;
  for (ElementSet b : CodecFor(m.n() + 2, m.d() + 1).subsets()) {
    if (NestedMatroidRank(m, f, b) == m.d() + 1) bases.push_back(b);
  }
  return Matroid::FromBases(m.n() + 2, m.d() + 1, bases);
}

CorankComparison CompareCoranks(const Matroid& m, const Flat& f, ElementSet s) {
  const int d = m.d();
  const int lhs = d + 1 - SeriesFreeLiftRank(m, s) + f.rank -
                  Cardinality(s & f.elements);
  const int rhs = d + 1 - NestedMatroidRank(m, f, s);
  if (lhs == rhs) return CorankComparison::kEquality;
  return lhs > rhs ? CorankComparison::kStrict : CorankComparison::kViolated;
}

std::vector<Matroid> PredictedRayCells(const Matroid& m) {
  RequireLiftable(m);
  if (!IsSplit(m)) throw NotSplit(m.ToString());
  std::vector<Matroid> cells = {SeriesFreeLift(m), ParallelCofreeLift(m)};
  for (const Flat& f : SplitFlacets(m)) cells.push_back(NestedMatroid(m, f));
  return cells;
}

}  // namespace splitmat
