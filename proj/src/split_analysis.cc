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

#include "splitmat/split_analysis.h"

#include <algorithm>
#include <map>

#include "splitmat/errors.h"
#include "splitmat/exact_lp.h"

namespace splitmat {
namespace {

void RequireConnected(const Matroid& m) {
  if (m.n() < 2) {
    throw InvalidParams("flacets need at least two elements");
  }
  if (!IsConnected(m)) throw NotConnected(m.ToString());
}

// Inverse of the order-preserving packing used by minors: local element i
// becomes the i-th smallest element of `support`.
ElementSet Expand(ElementSet local, ElementSet support) {
  ElementSet out = 0;
  for (int position = 0; support != 0; ++position) {
    const ElementSet low = support & (~support + 1);
    if (local & (ElementSet{1} << position)) out |= low;
    support &= support - 1;
  }
  return out;
}

bool IsSplitConnected(const Matroid& m) {
  if (m.n() < 2) return true;
  for (const Flat& f : SplitFlacets(m)) {
    if (!IsUniform(Restriction(m, f.elements)) ||
        !IsUniform(Contraction(m, f.elements))) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool IsSplitHyperplane(int d, int n, const SplitHyperplane& h) {
  const int size = Cardinality(h.elements);
  return h.elements != 0 && IsSubset(h.elements, FullSet(n)) && size < n &&
         h.mu > 0 && h.mu < d && d - size < h.mu && h.mu < n - size;
}

std::vector<Flat> Flacets(const Matroid& m) {
  RequireConnected(m);
  std::vector<Flat> out;
  for (const Flat& f : Flats(m)) {
    if (f.elements == 0 || f.elements == m.ground_set()) continue;
    if (IsConnected(Restriction(m, f.elements)) &&
        IsConnected(Contraction(m, f.elements))) {
      out.push_back(f);
    }
  }
  return out;
}

std::vector<Flat> SplitFlacets(const Matroid& m) {
  std::vector<Flat> out;
  for (const Flat& f : Flacets(m)) {
    if (f.rank > 0 && f.rank < Cardinality(f.elements)) out.push_back(f);
  }
  return out;
}

SplitHyperplane HyperplaneOfFlacet(const Matroid& m, const Flat& f) {
  const std::vector<Flat> split = SplitFlacets(m);
  if (std::find(split.begin(), split.end(), f) == split.end()) {
    throw NotASplitFlacet(SetToString(f.elements));
  }
  SplitHyperplane h{f.elements, m.d() - f.rank};
  if (!IsSplitHyperplane(m.d(), m.n(), h)) {
    throw CertificateFailure("split flacet " + SetToString(f.elements) +
                             " violates the split window");
  }
  return h;
}

bool SplitsCompatible(int d, const Flat& f, const Flat& g) {
  return Cardinality(f.elements & g.elements) + d <= f.rank + g.rank;
}

bool SplitsCompatibleGeometric(int d, int n, const SplitHyperplane& h1,
                               const SplitHyperplane& h2) {
  // Variables: x_1..x_n, t, p_1..p_n, q_1..q_n, all nonnegative.
  //   x_i - t - p_i = 0,  x_i + t + q_i = 1,
  //   sum x = d,  sum_{S1} x = d - mu1,  sum_{S2} x = d - mu2.
  const std::size_t vars = 3 * n + 1;
  const std::size_t t = n;
  DenseMatrix<Rational> a(2 * n + 3, vars);
  std::vector<Rational> b(2 * n + 3, Rational(0));
  for (int i = 0; i < n; ++i) {
    a(i, i) = 1;
    a(i, t) = -1;
    a(i, n + 1 + i) = -1;
    a(n + i, i) = 1;
    a(n + i, t) = 1;
    a(n + i, 2 * n + 1 + i) = 1;
    b[n + i] = 1;
  }
  const std::size_t row = 2 * n;
  for (int i = 0; i < n; ++i) {
    a(row, i) = 1;
    if (Contains(h1.elements, i + 1)) a(row + 1, i) = 1;
    if (Contains(h2.elements, i + 1)) a(row + 2, i) = 1;
  }
  b[row] = d;
  b[row + 1] = d - h1.mu;
  b[row + 2] = d - h2.mu;
  std::vector<Rational> c(vars, Rational(0));
  c[t] = 1;
  const LpResult result = MaximizeStandardForm(a, b, c);
  if (result.status == LpStatus::kUnbounded) {
    throw CertificateFailure("interior-margin LP unbounded");
  }
  return !(result.status == LpStatus::kOptimal && result.value > 0);
}

bool IsSplit(const Matroid& m) {
  const std::vector<ElementSet> components = ConnectedComponents(m);
  if (components.size() == 1) return IsSplitConnected(m);
  int non_uniform = 0;
  for (ElementSet c : components) {
    const Matroid part = Restriction(m, c);
    if (IsUniform(part)) continue;
    if (++non_uniform > 1 || !IsSplitConnected(part)) return false;
  }
  return true;
}

bool IsPaving(const Matroid& m) {
  if (m.d() == 0) return true;
  for (ElementSet s : CodecFor(m.n(), m.d() - 1).subsets()) {
    if (!m.IsIndependent(s)) return false;
  }
  return true;
}

bool IsSparsePaving(const Matroid& m) {
  return IsPaving(m) && IsPaving(Dual(m));
}

bool IsNested(const Matroid& m) {
  const std::vector<Flat> cyclic = CyclicFlats(m);
  for (std::size_t i = 0; i < cyclic.size(); ++i) {
    for (std::size_t j = i + 1; j < cyclic.size(); ++j) {
      const ElementSet a = cyclic[i].elements;
      const ElementSet b = cyclic[j].elements;
      if (!IsSubset(a, b) && !IsSubset(b, a)) return false;
    }
  }
  return true;
}

bool IsPavingBySplitFlacets(const Matroid& m) {
  if (!IsSplit(m)) return false;
  for (const Flat& f : SplitFlacets(m)) {
    if (f.rank != m.d() - 1) return false;
  }
  return true;
}

bool IsSparsePavingBySplitFlacets(const Matroid& m) {
  if (!IsPavingBySplitFlacets(m)) return false;
  for (const Flat& f : SplitFlacets(m)) {
    if (Cardinality(f.elements) != m.d()) return false;
  }
  return true;
}

bool IsStableInJohnsonGraph(const std::vector<ElementSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (Cardinality(sets[i] ^ sets[j]) < 4) return false;
    }
  }
  return true;
}

Matroid StableSetToMatroid(int d, int n, const std::vector<ElementSet>& stable) {
  const SubsetCodec& codec = CodecFor(n, d);
  Bitmap bitmap(codec.size());
  for (std::size_t i = 0; i < codec.size(); ++i) bitmap.set(i);
  for (std::size_t i = 0; i < stable.size(); ++i) {
    if (Cardinality(stable[i]) != d || !IsSubset(stable[i], FullSet(n))) {
      throw CardinalityMismatch(SetToString(stable[i]) + " is not a " +
                                std::to_string(d) + "-subset of [" +
                                std::to_string(n) + "]");
    }
    for (std::size_t j = i + 1; j < stable.size(); ++j) {
      if (stable[i] != stable[j] && Cardinality(stable[i] ^ stable[j]) < 4) {
        throw NotStable(SetToString(stable[i]) + " and " +
                        SetToString(stable[j]) + " are adjacent in J(" +
                        std::to_string(d) + "," + std::to_string(n) + ")");
      }
    }
    bitmap.set(codec.index(stable[i]), false);
  }
  return Matroid::FromBitmap(n, d, bitmap);
}

std::vector<ElementSet> MatroidToStableSet(const Matroid& m) {
  if (!IsConnected(m) || !IsSparsePaving(m)) {
    throw NotSparsePaving(m.ToString());
  }
  std::vector<ElementSet> out;
  const SubsetCodec& codec = CodecFor(m.n(), m.d());
  for (std::size_t i = 0; i < codec.size(); ++i) {
    if (!m.bitmap().test(i)) out.push_back(codec.subset(i));
  }
  return out;
}

std::vector<ElementSet> KnuthStableSet(int d, int n) {
  if (d <= 0 || d >= n) {
    throw InvalidParams("need 0 < d < n");
  }
  std::vector<std::vector<ElementSet>> classes(n);
  for (ElementSet s : CodecFor(n, d).subsets()) {
    int color = 0;
    for (int e : Elements(s)) color = (color + e) % n;
    classes[color].push_back(s);
  }
  std::size_t best = 0;
  for (std::size_t r = 1; r < classes.size(); ++r) {
    if (classes[r].size() > classes[best].size()) best = r;
  }
  return classes[best];
}

DressianBounds DressianDimensionBounds(int d, int n) {
  if (d <= 0 || d >= n) throw InvalidParams("need 0 < d < n");
  DressianBounds bounds;
  bounds.lower = Rational(mpz_class(std::to_string(Binomial(n, d))), mpz_class(n)) - 1;
  bounds.lower.canonicalize();
  bounds.upper = static_cast<std::int64_t>(Binomial(n - 2, d - 1)) - 1;
  return bounds;
}

ClassificationReport Classify(const Matroid& m) {
  ClassificationReport report;
  report.n = m.n();
  report.d = m.d();
  report.support = m.ground_set();
  const std::vector<ElementSet> components = ConnectedComponents(m);
  report.connected = components.size() == 1;
  if (report.connected && m.n() >= 2) {
    report.flacets = Flacets(m);
    for (const Flat& f : report.flacets) {
      if (f.rank > 0 && f.rank < Cardinality(f.elements)) {
        report.split_flacets.push_back(f);
      }
    }
  }
  if (!report.connected) {
    for (ElementSet c : components) {
      ClassificationReport part = Classify(Restriction(m, c));
      part.support = c;
      for (Flat& f : part.flacets) f.elements = Expand(f.elements, c);
      for (Flat& f : part.split_flacets) f.elements = Expand(f.elements, c);
      report.components.push_back(std::move(part));
    }
  }
  report.is_split = IsSplit(m);
  report.is_paving = IsPaving(m);
  report.is_sparse_paving = report.is_paving && IsPaving(Dual(m));
  report.is_nested = IsNested(m);
  return report;
}

}  // namespace splitmat
