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

// Matroids given by their bases.
//
// A Matroid is an immutable value: the ground set is {1..n}, the bases are
// d-subsets stored as a bitmap over the lexicographic SubsetCodec order, and
// the rank of every subset is tabulated once at construction. Copies share
// the tables, so passing matroids around by value is cheap, and concurrent
// reads are safe.

#ifndef SPLITMAT_MATROID_H_
#define SPLITMAT_MATROID_H_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "splitmat/subset.h"

namespace splitmat {

// Largest ground set the kernel accepts; the rank table has 2^n entries.
inline constexpr int kMaxKernelElements = 20;

// Shared, immutable codec for (n, k).
const SubsetCodec& CodecFor(int n, int k);

struct Flat {
  ElementSet elements = 0;
  int rank = 0;

  friend bool operator==(const Flat&, const Flat&) = default;
  friend auto operator<=>(const Flat&, const Flat&) = default;
};

class Matroid {
 public:
  // Validates the exchange axiom. Duplicates in `bases` are ignored.
  static Matroid FromBases(int n, int d, const std::vector<ElementSet>& bases);
  // Bit i of `bitmap` marks the i-th d-subset in lexicographic order.
  static Matroid FromBitmap(int n, int d, const Bitmap& bitmap);
  static Matroid Uniform(int d, int n);

  int n() const { return n_; }
  int d() const { return d_; }
  ElementSet ground_set() const { return FullSet(n_); }

  // Bases in lexicographic order.
  const std::vector<ElementSet>& bases() const { return *bases_; }
  std::size_t num_bases() const { return bases_->size(); }
  const Bitmap& bitmap() const { return *bitmap_; }
  bool IsBasis(ElementSet s) const;

  // Table lookup; S must lie inside the ground set.
  int Rank(ElementSet s) const { return (*rank_)[s]; }
  // max |B ∩ S| over all bases, computed from scratch.
  int RankByBasisIntersection(ElementSet s) const;

  bool IsIndependent(ElementSet s) const { return Rank(s) == Cardinality(s); }

  std::string ToString() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && *a.bitmap_ == *b.bitmap_;
  }

 private:
  Matroid(int n, int d, Bitmap bitmap);

  int n_ = 0;
  int d_ = 0;
  std::shared_ptr<const Bitmap> bitmap_;
  std::shared_ptr<const std::vector<ElementSet>> bases_;
  std::shared_ptr<const std::vector<std::uint8_t>> rank_;
};

// Returns a description of the first exchange failure, or an empty string
// when `bases` (all of size d inside {1..n}) satisfy the exchange axiom.
std::string FindExchangeViolation(int n, int d, const Bitmap& bitmap);

// S plus every element whose addition does not raise the rank.
ElementSet Closure(const Matroid& m, ElementSet s);
bool IsFlat(const Matroid& m, ElementSet s);

// All flats, sorted by (rank, elements).
std::vector<Flat> Flats(const Matroid& m);
// Inclusion-minimal dependent sets, sorted numerically.
std::vector<ElementSet> Circuits(const Matroid& m);
// Flats that are unions of circuits, sorted by (rank, elements).
std::vector<Flat> CyclicFlats(const Matroid& m);

ElementSet Loops(const Matroid& m);
ElementSet Coloops(const Matroid& m);
bool IsUniform(const Matroid& m);

Matroid Dual(const Matroid& m);

// Minors. The ground set of the result is relabeled 1..m so that the
// remaining elements keep their relative order. F may be any subset.
Matroid Restriction(const Matroid& m, ElementSet f);
Matroid Contraction(const Matroid& m, ElementSet f);
Matroid Deletion(const Matroid& m, ElementSet f);

// Elements of `b` are shifted above those of `a`.
Matroid DirectSum(const Matroid& a, const Matroid& b);

// Finest partition into separators, each part sorted by smallest element.
std::vector<ElementSet> ConnectedComponents(const Matroid& m);
bool IsConnected(const Matroid& m);

// Relabels element e as perm[e-1].
Matroid Relabel(const Matroid& m, const std::vector<int>& perm);

inline constexpr int kDefaultIsomorphismLimit = 9;

// Lexicographically smallest basis bitmap over all relabelings. Only
// relabelings that sort elements by basis degree are tried.
Bitmap CanonicalForm(const Matroid& m, int max_n = kDefaultIsomorphismLimit);
bool IsIsomorphic(const Matroid& a, const Matroid& b,
                  int max_n = kDefaultIsomorphismLimit);

}  // namespace splitmat

#endif  // SPLITMAT_MATROID_H_
