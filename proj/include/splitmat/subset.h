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

// Subsets of the ground set {1..n} and the lexicographic k-subset codec.

#ifndef SPLITMAT_SUBSET_H_
#define SPLITMAT_SUBSET_H_

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace splitmat {

// Bit e-1 stands for element e. Ground sets are limited to 32 elements.
using ElementSet = std::uint32_t;

inline constexpr int kMaxElements = 32;

constexpr ElementSet Singleton(int element) {
  return ElementSet{1} << (element - 1);
}
constexpr ElementSet FullSet(int n) {
  return n >= 32 ? ~ElementSet{0} : (ElementSet{1} << n) - 1;
}
constexpr int Cardinality(ElementSet s) { return std::popcount(s); }
constexpr bool Contains(ElementSet s, int element) {
  return (s & Singleton(element)) != 0;
}
constexpr bool IsSubset(ElementSet a, ElementSet b) { return (a & ~b) == 0; }

ElementSet MakeSet(const std::vector<int>& elements);
std::vector<int> Elements(ElementSet s);

// "{1,2,5}" style; "{}" for the empty set.
std::string SetToString(ElementSet s);
// Compact form used by literals and by the CLI: "125" when every element is
// a single digit, otherwise elements joined by '.' ("1.10.11").
std::string SetToCompact(ElementSet s);
// Inverse of SetToCompact. Accepts "125", "1.10.11" and "{1,2,5}".
ElementSet ParseCompactSet(std::string_view text);

std::uint64_t Binomial(int n, int k);

// Bijection between the k-subsets of {1..n} and 0..C(n,k)-1 in
// lexicographic order of the sorted element tuples.
class SubsetCodec {
 public:
  SubsetCodec(int n, int k);

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return subsets_.size(); }

  ElementSet subset(std::size_t index) const { return subsets_[index]; }
  const std::vector<ElementSet>& subsets() const { return subsets_; }

  // Requires |s| == k and s within {1..n}.
  std::size_t index(ElementSet s) const;

 private:
  int n_;
  int k_;
  std::vector<ElementSet> subsets_;
  // binom_[a][b] = C(a, b) for a <= n.
  std::vector<std::vector<std::uint64_t>> binom_;
};

// All k-subsets of {1..n} in colexicographic ("revlex") order, the order
// used by some external matroid databases.
std::vector<ElementSet> ColexSubsets(int n, int k);

// Fixed-length bit sequence. Ordering is lexicographic on the sequence
// (position 0 first, 0 < 1), which is what canonical forms minimize.
class Bitmap {
 public:
  Bitmap() = default;
  explicit Bitmap(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool test(std::size_t i) const {
    return (words_[i / 64] >> (63 - i % 64)) & 1u;
  }
  void set(std::size_t i, bool value = true) {
    const std::uint64_t mask = std::uint64_t{1} << (63 - i % 64);
    if (value) {
      words_[i / 64] |= mask;
    } else {
      words_[i / 64] &= ~mask;
    }
  }
  std::size_t count() const;

  // '*' for set bits, '0' for clear bits.
  std::string ToString(char one = '*', char zero = '0') const;

  friend bool operator==(const Bitmap&, const Bitmap&) = default;
  friend std::strong_ordering operator<=>(const Bitmap& a, const Bitmap& b) {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.words_ <=> b.words_;
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct BitmapHash {
  std::size_t operator()(const Bitmap& b) const;
};

}  // namespace splitmat

#endif  // SPLITMAT_SUBSET_H_
