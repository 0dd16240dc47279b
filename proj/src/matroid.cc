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

#include "splitmat/matroid.h"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>

#include "splitmat/errors.h"

namespace splitmat {

const SubsetCodec& CodecFor(int n, int k) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<SubsetCodec>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[{n, k}];
  if (!slot) slot = std::make_unique<SubsetCodec>(n, k);
  return *slot;
}

namespace {

void CheckParams(int n, int d) {
  if (n < 1 || n > kMaxKernelElements) {
    throw InvalidParams("ground set size " + std::to_string(n) +
                        " outside 1.." + std::to_string(kMaxKernelElements));
  }
  if (d < 0 || d > n) {
    throw InvalidParams("rank " + std::to_string(d) + " outside 0.." +
                        std::to_string(n));
  }
}

// Packs the elements of `s` that lie in `support` into 1..|support|,
// preserving order.
ElementSet Compress(ElementSet s, ElementSet support) {
  ElementSet out = 0;
  int position = 0;
  while (support != 0) {
    const ElementSet low = support & (~support + 1);
    if (s & low) out |= ElementSet{1} << position;
    ++position;
    support &= support - 1;
  }
  return out;
}

}  // namespace

std::string FindExchangeViolation(int n, int d, const Bitmap& bitmap) {
  const SubsetCodec& codec = CodecFor(n, d);
  std::vector<ElementSet> bases;
  for (std::size_t i = 0; i < codec.size(); ++i) {
    if (bitmap.test(i)) bases.push_back(codec.subset(i));
  }
  for (ElementSet a : bases) {
    for (ElementSet b : bases) {
      if (a == b) continue;
      for (int x : Elements(a & ~b)) {
        bool found = false;
        for (int y : Elements(b & ~a)) {
          const ElementSet candidate = (a & ~Singleton(x)) | Singleton(y);
          if (bitmap.test(codec.index(candidate))) {
            found = true;
            break;
          }
        }
        if (!found) {
          return "A=" + SetToString(a) + " B=" + SetToString(b) +
                 " a=" + std::to_string(x);
        }
      }
    }
  }
  return "";
}

Matroid::Matroid(int n, int d, Bitmap bitmap) : n_(n), d_(d) {
  const SubsetCodec& codec = CodecFor(n, d);
  auto bases = std::make_shared<std::vector<ElementSet>>();
  for (std::size_t i = 0; i < codec.size(); ++i) {
    if (bitmap.test(i)) bases->push_back(codec.subset(i));
  }

  const std::size_t size = std::size_t{1} << n;
  std::vector<std::uint8_t> independent(size, 0);
  for (ElementSet b : *bases) independent[b] = 1;
  for (std::size_t s = size; s-- > 0;) {
    if (!independent[s]) continue;
    for (ElementSet rest = static_cast<ElementSet>(s); rest != 0;
         rest &= rest - 1) {
      independent[s & ~(rest & (~rest + 1))] = 1;
    }
  }
  auto rank = std::make_shared<std::vector<std::uint8_t>>(size, 0);
  for (std::size_t s = 0; s < size; ++s) {
    const ElementSet set = static_cast<ElementSet>(s);
    if (independent[s]) {
      (*rank)[s] = static_cast<std::uint8_t>(Cardinality(set));
      continue;
    }
    std::uint8_t best = 0;
    for (ElementSet rest = set; rest != 0; rest &= rest - 1) {
      best = std::max(best, (*rank)[set & ~(rest & (~rest + 1))]);
    }
    (*rank)[s] = best;
  }

  bitmap_ = std::make_shared<const Bitmap>(std::move(bitmap));
  bases_ = std::move(bases);
  rank_ = std::move(rank);
}

Matroid Matroid::FromBitmap(int n, int d, const Bitmap& bitmap) {
  CheckParams(n, d);
  if (bitmap.size() != Binomial(n, d)) {
    throw CardinalityMismatch("bitmap length " + std::to_string(bitmap.size()) +
                              " != C(" + std::to_string(n) + "," +
                              std::to_string(d) + ")");
  }
  if (bitmap.count() == 0) throw EmptyBases("no bases given");
  if (std::string why = FindExchangeViolation(n, d, bitmap); !why.empty()) {
    throw ExchangeViolation(why);
  }
  return Matroid(n, d, bitmap);
}

Matroid Matroid::FromBases(int n, int d, const std::vector<ElementSet>& bases) {
  CheckParams(n, d);
  if (bases.empty()) throw EmptyBases("no bases given");
  const SubsetCodec& codec = CodecFor(n, d);
  Bitmap bitmap(codec.size());
  for (ElementSet b : bases) {
    if (!IsSubset(b, FullSet(n))) {
      throw CardinalityMismatch(SetToString(b) + " not inside {1.." +
                                std::to_string(n) + "}");
    }
    if (Cardinality(b) != d) {
      throw CardinalityMismatch(SetToString(b) + " does not have " +
                                std::to_string(d) + " elements");
    }
    bitmap.set(codec.index(b));
  }
  return FromBitmap(n, d, bitmap);
}

Matroid Matroid::Uniform(int d, int n) {
  CheckParams(n, d);
  Bitmap bitmap(Binomial(n, d));
  for (std::size_t i = 0; i < bitmap.size(); ++i) bitmap.set(i);
  return Matroid(n, d, std::move(bitmap));
}

bool Matroid::IsBasis(ElementSet s) const {
  if (Cardinality(s) != d_ || !IsSubset(s, ground_set())) return false;
  return bitmap_->test(CodecFor(n_, d_).index(s));
}

int Matroid::RankByBasisIntersection(ElementSet s) const {
  int best = 0;
  for (ElementSet b : *bases_) best = std::max(best, Cardinality(b & s));
  return best;
}

std::string Matroid::ToString() const {
  std::string out = "d=" + std::to_string(d_) + " n=" + std::to_string(n_) +
                    " bases=";
  bool first = true;
  for (ElementSet b : *bases_) {
    if (!first) out += ',';
    out += d_ == 0 ? std::string("{}") : SetToCompact(b);
    first = false;
  }
  return out;
}

ElementSet Closure(const Matroid& m, ElementSet s) {
  const int r = m.Rank(s);
  ElementSet out = s;
  for (int e = 1; e <= m.n(); ++e) {
    if (!Contains(s, e) && m.Rank(s | Singleton(e)) == r) out |= Singleton(e);
  }
  return out;
}

bool IsFlat(const Matroid& m, ElementSet s) { return Closure(m, s) == s; }

std::vector<Flat> Flats(const Matroid& m) {
  std::vector<Flat> out;
  const ElementSet limit = FullSet(m.n());
  for (ElementSet s = 0;; ++s) {
    if (IsFlat(m, s)) out.push_back({s, m.Rank(s)});
    if (s == limit) break;
  }
  std::sort(out.begin(), out.end(), [](const Flat& a, const Flat& b) {
    return std::tie(a.rank, a.elements) < std::tie(b.rank, b.elements);
  });
  return out;
}

std::vector<ElementSet> Circuits(const Matroid& m) {
  std::vector<ElementSet> out;
  const ElementSet limit = FullSet(m.n());
  for (ElementSet s = 1;; ++s) {
    if (!m.IsIndependent(s)) {
      bool minimal = true;
      for (ElementSet rest = s; rest != 0 && minimal; rest &= rest - 1) {
        minimal = m.IsIndependent(s & ~(rest & (~rest + 1)));
      }
      if (minimal) out.push_back(s);
    }
    if (s == limit) break;
  }
  return out;
}

std::vector<Flat> CyclicFlats(const Matroid& m) {
  std::vector<Flat> out;
  for (const Flat& f : Flats(m)) {
    // F is cyclic iff no element of F is a coloop of M|F.
    bool cyclic = true;
    for (int e : Elements(f.elements)) {
      if (m.Rank(f.elements & ~Singleton(e)) < f.rank) {
        cyclic = false;
        break;
      }
    }
    if (cyclic) out.push_back(f);
  }
  return out;
}

ElementSet Loops(const Matroid& m) {
  ElementSet covered = 0;
  for (ElementSet b : m.bases()) covered |= b;
  return m.ground_set() & ~covered;
}

ElementSet Coloops(const Matroid& m) {
  ElementSet common = m.ground_set();
  for (ElementSet b : m.bases()) common &= b;
  return common;
}

bool IsUniform(const Matroid& m) {
  return m.num_bases() == Binomial(m.n(), m.d());
}

Matroid Dual(const Matroid& m) {
  const SubsetCodec& codec = CodecFor(m.n(), m.n() - m.d());
  Bitmap bitmap(codec.size());
  for (ElementSet b : m.bases()) {
    bitmap.set(codec.index(m.ground_set() & ~b));
  }
  return Matroid::FromBitmap(m.n(), m.n() - m.d(), bitmap);
}

Matroid Restriction(const Matroid& m, ElementSet f) {
  f &= m.ground_set();
  const int r = m.Rank(f);
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases()) {
    if (Cardinality(b & f) == r) bases.push_back(Compress(b & f, f));
  }
  return Matroid::FromBases(Cardinality(f), r, bases);
}

Matroid Contraction(const Matroid& m, ElementSet f) {
  f &= m.ground_set();
  const int r = m.Rank(f);
  const ElementSet rest = m.ground_set() & ~f;
  std::vector<ElementSet> bases;
  for (ElementSet b : m.bases()) {
    if (Cardinality(b & f) == r) bases.push_back(Compress(b & rest, rest));
  }
  return Matroid::FromBases(Cardinality(rest), m.d() - r, bases);
}

Matroid Deletion(const Matroid& m, ElementSet f) {
  return Restriction(m, m.ground_set() & ~f);
}

Matroid DirectSum(const Matroid& a, const Matroid& b) {
  std::vector<ElementSet> bases;
  bases.reserve(a.num_bases() * b.num_bases());
  for (ElementSet x : a.bases()) {
    for (ElementSet y : b.bases()) bases.push_back(x | (y << a.n()));
  }
  return Matroid::FromBases(a.n() + b.n(), a.d() + b.d(), bases);
}

std::vector<ElementSet> ConnectedComponents(const Matroid& m) {
  std::vector<int> parent(m.n() + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ElementSet c : Circuits(m)) {
    const std::vector<int> elements = Elements(c);
    for (std::size_t i = 1; i < elements.size(); ++i) {
      parent[find(elements[i])] = find(elements[0]);
    }
  }
  std::map<int, ElementSet> parts;
  for (int e = 1; e <= m.n(); ++e) parts[find(e)] |= Singleton(e);
  std::vector<ElementSet> out;
  for (const auto& [root, part] : parts) out.push_back(part);
  std::sort(out.begin(), out.end(), [](ElementSet a, ElementSet b) {
    return std::countr_zero(a) < std::countr_zero(b);
  });
  return out;
}

bool IsConnected(const Matroid& m) { return ConnectedComponents(m).size() == 1; }

Matroid Relabel(const Matroid& m, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != m.n()) {
    throw InvalidParams("permutation length mismatch");
  }
  std::vector<ElementSet> bases;
  bases.reserve(m.num_bases());
  for (ElementSet b : m.bases()) {
    ElementSet image = 0;
    for (int e : Elements(b)) image |= Singleton(perm[e - 1]);
    bases.push_back(image);
  }
  return Matroid::FromBases(m.n(), m.d(), bases);
}

namespace {

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Matroid& m)
      : m_(m), codec_(CodecFor(m.n(), m.d())), perm_(m.n(), 0) {
    std::vector<int> degree(m.n() + 1, 0);
    for (ElementSet b : m.bases()) {
      for (int e : Elements(b)) ++degree[e];
    }
    std::vector<int> order(m.n());
    std::iota(order.begin(), order.end(), 1);
    std::stable_sort(order.begin(), order.end(), [&degree](int x, int y) {
      return degree[x] < degree[y];
    });
    // Elements of equal degree form a block; a block occupies a fixed range
    // of new labels and is permuted freely inside it.
    int label = 1;
    for (std::size_t i = 0; i < order.size();) {
      std::size_t j = i;
      while (j < order.size() && degree[order[j]] == degree[order[i]]) ++j;
      Block block;
      block.elements.assign(order.begin() + i, order.begin() + j);
      for (std::size_t t = i; t < j; ++t) block.labels.push_back(label++);
      blocks_.push_back(std::move(block));
      i = j;
    }
  }

  Bitmap Run() {
    Visit(0);
    return best_;
  }

 private:
  struct Block {
    std::vector<int> elements;
    std::vector<int> labels;
  };

  void Visit(std::size_t block_index) {
    if (block_index == blocks_.size()) {
      Evaluate();
      return;
    }
    Block& block = blocks_[block_index];
    std::vector<int> labels = block.labels;
    do {
      for (std::size_t i = 0; i < labels.size(); ++i) {
        perm_[block.elements[i] - 1] = labels[i];
      }
      Visit(block_index + 1);
    } while (std::next_permutation(labels.begin(), labels.end()));
  }

  void Evaluate() {
    Bitmap image(codec_.size());
    for (ElementSet b : m_.bases()) {
      ElementSet mapped = 0;
      for (ElementSet rest = b; rest != 0; rest &= rest - 1) {
        mapped |= Singleton(perm_[std::countr_zero(rest)]);
      }
      image.set(codec_.index(mapped));
    }
    if (!have_best_ || image < best_) {
      best_ = std::move(image);
      have_best_ = true;
    }
  }

  const Matroid& m_;
  const SubsetCodec& codec_;
  std::vector<int> perm_;
  std::vector<Block> blocks_;
  Bitmap best_;
  bool have_best_ = false;
};

}  // namespace

Bitmap CanonicalForm(const Matroid& m, int max_n) {
  if (m.n() > max_n) {
    throw LimitExceeded("isomorphism search limited to n <= " +
                        std::to_string(max_n));
  }
  return CanonicalSearch(m).Run();
}

bool IsIsomorphic(const Matroid& a, const Matroid& b, int max_n) {
  if (a.n() != b.n() || a.d() != b.d() || a.num_bases() != b.num_bases()) {
    return false;
  }
  return CanonicalForm(a, max_n) == CanonicalForm(b, max_n);
}

}  // namespace splitmat
