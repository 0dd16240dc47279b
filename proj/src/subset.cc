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

#include "splitmat/subset.h"

#include <algorithm>
#include <cctype>
#include <functional>

#include "splitmat/errors.h"

namespace splitmat {

ElementSet MakeSet(const std::vector<int>& elements) {
  ElementSet s = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxElements) {
      throw InvalidParams("element " + std::to_string(e) + " out of range");
    }
    s |= Singleton(e);
  }
  return s;
}

std::vector<int> Elements(ElementSet s) {
  std::vector<int> out;
  out.reserve(Cardinality(s));
  while (s != 0) {
    out.push_back(std::countr_zero(s) + 1);
    s &= s - 1;
  }
  return out;
}

std::string SetToString(ElementSet s) {
  std::string out = "{";
  bool first = true;
  for (int e : Elements(s)) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

std::string SetToCompact(ElementSet s) {
  const std::vector<int> elements = Elements(s);
  const bool digits = std::all_of(elements.begin(), elements.end(),
                                  [](int e) { return e <= 9; });
  std::string out;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (!digits && i > 0) out += '.';
    out += std::to_string(elements[i]);
  }
  return out;
}

ElementSet ParseCompactSet(std::string_view text) {
  std::string body(text);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw FormatError("unbalanced braces in set");
    body = body.substr(1, body.size() - 2);
    std::replace(body.begin(), body.end(), ',', '.');
    if (body.empty()) return 0;
  }
  if (body.empty()) throw FormatError("empty set token");
  std::vector<int> elements;
  const bool dotted = body.find('.') != std::string::npos;
  if (dotted) {
    std::size_t start = 0;
    while (start <= body.size()) {
      const std::size_t end = std::min(body.find('.', start), body.size());
      const std::string piece = body.substr(start, end - start);
      if (piece.empty() ||
          !std::all_of(piece.begin(), piece.end(),
                       [](unsigned char c) { return std::isdigit(c); })) {
        throw FormatError("bad element '" + piece + "'");
      }
      elements.push_back(std::stoi(piece));
      start = end + 1;
    }
  } else {
    for (char c : body) {
      if (!std::isdigit(static_cast<unsigned char>(c)) || c == '0') {
        throw FormatError(std::string("bad element '") + c + "'");
      }
      elements.push_back(c - '0');
    }
  }
  ElementSet s = 0;
  for (int e : elements) {
    if (e < 1 || e > kMaxElements) {
      throw FormatError("element " + std::to_string(e) + " out of range");
    }
    if (Contains(s, e)) {
      throw FormatError("repeated element " + std::to_string(e));
    }
    s |= Singleton(e);
  }
  return s;
}

std::uint64_t Binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) / i;
  }
  return result;
}

namespace {

void LexSubsets(int n, int k, int next, ElementSet partial,
                std::vector<ElementSet>& out) {
  if (k == 0) {
    out.push_back(partial);
    return;
  }
  for (int e = next; e <= n - k + 1; ++e) {
    LexSubsets(n, k - 1, e + 1, partial | Singleton(e), out);
  }
}

}  // namespace

SubsetCodec::SubsetCodec(int n, int k) : n_(n), k_(k) {
  if (n < 0 || n > kMaxElements || k < 0 || k > n) {
    throw InvalidParams("codec parameters n=" + std::to_string(n) +
                        " k=" + std::to_string(k));
  }
  subsets_.reserve(Binomial(n, k));
  LexSubsets(n, k, 1, 0, subsets_);
  binom_.assign(n + 1, std::vector<std::uint64_t>(k + 1, 0));
  for (int a = 0; a <= n; ++a) {
    for (int b = 0; b <= k; ++b) binom_[a][b] = Binomial(a, b);
  }
}

std::size_t SubsetCodec::index(ElementSet s) const {
  std::size_t rank = 0;
  int previous = 0;
  int i = 1;
  for (int c : Elements(s)) {
    for (int j = previous + 1; j < c; ++j) rank += binom_[n_ - j][k_ - i];
    previous = c;
    ++i;
  }
  return rank;
}

std::vector<ElementSet> ColexSubsets(int n, int k) {
  std::vector<ElementSet> out;
  LexSubsets(n, k, 1, 0, out);
  // Colex order compares the largest differing element, which for bit
  // masks is plain numeric order.
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Bitmap::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::string Bitmap::ToString(char one, char zero) const {
  std::string out(size_, zero);
  for (std::size_t i = 0; i < size_; ++i) {
    if (test(i)) out[i] = one;
  }
  return out;
}

std::size_t BitmapHash::operator()(const Bitmap& b) const {
  std::size_t h = std::hash<std::size_t>{}(b.size());
  for (std::uint64_t w : b.words()) {
    h ^= std::hash<std::uint64_t>{}(w) + 0x9e3779b97f4a7c15ULL + (h << 6) +
         (h >> 2);
  }
  return h;
}

}  // namespace splitmat
