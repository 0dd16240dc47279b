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

// Exhaustive enumeration of small matroids, the '*'/'0' corpus format and
// census statistics.

#ifndef SPLITMAT_CENSUS_H_
#define SPLITMAT_CENSUS_H_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "splitmat/linear_algebra.h"
#include "splitmat/matroid.h"

namespace splitmat {

inline constexpr std::size_t kDefaultMaxPositions = 20;

struct EnumerationOptions {
  // Refuse C(n,d) above this.
  std::size_t max_positions = kDefaultMaxPositions;
  int max_n = kDefaultIsomorphismLimit;
  int jobs = 1;
};

// One representative per isomorphism class, each in canonical labeling and
// sorted by canonical bitmap.
std::vector<Matroid> EnumerateMatroids(int d, int n,
                                       const EnumerationOptions& options = {});

enum class SubsetOrder {
  kLex,
  // Colexicographic, as used by some external databases.
  kRevlex,
  // Lex unless some line only validates under revlex.
  kAuto,
};

struct ParseOptions {
  bool strict = true;
  SubsetOrder order = SubsetOrder::kLex;
};

struct CorpusRecord {
  std::size_t line_number = 0;
  std::optional<Matroid> matroid;
  // Empty when the line is a valid matroid.
  std::string error;
};

struct Corpus {
  int d = 0;
  int n = 0;
  std::size_t declared_count = 0;
  // Ordering actually used to decode lines.
  SubsetOrder order = SubsetOrder::kLex;
  std::vector<CorpusRecord> records;
  // Lenient-mode problems not tied to one record.
  std::vector<std::string> warnings;

  std::vector<Matroid> Matroids() const;
};

// Strict mode throws FormatError on malformed input and ExchangeViolation
// on an invalid line; lenient mode records both and keeps going. Header
// errors always throw.
Corpus ParseCorpus(std::istream& in, const ParseOptions& options = {});
Corpus ParseCorpus(const std::string& text, const ParseOptions& options = {});

// Every matroid must have rank d on n elements (MixedParameters otherwise).
void WriteCorpus(std::ostream& out, int d, int n,
                 const std::vector<Matroid>& matroids,
                 SubsetOrder order = SubsetOrder::kLex);
std::string WriteCorpus(int d, int n, const std::vector<Matroid>& matroids,
                        SubsetOrder order = SubsetOrder::kLex);

// '*'/'0' line for one matroid.
std::string CorpusLine(const Matroid& m, SubsetOrder order = SubsetOrder::kLex);

struct CensusRecord {
  int d = 0;
  int n = 0;
  std::size_t total_count = 0;
  std::size_t connected_count = 0;
  std::size_t paving_count = 0;
  std::size_t sparse_paving_count = 0;
  std::size_t split_count = 0;
  std::size_t nested_count = 0;

  Rational paving_fraction() const;
  Rational split_fraction() const;
  int paving_pct() const;
  int split_pct() const;
};

// Nearest integer percentage, halves rounded up.
int RoundHalfUpPercent(const Rational& fraction);

// Throws MixedParameters if (d,n) differ and InvalidParams if empty.
CensusRecord CensusStats(const std::vector<Matroid>& matroids, int jobs = 1);

std::string CensusCsv(const std::vector<CensusRecord>& records);
std::string CensusJson(const std::vector<CensusRecord>& records);

}  // namespace splitmat

#endif  // SPLITMAT_CENSUS_H_
