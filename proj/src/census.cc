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

#include "splitmat/census.h"

#include <algorithm>
#include <atomic>
#include <bit>
#include <istream>
#include <mutex>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "splitmat/errors.h"
#include "splitmat/split_analysis.h"

namespace splitmat {
namespace {

using Candidate = std::uint32_t;

// Depth-first search over basis bitmaps. Position i of the lexicographic
// codec is bit i of a candidate. Each exchange condition (A, B, a) is
// checked at the deepest position it mentions, so a failing prefix is cut
// as soon as it is decided.
class Enumerator {
 public:
  Enumerator(int d, int n) : d_(d), n_(n), codec_(CodecFor(n, d)) {
    const std::size_t size = codec_.size();
    checks_.resize(size);
    for (std::size_t i = 0; i < size; ++i) {
      const ElementSet a = codec_.subset(i);
      for (std::size_t j = 0; j < size; ++j) {
        if (i == j) continue;
        const ElementSet b = codec_.subset(j);
        for (int x : Elements(a & ~b)) {
          Candidate targets = 0;
          for (int y : Elements(b & ~a)) {
            const ElementSet swapped = (a & ~Singleton(x)) | Singleton(y);
            targets |= Candidate{1} << codec_.index(swapped);
          }
          const std::size_t key = std::max<std::size_t>(
              std::max(i, j), std::bit_width(targets) - 1);
          checks_[key].push_back(
              {(Candidate{1} << i) | (Candidate{1} << j), targets});
        }
      }
    }
  }

  std::size_t size() const { return codec_.size(); }

  bool Consistent(Candidate candidate, std::size_t depth) const {
    for (const Check& check : checks_[depth]) {
      if ((candidate & check.pair) == check.pair &&
          (candidate & check.targets) == 0) {
        return false;
      }
    }
    return true;
  }

  template <typename Visit>
  void Search(Candidate candidate, std::size_t depth, Visit& visit) const {
    if (depth == size()) {
      if (candidate != 0) visit(candidate);
      return;
    }
    for (Candidate bit : {Candidate{0}, Candidate{1}}) {
      const Candidate next = candidate | (bit << depth);
      if (Consistent(next, depth)) Search(next, depth + 1, visit);
    }
  }

  Matroid ToMatroid(Candidate candidate) const {
    Bitmap bitmap(size());
    for (std::size_t i = 0; i < size(); ++i) {
      if ((candidate >> i) & 1u) bitmap.set(i);
    }
    return Matroid::FromBitmap(n_, d_, bitmap);
  }

 private:
  struct Check {
    Candidate pair;
    Candidate targets;
  };

  int d_;
  int n_;
  const SubsetCodec& codec_;
  std::vector<std::vector<Check>> checks_;
};

// Lexicographic index of each position of a line in `order`.
std::vector<std::size_t> PositionMap(int d, int n, SubsetOrder order) {
  const SubsetCodec& codec = CodecFor(n, d);
  std::vector<std::size_t> map(codec.size());
  if (order == SubsetOrder::kRevlex) {
    const std::vector<ElementSet> colex = ColexSubsets(n, d);
    for (std::size_t i = 0; i < colex.size(); ++i) {
      map[i] = codec.index(colex[i]);
    }
  } else {
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  }
  return map;
}

std::string LinePrefix(std::size_t line_number) {
  return "line " + std::to_string(line_number) + ": ";
}

// Empty string if `line` is a valid matroid under `map`.
std::string ValidateLine(int d, int n, const std::string& line,
                         const std::vector<std::size_t>& map, Bitmap& out) {
  out = Bitmap(map.size());
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '*') out.set(map[i]);
  }
  if (out.count() == 0) return "no bases";
  return FindExchangeViolation(n, d, out);
}

}  // namespace

std::vector<Matroid> EnumerateMatroids(int d, int n,
                                       const EnumerationOptions& options) {
  if (n < 1 || n > kMaxKernelElements || d < 0 || d > n) {
    throw InvalidParams("invalid (d,n) = (" + std::to_string(d) + "," +
                        std::to_string(n) + ")");
  }
  const std::uint64_t positions = Binomial(n, d);
  if (positions > options.max_positions || positions > 32) {
    throw LimitExceeded("C(" + std::to_string(n) + "," + std::to_string(d) +
                        ") = " + std::to_string(positions) +
                        " exceeds the enumeration limit of " +
                        std::to_string(options.max_positions));
  }
  if (n > options.max_n) {
    throw LimitExceeded("isomorphism search limited to n <= " +
                        std::to_string(options.max_n));
  }
  const Enumerator enumerator(d, n);

  // Fix the first few positions to obtain independent work items.
  const int jobs = std::max(1, options.jobs);
  const std::size_t prefix_depth =
      std::min<std::size_t>(enumerator.size(), jobs == 1 ? 0 : 6);
  std::vector<Candidate> prefixes = {0};
  for (std::size_t depth = 0; depth < prefix_depth; ++depth) {
    std::vector<Candidate> next;
    for (Candidate p : prefixes) {
      for (Candidate bit : {Candidate{0}, Candidate{1}}) {
        const Candidate c = p | (bit << depth);
        if (enumerator.Consistent(c, depth)) next.push_back(c);
      }
    }
    prefixes = std::move(next);
  }

  std::set<Bitmap> classes;
  std::mutex mu;
  std::atomic<std::size_t> cursor{0};
  std::exception_ptr failure;
  auto worker = [&] {
    std::set<Bitmap> local;
    auto visit = [&](Candidate c) {
      local.insert(CanonicalForm(enumerator.ToMatroid(c), options.max_n));
    };
    try {
      for (std::size_t i = cursor++; i < prefixes.size(); i = cursor++) {
        enumerator.Search(prefixes[i], prefix_depth, visit);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(mu);
      failure = std::current_exception();
    }
    std::lock_guard<std::mutex> lock(mu);
    classes.merge(local);
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Matroid> out;
  out.reserve(classes.size());
  for (const Bitmap& b : classes) out.push_back(Matroid::FromBitmap(n, d, b));
  return out;
}

std::vector<Matroid> Corpus::Matroids() const {
  std::vector<Matroid> out;
  for (const CorpusRecord& r : records) {
    if (r.matroid) out.push_back(*r.matroid);
  }
  return out;
}

Corpus ParseCorpus(std::istream& in, const ParseOptions& options) {
  Corpus corpus;
  std::string line;
  if (!std::getline(in, line)) {
    throw FormatError(LinePrefix(1) + "missing header");
  }
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> corpus.d >> corpus.n >> corpus.declared_count) ||
        (header >> extra)) {
      throw FormatError(LinePrefix(1) + "expected \"d n count\"");
    }
  }
  if (corpus.n < 1 || corpus.n > kMaxKernelElements || corpus.d < 0 ||
      corpus.d > corpus.n) {
    throw FormatError(LinePrefix(1) + "invalid d or n");
  }
  const std::size_t width = Binomial(corpus.n, corpus.d);

  std::vector<std::string> lines;
  std::vector<std::string> format_errors;
  for (std::size_t number = 2; std::getline(in, line); ++number) {
    lines.push_back(line);
    std::string error;
    if (line.size() != width) {
      error = "expected " + std::to_string(width) + " characters, got " +
              std::to_string(line.size());
    } else if (line.find_first_not_of("*0") != std::string::npos) {
      error = "invalid character '" +
              std::string(1, line[line.find_first_not_of("*0")]) + "'";
    }
    if (!error.empty() && options.strict) {
      throw FormatError(LinePrefix(number) + error);
    }
    format_errors.push_back(error);
  }

  corpus.order = options.order;
  if (options.order == SubsetOrder::kAuto) {
    corpus.order = SubsetOrder::kLex;
    const auto lex = PositionMap(corpus.d, corpus.n, SubsetOrder::kLex);
    const auto revlex = PositionMap(corpus.d, corpus.n, SubsetOrder::kRevlex);
    bool lex_ok = true;
    bool revlex_ok = true;
    Bitmap scratch;
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (!format_errors[i].empty()) continue;
      if (lex_ok && !ValidateLine(corpus.d, corpus.n, lines[i], lex, scratch).empty()) {
        lex_ok = false;
      }
      if (revlex_ok &&
          !ValidateLine(corpus.d, corpus.n, lines[i], revlex, scratch).empty()) {
        revlex_ok = false;
      }
    }
    if (!lex_ok && revlex_ok) corpus.order = SubsetOrder::kRevlex;
  }

  const auto map = PositionMap(corpus.d, corpus.n, corpus.order);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    CorpusRecord record;
    record.line_number = i + 2;
    record.error = format_errors[i];
    if (record.error.empty()) {
      Bitmap bitmap;
      record.error = ValidateLine(corpus.d, corpus.n, lines[i], map, bitmap);
      if (record.error.empty()) {
        record.matroid = Matroid::FromBitmap(corpus.n, corpus.d, bitmap);
      } else if (options.strict) {
        if (bitmap.count() == 0) {
          throw EmptyBases(LinePrefix(record.line_number) + record.error);
        }
        throw ExchangeViolation(LinePrefix(record.line_number) + record.error);
      }
    }
    corpus.records.push_back(std::move(record));
  }

  if (corpus.records.size() != corpus.declared_count) {
    const std::string message = "header declares " +
                                std::to_string(corpus.declared_count) +
                                " matroids, found " +
                                std::to_string(corpus.records.size());
    if (options.strict) throw FormatError(message);
    corpus.warnings.push_back(message);
  }
  return corpus;
}

Corpus ParseCorpus(const std::string& text, const ParseOptions& options) {
  std::istringstream in(text);
  return ParseCorpus(in, options);
}

std::string CorpusLine(const Matroid& m, SubsetOrder order) {
  const auto map = PositionMap(m.d(), m.n(), order);
  std::string line(map.size(), '0');
  for (std::size_t i = 0; i < map.size(); ++i) {
    if (m.bitmap().test(map[i])) line[i] = '*';
  }
  return line;
}

void WriteCorpus(std::ostream& out, int d, int n,
                 const std::vector<Matroid>& matroids, SubsetOrder order) {
  if (order == SubsetOrder::kAuto) {
    throw InvalidParams("write order must be lex or revlex");
  }
  for (const Matroid& m : matroids) {
    if (m.d() != d || m.n() != n) {
      throw MixedParameters("expected (" + std::to_string(d) + "," +
                            std::to_string(n) + "), got (" +
                            std::to_string(m.d()) + "," +
                            std::to_string(m.n()) + ")");
    }
  }
  out << d << ' ' << n << ' ' << matroids.size() << '\n';
  for (const Matroid& m : matroids) out << CorpusLine(m, order) << '\n';
}

std::string WriteCorpus(int d, int n, const std::vector<Matroid>& matroids,
                        SubsetOrder order) {
  std::ostringstream out;
  WriteCorpus(out, d, n, matroids, order);
  return out.str();
}

int RoundHalfUpPercent(const Rational& fraction) {
  // floor(100 q + 1/2) = floor((200 p + q') / (2 q')) for q = p / q'.
  const mpz_class num = 200 * fraction.get_num() + fraction.get_den();
  const mpz_class den = 2 * fraction.get_den();
  mpz_class result;
  mpz_fdiv_q(result.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  return static_cast<int>(result.get_si());
}

Rational CensusRecord::paving_fraction() const {
  Rational q(static_cast<long>(paving_count), static_cast<long>(total_count));
  q.canonicalize();
  return q;
}

Rational CensusRecord::split_fraction() const {
  Rational q(static_cast<long>(split_count), static_cast<long>(total_count));
  q.canonicalize();
  return q;
}

int CensusRecord::paving_pct() const {
  return RoundHalfUpPercent(paving_fraction());
}

int CensusRecord::split_pct() const {
  return RoundHalfUpPercent(split_fraction());
}

CensusRecord CensusStats(const std::vector<Matroid>& matroids, int jobs) {
  if (matroids.empty()) throw InvalidParams("empty census");
  CensusRecord record;
  record.d = matroids.front().d();
  record.n = matroids.front().n();
  for (const Matroid& m : matroids) {
    if (m.d() != record.d || m.n() != record.n) {
      throw MixedParameters("census mixes (" + std::to_string(record.d) +
                            "," + std::to_string(record.n) + ") and (" +
                            std::to_string(m.d()) + "," +
                            std::to_string(m.n()) + ")");
    }
  }
  struct Flags {
    bool connected, paving, sparse_paving, split, nested;
  };
  std::vector<Flags> flags(matroids.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < matroids.size(); i = cursor++) {
      const Matroid& m = matroids[i];
      const bool paving = IsPaving(m);
      flags[i] = {IsConnected(m), paving, paving && IsPaving(Dual(m)),
                  IsSplit(m), IsNested(m)};
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  record.total_count = matroids.size();
  for (const Flags& f : flags) {
    record.connected_count += f.connected;
    record.paving_count += f.paving;
    record.sparse_paving_count += f.sparse_paving;
    record.split_count += f.split;
    record.nested_count += f.nested;
  }
  return record;
}

std::string CensusCsv(const std::vector<CensusRecord>& records) {
  std::ostringstream out;
  out << "d,n,total,connected,paving,sparse_paving,split,nested,paving_pct,"
         "split_pct\n";
  for (const CensusRecord& r : records) {
    out << r.d << ',' << r.n << ',' << r.total_count << ','
        << r.connected_count << ',' << r.paving_count << ','
        << r.sparse_paving_count << ',' << r.split_count << ','
        << r.nested_count << ',' << r.paving_pct() << ',' << r.split_pct()
        << '\n';
  }
  return out.str();
}

std::string CensusJson(const std::vector<CensusRecord>& records) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const CensusRecord& r : records) {
    rows.push_back({{"d", r.d},
                    {"n", r.n},
                    {"total", r.total_count},
                    {"connected", r.connected_count},
                    {"paving", r.paving_count},
                    {"sparse_paving", r.sparse_paving_count},
                    {"split", r.split_count},
                    {"nested", r.nested_count},
                    {"paving_fraction", RationalToString(r.paving_fraction())},
                    {"split_fraction", RationalToString(r.split_fraction())},
                    {"paving_pct", r.paving_pct()},
                    {"split_pct", r.split_pct()}});
  }
  nlohmann::ordered_json doc = {{"schema", "splitmat/1"}, {"census", rows}};
  return doc.dump(2) + "\n";
}

}  // namespace splitmat
