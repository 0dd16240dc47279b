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

#include <map>
#include <set>

#include <gtest/gtest.h>
#include <json.hpp>

#include "splitmat/census.h"
#include "splitmat/errors.h"
#include "splitmat/split_analysis.h"
#include "test_support.h"

namespace splitmat {
namespace {

// Class count from first principles: every bitmap, exchange axiom by brute
// force, classes keyed by the smallest permuted basis list.
std::size_t OracleClassCount(int d, int n) {
  const std::vector<ElementSet> subsets = testing::AllSubsetsOfSize(n, d);
  std::set<std::vector<ElementSet>> classes;
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    perms.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << subsets.size()); ++mask) {
    std::vector<ElementSet> bases;
    for (std::size_t i = 0; i < subsets.size(); ++i) {
      if ((mask >> i) & 1u) bases.push_back(subsets[i]);
    }
    if (!testing::OracleExchange(bases)) continue;
    std::vector<ElementSet> best;
    for (const std::vector<int>& p : perms) {
      std::vector<ElementSet> image = testing::Permute(bases, p);
      if (best.empty() || image < best) best = std::move(image);
    }
    classes.insert(std::move(best));
  }
  return classes.size();
}

TEST(EnumerationTest, TableCounts) {
  const std::map<std::pair<int, int>, std::size_t> expected = {
      {{2, 4}, 7},  {{2, 5}, 13}, {{2, 6}, 23}, {{3, 5}, 13},
      {{3, 6}, 38}, {{4, 5}, 5},  {{4, 6}, 23}, {{5, 6}, 6}};
  for (const auto& [dn, count] : expected) {
    EXPECT_EQ(EnumerateMatroids(dn.first, dn.second).size(), count)
        << dn.first << " " << dn.second;
  }
}

TEST(EnumerationTest, MatchesBruteForceOracle) {
  for (auto [d, n] : std::vector<std::pair<int, int>>{
           {1, 3}, {2, 3}, {1, 4}, {2, 4}, {3, 4}, {2, 5}, {3, 5}}) {
    EXPECT_EQ(EnumerateMatroids(d, n).size(), OracleClassCount(d, n)) << d << " " << n;
  }
}

TEST(EnumerationTest, RankCorankSymmetryAndDualityBijection) {
  for (int n = 1; n <= 6; ++n) {
    for (int d = 0; d <= n; ++d) {
      const std::vector<Matroid> here = EnumerateMatroids(d, n);
      const std::vector<Matroid> there = EnumerateMatroids(n - d, n);
      ASSERT_EQ(here.size(), there.size());
      std::set<Bitmap> images;
      for (const Matroid& m : here) images.insert(CanonicalForm(Dual(m)));
      std::set<Bitmap> targets;
      for (const Matroid& m : there) targets.insert(m.bitmap());
      ASSERT_EQ(images, targets) << d << " " << n;
    }
  }
}

TEST(EnumerationTest, ParallelMatchesSerial) {
  EnumerationOptions options;
  options.jobs = 3;
  const std::vector<Matroid> parallel = EnumerateMatroids(3, 6, options);
  EXPECT_EQ(parallel, EnumerateMatroids(3, 6));
}

TEST(EnumerationTest, Guards) {
  EXPECT_THROW(EnumerateMatroids(3, 7), LimitExceeded);
  EXPECT_THROW(EnumerateMatroids(3, 2), InvalidParams);
  EnumerationOptions small;
  small.max_positions = 10;
  EXPECT_THROW(EnumerateMatroids(2, 6, small), LimitExceeded);
}

TEST(EnumerationTest, ConnectedNonSplitRankThreeOnSix) {
  std::vector<Matroid> non_split;
  std::size_t connected = 0;
  for (const Matroid& m : EnumerateMatroids(3, 6)) {
    if (!IsConnected(m)) continue;
    ++connected;
    if (!IsSplit(m)) non_split.push_back(m);
  }
  EXPECT_EQ(connected, 15u);
  ASSERT_EQ(non_split.size(), 4u);
  EXPECT_TRUE(testing::ContainsIsomorphic(non_split, testing::CrossingFlacets()));
  EXPECT_TRUE(testing::ContainsIsomorphic(non_split, Dual(testing::CrossingFlacets())));
  EXPECT_TRUE(testing::ContainsIsomorphic(non_split, testing::NestedNonSplitMatrix()));
  EXPECT_TRUE(testing::ContainsIsomorphic(non_split, testing::FourthExcludedMinor()));
}

TEST(CorpusTest, RoundTripIsBitExact) {
  const std::vector<Matroid> all = EnumerateMatroids(3, 6);
  const std::string text = WriteCorpus(3, 6, all);
  EXPECT_EQ(text.substr(0, text.find('\n')), "3 6 38");
  const Corpus corpus = ParseCorpus(text);
  EXPECT_EQ(corpus.Matroids(), all);
  EXPECT_EQ(WriteCorpus(3, 6, corpus.Matroids()), text);
}

TEST(CorpusTest, LinePositionsFollowTheCodec) {
  // {3,4} is the last 2-subset of [4] in lexicographic order.
  EXPECT_EQ(ParseCorpus("2 4 1\n*****0\n").Matroids().front(), testing::M5());
  EXPECT_EQ(CorpusLine(testing::M5()), "*****0");
  EXPECT_EQ(ParseCorpus("2 4 1\n***0**\n").Matroids().front(),
            testing::FromNonBases(2, 4, {"23"}));
}

TEST(CorpusTest, StrictErrors) {
  EXPECT_THROW(ParseCorpus("2 4 1\n*****\n"), FormatError);
  EXPECT_THROW(ParseCorpus("2 4 1\n****x*\n"), FormatError);
  EXPECT_THROW(ParseCorpus("2 4 1\n****** \n"), FormatError);
  EXPECT_THROW(ParseCorpus("2 4\n******\n"), FormatError);
  EXPECT_THROW(ParseCorpus(""), FormatError);
  EXPECT_THROW(ParseCorpus("2 4 2\n******\n"), FormatError);
  // Bases {1,2} and {3,4} only.
  EXPECT_THROW(ParseCorpus("2 4 1\n*0000*\n"), ExchangeViolation);
  EXPECT_THROW(ParseCorpus("2 4 1\n000000\n"), EmptyBases);
  try {
    ParseCorpus("2 4 2\n******\n*****\n");
    FAIL();
  } catch (const FormatError& e) {
    EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos);
  }
}

TEST(CorpusTest, LenientFlagsAndContinues) {
  ParseOptions lenient;
  lenient.strict = false;
  const Corpus corpus = ParseCorpus("2 4 4\n******\n*0000*\n**\n*****0\n", lenient);
  ASSERT_EQ(corpus.records.size(), 4u);
  EXPECT_TRUE(corpus.records[0].error.empty());
  EXPECT_FALSE(corpus.records[1].error.empty());
  EXPECT_EQ(corpus.records[1].line_number, 3u);
  EXPECT_FALSE(corpus.records[2].error.empty());
  EXPECT_EQ(corpus.Matroids().size(), 2u);
  EXPECT_TRUE(corpus.warnings.empty());
  EXPECT_EQ(ParseCorpus("2 4 3\n******\n", lenient).warnings.size(), 1u);
}

TEST(CorpusTest, RevlexConversionAndDetection) {
  const std::vector<Matroid> all = EnumerateMatroids(2, 6);
  const std::string text = WriteCorpus(2, 6, all, SubsetOrder::kRevlex);
  ParseOptions revlex;
  revlex.order = SubsetOrder::kRevlex;
  EXPECT_EQ(ParseCorpus(text, revlex).Matroids(), all);
  ParseOptions detect;
  detect.order = SubsetOrder::kAuto;
  const Corpus detected = ParseCorpus(text, detect);
  EXPECT_EQ(detected.order, SubsetOrder::kRevlex);
  EXPECT_EQ(detected.Matroids(), all);
  EXPECT_EQ(ParseCorpus(WriteCorpus(2, 6, all), detect).order, SubsetOrder::kLex);
}

// For n = 2d every revlex line is also a valid lex line, so detection keeps lex.
TEST(CorpusTest, RevlexDetectionAmbiguousAtHalfRank) {
  const std::vector<Matroid> all = EnumerateMatroids(3, 6);
  ParseOptions detect;
  detect.order = SubsetOrder::kAuto;
  const Corpus detected = ParseCorpus(WriteCorpus(3, 6, all, SubsetOrder::kRevlex), detect);
  EXPECT_EQ(detected.order, SubsetOrder::kLex);
  EXPECT_EQ(detected.Matroids().size(), all.size());
}

TEST(CorpusTest, WriteRejectsMixedParameters) {
  EXPECT_THROW(WriteCorpus(2, 4, {testing::M5(), Matroid::Uniform(2, 5)}),
               MixedParameters);
}

TEST(CensusStatsTest, RoundHalfUp) {
  EXPECT_EQ(RoundHalfUpPercent(Rational(1, 200)), 1);
  EXPECT_EQ(RoundHalfUpPercent(Rational(1, 201)), 0);
  EXPECT_EQ(RoundHalfUpPercent(Rational(9, 38)), 24);
  EXPECT_EQ(RoundHalfUpPercent(Rational(34, 38)), 89);
  EXPECT_EQ(RoundHalfUpPercent(Rational(1)), 100);
}

TEST(CensusStatsTest, PaperPercentages) {
  const CensusRecord r36 = CensusStats(EnumerateMatroids(3, 6));
  EXPECT_EQ(r36.total_count, 38u);
  EXPECT_EQ(r36.connected_count, 15u);
  EXPECT_EQ(r36.paving_pct(), 24);
  EXPECT_EQ(r36.split_pct(), 89);
  EXPECT_LE(r36.sparse_paving_count, r36.paving_count);

  const CensusRecord r26 = CensusStats(EnumerateMatroids(2, 6), 2);
  EXPECT_EQ(r26.paving_pct(), 43);
  EXPECT_EQ(r26.split_pct(), 100);
  EXPECT_EQ(CensusStats(EnumerateMatroids(2, 4)).paving_pct(), 57);
  for (int n = 2; n <= 6; ++n) {
    const CensusRecord r = CensusStats(EnumerateMatroids(2, n));
    EXPECT_EQ(r.split_count, r.total_count) << n;
  }
}

TEST(CensusStatsTest, Errors) {
  EXPECT_THROW(CensusStats({testing::M5(), Matroid::Uniform(2, 5)}), MixedParameters);
  EXPECT_THROW(CensusStats({}), InvalidParams);
}

TEST(CensusStatsTest, CsvAndJson) {
  const CensusRecord r = CensusStats(EnumerateMatroids(3, 6));
  EXPECT_EQ(CensusCsv({r}),
            "d,n,total,connected,paving,sparse_paving,split,nested,paving_pct,"
            "split_pct\n3,6,38,15,9," +
                std::to_string(r.sparse_paving_count) + ",34," +
                std::to_string(r.nested_count) + ",24,89\n");
  const auto json = nlohmann::json::parse(CensusJson({r}));
  EXPECT_EQ(json["schema"], "splitmat/1");
  EXPECT_EQ(json["census"][0]["paving_fraction"], "9/38");
  EXPECT_EQ(json["census"][0]["split_fraction"], "17/19");
  EXPECT_EQ(json["census"][0]["split_pct"], 89);
}

}  // namespace
}  // namespace splitmat
