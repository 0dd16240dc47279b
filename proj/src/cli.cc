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

#include "splitmat/cli.h"

#include <atomic>
#include <fstream>
#include <functional>
#include <iostream>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "splitmat/census.h"
#include "splitmat/lifts.h"
#include "splitmat/split_analysis.h"
#include "splitmat/subdivision.h"

namespace splitmat {
namespace {

using Json = nlohmann::ordered_json;

struct CliConfig {
  std::string subcommand;
  std::string input;
  std::string literal;
  std::string output;
  std::string format = "text";
  bool strict = false;
  bool lenient = false;
  std::size_t max_vertices = kDefaultMaxVertices;
  int max_n = kDefaultIsomorphismLimit;
  int jobs = 1;
  bool verbose = false;

  int d = -1;
  int n = -1;
  bool enumerate = false;
  std::string order = "lex";
  std::string write_corpus;

  std::string kind = "series-free";
  int k = -1;
  std::string flat;

  std::string heights;
  bool summary = false;
};

SubsetOrder OrderFromName(const std::string& name) {
  if (name == "revlex") return SubsetOrder::kRevlex;
  if (name == "auto") return SubsetOrder::kAuto;
  return SubsetOrder::kLex;
}

std::string JoinCompact(const std::vector<ElementSet>& sets) {
  std::string out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i > 0) out += ',';
    out += SetToCompact(sets[i]);
  }
  return out;
}

Json ElementsJson(ElementSet s) { return Json(Elements(s)); }

std::string Bool(bool b) { return b ? "true" : "false"; }

// One input item: a matroid or a lenient-mode parse failure.
struct Item {
  std::size_t line_number = 0;
  std::optional<Matroid> matroid;
  std::string error;
};

std::vector<Item> LoadItems(const CliConfig& config, std::istream& stdin_stream) {
  if (!config.literal.empty() && !config.input.empty()) {
    throw InvalidParams("give either a matroid literal or --input, not both");
  }
  if (!config.literal.empty()) {
    return {Item{0, ParseMatroidLiteral(config.literal), ""}};
  }
  if (config.input.empty()) {
    throw InvalidParams("no matroid given: pass a literal or --input");
  }
  const ParseOptions options{!config.lenient, OrderFromName(config.order)};
  Corpus corpus;
  if (config.input == "-") {
    corpus = ParseCorpus(stdin_stream, options);
  } else {
    std::ifstream file(config.input);
    if (!file) throw InvalidParams("cannot open " + config.input);
    corpus = ParseCorpus(file, options);
  }
  std::vector<Item> items;
  for (CorpusRecord& r : corpus.records) {
    items.push_back(Item{r.line_number, std::move(r.matroid), r.error});
  }
  return items;
}

// Applies `fn` to every item on `jobs` workers; results keep input order.
// The first failure in input order is rethrown.
std::vector<Json> OrderedMap(const std::vector<Item>& items, int jobs,
                             const std::function<Json(const Item&)>& fn) {
  std::vector<Json> results(items.size());
  std::vector<std::exception_ptr> failures(items.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < items.size(); i = cursor++) {
      try {
        results[i] = fn(items[i]);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  if (jobs <= 1 || items.size() <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
  }
  for (const std::exception_ptr& failure : failures) {
    if (failure) std::rethrow_exception(failure);
  }
  return results;
}

Json ErrorItem(const Item& item) {
  return Json{{"line", item.line_number}, {"error", item.error}};
}

Json ClassifyJson(const ClassificationReport& r) {
  Json flacets = Json::array();
  for (const Flat& f : r.flacets) {
    flacets.push_back({{"elements", ElementsJson(f.elements)}, {"rank", f.rank}});
  }
  Json split = Json::array();
  for (const Flat& f : r.split_flacets) split.push_back(ElementsJson(f.elements));
  Json out = {{"d", r.d},
              {"n", r.n},
              {"connected", r.connected},
              {"is_split", r.is_split},
              {"is_paving", r.is_paving},
              {"is_sparse_paving", r.is_sparse_paving},
              {"is_nested", r.is_nested},
              {"flacets", flacets},
              {"split_flacets", split}};
  if (!r.components.empty()) {
    Json components = Json::array();
    for (const ClassificationReport& c : r.components) {
      Json part = ClassifyJson(c);
      part["support"] = ElementsJson(c.support);
      components.push_back(std::move(part));
    }
    out["components"] = std::move(components);
  }
  return out;
}

std::string FlatList(const Json& sets) {
  std::string out = "[";
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i > 0) out += ',';
    out += SetToString(MakeSet(sets[i].get<std::vector<int>>()));
  }
  return out + "]";
}

void PrintClassifyText(const Json& item, std::ostream& out) {
  if (item.contains("error")) {
    out << "line " << item["line"].get<std::size_t>()
        << ": error: " << item["error"].get<std::string>() << '\n';
    return;
  }
  const Json& r = item["report"];
  out << "matroid: " << item["matroid"].get<std::string>() << '\n';
  out << "connected=" << Bool(r["connected"]) << " is_split=" << Bool(r["is_split"])
      << " is_paving=" << Bool(r["is_paving"])
      << " is_sparse_paving=" << Bool(r["is_sparse_paving"])
      << " is_nested=" << Bool(r["is_nested"]) << '\n';
  if (r.contains("components")) {
    Json supports = Json::array();
    for (const Json& c : r["components"]) supports.push_back(c["support"]);
    out << "components=" << FlatList(supports) << '\n';
    return;
  }
  std::string flacets = "[";
  for (std::size_t i = 0; i < r["flacets"].size(); ++i) {
    const Json& f = r["flacets"][i];
    if (i > 0) flacets += ',';
    flacets += SetToString(MakeSet(f["elements"].get<std::vector<int>>())) +
               ":" + std::to_string(f["rank"].get<int>());
  }
  out << "flacets=" << flacets << "]\n";
  out << "split_flacets=" << FlatList(r["split_flacets"]) << '\n';
}

int CmdClassify(const CliConfig& config, std::istream& in, std::ostream& out) {
  const std::vector<Item> items = LoadItems(config, in);
  const std::vector<Json> results =
      OrderedMap(items, config.jobs, [](const Item& item) {
        if (!item.matroid) return ErrorItem(item);
        Json j = {{"line", item.line_number},
                  {"matroid", FormatMatroidLiteral(*item.matroid)},
                  {"report", ClassifyJson(Classify(*item.matroid))}};
        return j;
      });
  if (config.format == "json") {
    out << Json{{"schema", "splitmat/1"}, {"results", results}}.dump(2) << '\n';
  } else if (config.format == "csv") {
    out << "line,d,n,connected,is_split,is_paving,is_sparse_paving,is_nested,"
           "flacets,split_flacets,error\n";
    for (const Json& item : results) {
      out << item["line"].get<std::size_t>() << ',';
      if (item.contains("error")) {
        out << ",,,,,,,,," << item["error"].get<std::string>() << '\n';
        continue;
      }
      const Json& r = item["report"];
      out << r["d"].get<int>() << ',' << r["n"].get<int>() << ','
          << Bool(r["connected"]) << ',' << Bool(r["is_split"]) << ','
          << Bool(r["is_paving"]) << ',' << Bool(r["is_sparse_paving"]) << ','
          << Bool(r["is_nested"]) << ',' << r["flacets"].size() << ','
          << r["split_flacets"].size() << ",\n";
    }
  } else {
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (i > 0) out << '\n';
      PrintClassifyText(results[i], out);
    }
  }
  return kExitOk;
}

int CmdCensus(const CliConfig& config, std::istream& in, std::ostream& out) {
  std::vector<Matroid> matroids;
  if (config.input.empty()) {
    if (config.d < 0 || config.n < 0) {
      throw InvalidParams("census needs d and n to enumerate");
    }
    EnumerationOptions options;
    options.max_n = config.max_n;
    options.jobs = config.jobs;
    matroids = EnumerateMatroids(config.d, config.n, options);
  } else {
    if (config.enumerate) {
      throw InvalidParams("give either --enumerate or --input, not both");
    }
    CliConfig load = config;
    load.literal.clear();
    for (const Item& item : LoadItems(load, in)) {
      if (item.matroid) matroids.push_back(*item.matroid);
    }
    if (!matroids.empty() && config.d >= 0 &&
        (matroids.front().d() != config.d || matroids.front().n() != config.n)) {
      throw MixedParameters("corpus does not hold (" + std::to_string(config.d) +
                            "," + std::to_string(config.n) + ") matroids");
    }
  }
  const CensusRecord record = CensusStats(matroids, config.jobs);
  if (!config.write_corpus.empty()) {
    std::ofstream file(config.write_corpus);
    if (!file) throw InvalidParams("cannot write " + config.write_corpus);
    WriteCorpus(file, record.d, record.n, matroids);
  }
  if (config.format == "json") {
    out << CensusJson({record});
  } else if (config.format == "csv") {
    out << CensusCsv({record});
  } else {
    out << "d=" << record.d << " n=" << record.n
        << " total=" << record.total_count
        << " connected=" << record.connected_count
        << " paving=" << record.paving_count
        << " sparse_paving=" << record.sparse_paving_count
        << " split=" << record.split_count
        << " nested=" << record.nested_count
        << " paving_pct=" << record.paving_pct()
        << " split_pct=" << record.split_pct() << '\n';
  }
  return kExitOk;
}

Json MatroidJson(const Matroid& m) {
  return Json{{"d", m.d()},
              {"n", m.n()},
              {"literal", FormatMatroidLiteral(m)},
              {"line", CorpusLine(m)}};
}

int CmdLift(const CliConfig& config, std::istream& in, std::ostream& out) {
  const std::vector<Item> items = LoadItems(config, in);
  const std::vector<Json> results =
      OrderedMap(items, config.jobs, [&config](const Item& item) {
        if (!item.matroid) return ErrorItem(item);
        const Matroid& m = *item.matroid;
        Json j = {{"line", item.line_number}, {"kind", config.kind}};
        if (config.kind == "corank") {
          const LiftVector lift = CorankVector(m, config.k < 0 ? m.d() : config.k);
          Json heights = Json::array();
          for (const Rational& h : lift.heights) {
            heights.push_back(RationalToString(h));
          }
          j["k"] = lift.k;
          j["n"] = lift.n;
          j["heights"] = heights;
        } else if (config.kind == "series-free") {
          j["matroid"] = MatroidJson(SeriesFreeLift(m));
        } else if (config.kind == "parallel-cofree") {
          j["matroid"] = MatroidJson(ParallelCofreeLift(m));
        } else {
          if (config.flat.empty()) throw InvalidParams("nested lift needs --flat");
          const ElementSet f = ParseCompactSet(config.flat);
          if (!IsSubset(f, m.ground_set())) {
            throw NotASplitFlacet(SetToString(f));
          }
          j["matroid"] = MatroidJson(NestedMatroid(m, Flat{f, m.Rank(f)}));
        }
        return j;
      });
  if (config.format == "json") {
    out << Json{{"schema", "splitmat/1"}, {"results", results}}.dump(2) << '\n';
    return kExitOk;
  }
  for (const Json& j : results) {
    if (j.contains("error")) {
      out << "line " << j["line"].get<std::size_t>()
          << ": error: " << j["error"].get<std::string>() << '\n';
    } else if (j.contains("heights")) {
      std::string joined;
      for (const Json& h : j["heights"]) {
        if (!joined.empty()) joined += ',';
        joined += h.get<std::string>();
      }
      if (config.format == "csv") {
        out << joined << '\n';
      } else {
        out << "k=" << j["k"].get<int>() << " n=" << j["n"].get<int>()
            << " heights=" << joined << '\n';
      }
    } else if (config.format == "csv") {
      out << j["matroid"]["line"].get<std::string>() << '\n';
    } else {
      out << j["matroid"]["literal"].get<std::string>() << '\n';
    }
  }
  return kExitOk;
}

std::string CellString(int k, int n, const Bitmap& cell) {
  std::vector<ElementSet> sets;
  for (std::size_t v : CellVertices(cell)) sets.push_back(CodecFor(n, k).subset(v));
  return JoinCompact(sets);
}

int CmdRayCheck(const CliConfig& config, std::istream& in, std::ostream& out) {
  const std::vector<Item> items = LoadItems(config, in);
  const std::vector<Json> results =
      OrderedMap(items, config.jobs, [&config](const Item& item) {
        if (!item.matroid) return ErrorItem(item);
        const Matroid& m = *item.matroid;
        const RayReport report = VerifyRay(m, config.max_vertices);
        Json missing = Json::array();
        Json unexpected = Json::array();
        for (const Bitmap& c : report.missing) {
          missing.push_back(CellString(m.d() + 1, m.n() + 2, c));
        }
        for (const Bitmap& c : report.unexpected) {
          unexpected.push_back(CellString(m.d() + 1, m.n() + 2, c));
        }
        return Json{{"line", item.line_number},
                    {"matroid", FormatMatroidLiteral(m)},
                    {"passed", report.passed()},
                    {"cells_match", report.cells_match},
                    {"count_match", report.count_match},
                    {"cone_dim_one", report.cone_dim_one},
                    {"num_cells", report.num_cells},
                    {"expected_cells", report.expected_cells},
                    {"cone_dim", report.cone_dim},
                    {"missing", missing},
                    {"unexpected", unexpected}};
      });
  bool all_passed = true;
  for (const Json& j : results) {
    if (j.contains("error") || !j["passed"].get<bool>()) all_passed = false;
  }
  if (config.format == "json") {
    out << Json{{"schema", "splitmat/1"}, {"results", results}}.dump(2) << '\n';
  } else if (config.format == "csv") {
    out << "line,passed,cells_match,count_match,cone_dim_one,num_cells,"
           "expected_cells,cone_dim,error\n";
    for (const Json& j : results) {
      out << j["line"].get<std::size_t>() << ',';
      if (j.contains("error")) {
        out << ",,,,,,," << j["error"].get<std::string>() << '\n';
        continue;
      }
      out << Bool(j["passed"]) << ',' << Bool(j["cells_match"]) << ','
          << Bool(j["count_match"]) << ',' << Bool(j["cone_dim_one"]) << ','
          << j["num_cells"].get<std::size_t>() << ','
          << j["expected_cells"].get<std::size_t>() << ','
          << j["cone_dim"].get<std::size_t>() << ",\n";
    }
  } else {
    for (const Json& j : results) {
      if (j.contains("error")) {
        out << "line " << j["line"].get<std::size_t>()
            << ": error: " << j["error"].get<std::string>() << '\n';
        continue;
      }
      out << (j["passed"].get<bool>() ? "PASS" : "FAIL") << ' '
          << j["matroid"].get<std::string>()
          << " cells=" << j["num_cells"].get<std::size_t>()
          << " expected=" << j["expected_cells"].get<std::size_t>()
          << " cone_dim=" << j["cone_dim"].get<std::size_t>() << '\n';
      for (const Json& c : j["missing"]) {
        out << "  missing " << c.get<std::string>() << '\n';
      }
      for (const Json& c : j["unexpected"]) {
        out << "  unexpected " << c.get<std::string>() << '\n';
      }
    }
  }
  return all_passed ? kExitOk : kExitCheckFailed;
}

LiftVector ParseHeights(int k, int n, const std::string& text) {
  LiftVector lift{k, n, {}};
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t");
    const auto last = token.find_last_not_of(" \t");
    if (first == std::string::npos) throw FormatError("empty height entry");
    lift.heights.push_back(ParseRational(token.substr(first, last - first + 1)));
  }
  return lift;
}

int CmdSubdivide(const CliConfig& config, std::ostream& out) {
  if (config.k < 0 || config.n < 0 || config.heights.empty()) {
    throw InvalidParams("subdivide needs k, n and a height vector");
  }
  const LiftVector lift = ParseHeights(config.k, config.n, config.heights);
  const Subdivision sub = RegularSubdivision(lift, config.max_vertices);
  const bool matroidal = IsMatroidSubdivision(sub);
  const std::vector<std::size_t> tropical = TropicalLinearSpace(sub);
  const SecondaryConeInfo cone = SecondaryConeDimension(sub);
  const std::vector<std::size_t> degrees = DualDegrees(sub);
  if (config.format == "json") {
    Json cells = Json::array();
    Json certificates = Json::array();
    for (std::size_t c = 0; c < sub.cells.size(); ++c) {
      cells.push_back(CellString(sub.k, sub.n, sub.cells[c]));
      Json a = Json::array();
      for (const Rational& x : sub.certificates[c].a) a.push_back(RationalToString(x));
      certificates.push_back({{"a", a}, {"b", RationalToString(sub.certificates[c].b)}});
    }
    Json edges = Json::array();
    for (auto [x, y] : sub.dual_edges) edges.push_back({x, y});
    out << Json{{"schema", "splitmat/1"},
                {"k", sub.k},
                {"n", sub.n},
                {"cells", cells},
                {"dual_edges", edges},
                {"dual_degrees", degrees},
                {"matroidal", matroidal},
                {"tropical_linear_space", tropical},
                {"solution_dim", cone.solution_dim},
                {"lineality_dim", cone.lineality_dim},
                {"cone_dim", cone.cone_dim},
                {"certificates", certificates}}
               .dump(2)
        << '\n';
    return kExitOk;
  }
  out << ExportSubdivision(sub);
  if (config.summary) {
    auto join = [](const std::vector<std::size_t>& v) {
      std::string s;
      for (std::size_t x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
      return s;
    };
    out << "# cells=" << sub.cells.size() << " dual_edges=" << sub.dual_edges.size()
        << " degrees=" << join(degrees) << '\n'
        << "# matroidal=" << Bool(matroidal) << " tropical_cells=" << join(tropical)
        << " cone_dim=" << cone.cone_dim << '\n';
  }
  return kExitOk;
}

int CmdKnuth(const CliConfig& config, std::ostream& out) {
  if (config.d < 0 || config.n < 0) throw InvalidParams("knuth needs d and n");
  const std::vector<ElementSet> stable = KnuthStableSet(config.d, config.n);
  Rational bound(mpz_class(std::to_string(Binomial(config.n, config.d))),
                 mpz_class(config.n));
  bound.canonicalize();
  const bool is_stable = IsStableInJohnsonGraph(stable);
  const bool meets = Rational(static_cast<long>(stable.size())) >= bound;
  if (config.format == "json") {
    Json sets = Json::array();
    for (ElementSet s : stable) sets.push_back(ElementsJson(s));
    out << Json{{"schema", "splitmat/1"},
                {"d", config.d},
                {"n", config.n},
                {"size", stable.size()},
                {"bound", RationalToString(bound)},
                {"stable", is_stable},
                {"meets_bound", meets},
                {"sets", sets}}
               .dump(2)
        << '\n';
  } else {
    out << "d=" << config.d << " n=" << config.n << " size=" << stable.size()
        << " bound=" << RationalToString(bound) << " stable=" << Bool(is_stable)
        << " meets_bound=" << Bool(meets) << '\n';
    std::string line;
    for (ElementSet s : stable) {
      if (!line.empty()) line += ' ';
      line += SetToCompact(s);
    }
    out << line << '\n';
  }
  return is_stable && meets ? kExitOk : kExitCheckFailed;
}

std::vector<ElementSet> ParseSetList(const std::string& text) {
  std::vector<ElementSet> sets;
  std::istringstream in(text);
  std::string token;
  while (std::getline(in, token, ',')) {
    if (token.empty()) throw FormatError("empty set in \"" + text + "\"");
    sets.push_back(ParseCompactSet(token));
  }
  return sets;
}

}  // namespace

int ExitCodeFor(ErrorClass error_class) {
  switch (error_class) {
    case ErrorClass::kValidation:
      return 2;
    case ErrorClass::kGuard:
      return 3;
    case ErrorClass::kCertificate:
      return 4;
  }
  return 4;
}

Matroid ParseMatroidLiteral(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  int d = -1;
  int n = -1;
  std::optional<std::vector<ElementSet>> bases;
  std::optional<std::vector<ElementSet>> nonbases;
  while (in >> token) {
    const auto eq = token.find('=');
    if (eq == std::string::npos) throw FormatError("expected key=value: " + token);
    const std::string key = token.substr(0, eq);
    const std::string value = token.substr(eq + 1);
    auto parse_int = [&](const std::string& v) {
      std::size_t used = 0;
      int x = 0;
      try {
        x = std::stoi(v, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != v.size()) throw FormatError("bad integer " + v);
      return x;
    };
    if (key == "d") {
      d = parse_int(value);
    } else if (key == "n") {
      n = parse_int(value);
    } else if (key == "bases") {
      bases = value.empty() ? std::vector<ElementSet>{} : ParseSetList(value);
    } else if (key == "nonbases") {
      nonbases = value.empty() ? std::vector<ElementSet>{} : ParseSetList(value);
    } else {
      throw FormatError("unknown key " + key);
    }
  }
  if (d < 0 || n < 0) throw FormatError("literal needs d= and n=");
  if (bases.has_value() == nonbases.has_value()) {
    throw FormatError("literal needs exactly one of bases= and nonbases=");
  }
  if (n < 1 || n > kMaxKernelElements || d > n) {
    throw InvalidParams("invalid (d,n) = (" + std::to_string(d) + "," +
                        std::to_string(n) + ")");
  }
  if (bases) return Matroid::FromBases(n, d, *bases);
  const SubsetCodec& codec = CodecFor(n, d);
  Bitmap bitmap(codec.size());
  for (std::size_t i = 0; i < codec.size(); ++i) bitmap.set(i);
  for (ElementSet s : *nonbases) {
    if (Cardinality(s) != d || !IsSubset(s, FullSet(n))) {
      throw CardinalityMismatch(SetToString(s) + " is not a " +
                                std::to_string(d) + "-subset of [" +
                                std::to_string(n) + "]");
    }
    bitmap.set(codec.index(s), false);
  }
  return Matroid::FromBitmap(n, d, bitmap);
}

std::string FormatMatroidLiteral(const Matroid& m) {
  const SubsetCodec& codec = CodecFor(m.n(), m.d());
  std::vector<ElementSet> nonbases;
  for (std::size_t i = 0; i < codec.size(); ++i) {
    if (!m.bitmap().test(i)) nonbases.push_back(codec.subset(i));
  }
  const std::string prefix =
      "d=" + std::to_string(m.d()) + " n=" + std::to_string(m.n());
  if (nonbases.size() < m.num_bases()) {
    return prefix + " nonbases=" + JoinCompact(nonbases);
  }
  return prefix + " bases=" + JoinCompact(m.bases());
}

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CliConfig config;
  CLI::App app{"Split matroids, lifts and hypersimplex subdivisions"};
  app.name("splitmat");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  auto add_common = [&config](CLI::App* sub) {
    sub->add_option("--input", config.input,
                    "Corpus file ('-' for stdin)");
    sub->add_option("--output", config.output, "Write results here");
    sub->add_option("--format", config.format, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_flag("--strict", config.strict, "Reject invalid corpus lines");
    sub->add_flag("--lenient", config.lenient, "Report invalid lines and go on");
    sub->add_option("--order", config.order, "Corpus subset order")
        ->check(CLI::IsMember({"lex", "revlex", "auto"}));
    sub->add_option("--max-vertices", config.max_vertices,
                    "Largest hypersimplex the engine accepts");
    sub->add_option("--max-n", config.max_n, "Largest n for isomorphism search");
    sub->add_option("--jobs", config.jobs, "Worker threads")
        ->check(CLI::Range(1, 256));
    sub->add_flag("-v,--verbose", config.verbose);
  };

  CLI::App* classify = app.add_subcommand("classify", "Classify matroids");
  classify->add_option("matroid", config.literal, "Inline matroid literal");
  add_common(classify);

  CLI::App* census = app.add_subcommand("census", "Census statistics");
  census->add_option("d", config.d, "Rank");
  census->add_option("n", config.n, "Ground set size");
  census->add_flag("--enumerate", config.enumerate, "Enumerate (default)");
  census->add_option("--write-corpus", config.write_corpus,
                     "Also write the matroids as a corpus file");
  add_common(census);

  CLI::App* lift = app.add_subcommand("lift", "Corank vectors and lifts");
  lift->add_option("matroid", config.literal, "Inline matroid literal");
  lift->add_option("--kind", config.kind,
                   "corank, series-free, parallel-cofree or nested")
      ->check(CLI::IsMember({"corank", "series-free", "parallel-cofree", "nested"}));
  lift->add_option("--k", config.k, "Cardinality for corank vectors");
  lift->add_option("--flat", config.flat, "Split flacet for nested lifts");
  add_common(lift);

  CLI::App* ray = app.add_subcommand("ray-check", "Verify ray predictions");
  ray->add_option("matroid", config.literal, "Inline matroid literal");
  add_common(ray);

  CLI::App* subdivide = app.add_subcommand("subdivide", "Regular subdivision");
  subdivide->add_option("k", config.k, "Cardinality")->required();
  subdivide->add_option("n", config.n, "Ground set size")->required();
  subdivide->add_option("heights", config.heights,
                        "Comma-separated heights, lexicographic order")
      ->required();
  subdivide->add_flag("--summary", config.summary, "Append a dual-graph summary");
  add_common(subdivide);

  CLI::App* knuth = app.add_subcommand("knuth", "Knuth stable sets");
  knuth->add_option("d", config.d, "Rank")->required();
  knuth->add_option("n", config.n, "Ground set size")->required();
  add_common(knuth);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return ExitCodeFor(ErrorClass::kValidation);
  }

  try {
    if (config.strict && config.lenient) {
      throw InvalidParams("--strict and --lenient are exclusive");
    }
    std::ofstream file;
    std::ostream* sink = &out;
    if (!config.output.empty()) {
      file.open(config.output);
      if (!file) throw InvalidParams("cannot write " + config.output);
      sink = &file;
    }
    if (classify->parsed()) return CmdClassify(config, in, *sink);
    if (census->parsed()) return CmdCensus(config, in, *sink);
    if (lift->parsed()) return CmdLift(config, in, *sink);
    if (ray->parsed()) return CmdRayCheck(config, in, *sink);
    if (subdivide->parsed()) return CmdSubdivide(config, *sink);
    return CmdKnuth(config, *sink);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCodeFor(e.error_class());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return ExitCodeFor(ErrorClass::kCertificate);
  }
}

}  // namespace splitmat
