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

#include "splitmat/subdivision.h"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "double_description.h"
#include "splitmat/errors.h"
#include "splitmat/split_analysis.h"

namespace splitmat {
namespace {

using internal::IntVector;

class Engine {
 public:
  explicit Engine(const LiftVector& lift)
      : k_(lift.k),
        n_(lift.n),
        vertices_(CodecFor(lift.n, lift.k).subsets()),
        heights_(lift.heights) {}

  Subdivision Run() {
    Subdivision sub;
    sub.k = k_;
    sub.n = n_;
    std::map<Bitmap, std::size_t> index;
    std::deque<std::size_t> queue;
    auto intern = [&](std::vector<Rational> a) {
      Bitmap tight = TightSet(a);
      auto [it, inserted] = index.emplace(tight, sub.cells.size());
      if (inserted) {
        sub.cells.push_back(std::move(tight));
        sub.certificates.push_back({std::move(a), Rational(0)});
        queue.push_back(it->second);
      }
      return it->second;
    };
    intern(InitialVertex());

    std::map<Bitmap, std::vector<std::size_t>> ridges;
    std::set<std::pair<std::size_t, std::size_t>> edges;
    while (!queue.empty()) {
      const std::size_t id = queue.front();
      queue.pop_front();
      const std::vector<std::size_t> members = CellVertices(sub.cells[id]);
      std::vector<IntVector> rows;
      rows.reserve(members.size());
      for (std::size_t v : members) rows.push_back(Incidence(vertices_[v]));

      for (const internal::ExtremeRay& ray : internal::ExtremeRays(rows, n_)) {
        Bitmap ridge(vertices_.size());
        for (std::size_t r : ray.zero_rows) ridge.set(members[r]);
        ridges[ridge].push_back(id);

        // Walk from the cell's vertex of the height polyhedron along the
        // edge on which exactly the ridge stays tight.
        const std::vector<Rational>& a = sub.certificates[id].a;
        bool bounded = false;
        Rational step;
        for (std::size_t u = 0; u < vertices_.size(); ++u) {
          if (sub.cells[id].test(u)) continue;
          const std::int64_t slope = Dot(ray.direction, vertices_[u]);
          if (slope >= 0) continue;
          const Rational t = (heights_[u] - Value(a, vertices_[u])) / -slope;
          if (!bounded || t < step) step = t;
          bounded = true;
        }
        if (!bounded) {
          if (!OnBoundary(ridge)) {
            throw CertificateFailure("unbounded edge at an interior ridge");
          }
          continue;
        }
        std::vector<Rational> next = a;
        for (int i = 0; i < n_; ++i) next[i] -= step * ray.direction[i];
        const std::size_t neighbor = intern(std::move(next));
        if (!IsContained(ridge, sub.cells[neighbor])) {
          throw CertificateFailure("neighbor cell misses the shared ridge");
        }
        edges.emplace(std::min(id, neighbor), std::max(id, neighbor));
      }
    }

    for (const auto& [ridge, owners] : ridges) {
      const std::size_t expected = OnBoundary(ridge) ? 1 : 2;
      if (owners.size() != expected) {
        throw CertificateFailure("ridge shared by " +
                                 std::to_string(owners.size()) + " cells");
      }
    }
    sub.dual_edges.assign(edges.begin(), edges.end());
    return Normalize(std::move(sub));
  }

 private:
  IntVector Incidence(ElementSet s) const {
    IntVector row(n_, 0);
    for (int e : Elements(s)) row[e - 1] = 1;
    return row;
  }

  static std::int64_t Dot(const IntVector& c, ElementSet s) {
    std::int64_t total = 0;
    for (int e : Elements(s)) total += c[e - 1];
    return total;
  }

  static Rational Value(const std::vector<Rational>& a, ElementSet s) {
    Rational total = 0;
    for (int e : Elements(s)) total += a[e - 1];
    return total;
  }

  Bitmap TightSet(const std::vector<Rational>& a) const {
    Bitmap tight(vertices_.size());
    for (std::size_t u = 0; u < vertices_.size(); ++u) {
      const Rational slack = heights_[u] - Value(a, vertices_[u]);
      if (slack < 0) throw CertificateFailure("height polyhedron left");
      if (slack == 0) tight.set(u);
    }
    return tight;
  }

  // Moves from a feasible point to a vertex of the height polyhedron by
  // repeatedly stepping inside the orthogonal complement of the tight rows.
  std::vector<Rational> InitialVertex() const {
    Rational lowest = *std::min_element(heights_.begin(), heights_.end());
    std::vector<Rational> a(n_, lowest / k_);
    for (;;) {
      const Bitmap tight = TightSet(a);
      DenseMatrix<Rational> rows(0, n_);
      for (std::size_t v : CellVertices(tight)) {
        const IntVector row = Incidence(vertices_[v]);
        rows.AppendRow(std::vector<Rational>(row.begin(), row.end()));
      }
      const auto kernel = NullSpace(rows);
      if (kernel.empty()) return a;
      std::vector<Rational> delta = kernel.front();
      bool any_positive = false;
      for (ElementSet u : vertices_) {
        if (Value(delta, u) > 0) any_positive = true;
      }
      if (!any_positive) {
        for (Rational& x : delta) x = -x;
      }
      bool found = false;
      Rational step;
      for (std::size_t u = 0; u < vertices_.size(); ++u) {
        const Rational slope = Value(delta, vertices_[u]);
        if (slope <= 0) continue;
        const Rational t = (heights_[u] - Value(a, vertices_[u])) / slope;
        if (!found || t < step) step = t;
        found = true;
      }
      if (!found) throw CertificateFailure("height polyhedron not pointed");
      for (int i = 0; i < n_; ++i) a[i] += step * delta[i];
    }
  }

  // A ridge lies on the boundary of Δ(k,n) iff some coordinate is constant
  // on it.
  bool OnBoundary(const Bitmap& ridge) const {
    ElementSet meet = FullSet(n_);
    ElementSet join = 0;
    for (std::size_t v : CellVertices(ridge)) {
      meet &= vertices_[v];
      join |= vertices_[v];
    }
    return meet != 0 || join != FullSet(n_);
  }

  static bool IsContained(const Bitmap& a, const Bitmap& b) {
    for (std::size_t i = 0; i < a.words().size(); ++i) {
      if (a.words()[i] & ~b.words()[i]) return false;
    }
    return true;
  }

  static Subdivision Normalize(Subdivision sub) {
    std::vector<std::size_t> order(sub.cells.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
      return sub.cells[x] < sub.cells[y];
    });
    std::vector<std::size_t> position(order.size());
    Subdivision out;
    out.k = sub.k;
    out.n = sub.n;
    for (std::size_t i = 0; i < order.size(); ++i) {
      position[order[i]] = i;
      out.cells.push_back(std::move(sub.cells[order[i]]));
      out.certificates.push_back(std::move(sub.certificates[order[i]]));
    }
    for (auto [x, y] : sub.dual_edges) {
      out.dual_edges.emplace_back(std::min(position[x], position[y]),
                                  std::max(position[x], position[y]));
    }
    std::sort(out.dual_edges.begin(), out.dual_edges.end());
    return out;
  }

  int k_;
  int n_;
  const std::vector<ElementSet>& vertices_;
  const std::vector<Rational>& heights_;
};

}  // namespace

std::vector<std::size_t> CellVertices(const Bitmap& cell) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < cell.size(); ++i) {
    if (cell.test(i)) out.push_back(i);
  }
  return out;
}

Subdivision RegularSubdivision(const LiftVector& lift,
                               std::size_t max_vertices) {
  if (lift.n < 1 || lift.n > kMaxElements || lift.k <= 0 ||
      lift.k >= lift.n) {
    throw DegenerateParameters("need 0 < k < n, got k=" +
                               std::to_string(lift.k) +
                               " n=" + std::to_string(lift.n));
  }
  const std::uint64_t size = Binomial(lift.n, lift.k);
  if (size > max_vertices) {
    throw LimitExceeded("Δ(" + std::to_string(lift.k) + "," +
                        std::to_string(lift.n) + ") has " +
                        std::to_string(size) + " vertices, limit " +
                        std::to_string(max_vertices));
  }
  if (lift.heights.size() != size) {
    throw InvalidParams("lift has " + std::to_string(lift.heights.size()) +
                        " entries, expected " + std::to_string(size));
  }
  Subdivision sub = Engine(lift).Run();
  CheckCertificates(sub, lift);
  if (!IsDualGraphConnected(sub)) {
    throw CertificateFailure("dual graph disconnected");
  }
  return sub;
}

void CheckCertificates(const Subdivision& sub, const LiftVector& lift) {
  const std::vector<ElementSet>& vertices = CodecFor(sub.n, sub.k).subsets();
  if (sub.certificates.size() != sub.cells.size()) {
    throw CertificateFailure("missing certificates");
  }
  std::vector<bool> covered(vertices.size(), false);
  for (std::size_t c = 0; c < sub.cells.size(); ++c) {
    const CellCertificate& cert = sub.certificates[c];
    for (std::size_t v = 0; v < vertices.size(); ++v) {
      Rational value = cert.b;
      for (int e : Elements(vertices[v])) value += cert.a[e - 1];
      const bool on_cell = sub.cells[c].test(v);
      if (on_cell ? value != lift.heights[v] : value >= lift.heights[v]) {
        throw CertificateFailure("cell " + std::to_string(c) +
                                 " certificate fails at vertex " +
                                 SetToString(vertices[v]));
      }
      if (on_cell) covered[v] = true;
    }
  }
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (!covered[v]) {
      throw CertificateFailure("vertex " + SetToString(vertices[v]) +
                               " lies in no maximal cell");
    }
  }
}

Matroid CellToMatroid(int k, int n, const Bitmap& cell) {
  if (cell.count() == 0) throw NotAMatroid("empty cell");
  const std::string witness = FindExchangeViolation(n, k, cell);
  if (!witness.empty()) throw NotAMatroid(witness);
  return Matroid::FromBitmap(n, k, cell);
}

bool IsMatroidSubdivision(const Subdivision& sub) {
  for (const Bitmap& cell : sub.cells) {
    if (cell.count() == 0 || !FindExchangeViolation(sub.n, sub.k, cell).empty()) {
      return false;
    }
  }
  return true;
}

std::vector<std::size_t> TropicalLinearSpace(const Subdivision& sub) {
  const std::vector<ElementSet>& vertices = CodecFor(sub.n, sub.k).subsets();
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < sub.cells.size(); ++c) {
    ElementSet used = 0;
    for (std::size_t v : CellVertices(sub.cells[c])) used |= vertices[v];
    if (used == FullSet(sub.n)) out.push_back(c);
  }
  return out;
}

std::vector<std::size_t> DualDegrees(const Subdivision& sub) {
  std::vector<std::size_t> degree(sub.cells.size(), 0);
  for (auto [x, y] : sub.dual_edges) {
    ++degree[x];
    ++degree[y];
  }
  return degree;
}

bool IsDualGraphConnected(const Subdivision& sub) {
  if (sub.cells.empty()) return false;
  std::vector<std::vector<std::size_t>> adjacent(sub.cells.size());
  for (auto [x, y] : sub.dual_edges) {
    adjacent[x].push_back(y);
    adjacent[y].push_back(x);
  }
  std::vector<bool> seen(sub.cells.size(), false);
  std::vector<std::size_t> stack = {0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t c = stack.back();
    stack.pop_back();
    for (std::size_t next : adjacent[c]) {
      if (!seen[next]) {
        seen[next] = true;
        ++reached;
        stack.push_back(next);
      }
    }
  }
  return reached == sub.cells.size();
}

SecondaryConeInfo SecondaryConeDimension(const Subdivision& sub) {
  if (sub.k <= 0 || sub.k >= sub.n) {
    throw DegenerateParameters("need 0 < k < n");
  }
  const std::vector<ElementSet>& vertices = CodecFor(sub.n, sub.k).subsets();
  const std::size_t n = sub.n;
  const std::size_t unknowns = n * sub.cells.size();
  // Unknowns: a_c per cell. Each vertex in several cells forces those
  // cells' affine functions to agree there.
  DenseMatrix<Rational> system(0, unknowns);
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    std::size_t previous = sub.cells.size();
    for (std::size_t c = 0; c < sub.cells.size(); ++c) {
      if (!sub.cells[c].test(v)) continue;
      if (previous != sub.cells.size()) {
        std::vector<Rational> row(unknowns, Rational(0));
        for (int e : Elements(vertices[v])) {
          row[previous * n + e - 1] = 1;
          row[c * n + e - 1] = -1;
        }
        system.AppendRow(row);
      }
      previous = c;
    }
  }
  SecondaryConeInfo info;
  info.solution_dim = unknowns - MatrixRank(system);
  info.lineality_dim = n;
  info.cone_dim = info.solution_dim - n;
  return info;
}

RayReport VerifyRay(const Matroid& m, std::size_t max_vertices) {
  const std::vector<Matroid> predicted = PredictedRayCells(m);
  const Subdivision sub =
      RegularSubdivision(CorankVector(SeriesFreeLift(m)), max_vertices);
  std::set<Bitmap> expected;
  for (const Matroid& cell : predicted) expected.insert(cell.bitmap());
  const std::set<Bitmap> found(sub.cells.begin(), sub.cells.end());

  RayReport report;
  std::set_difference(found.begin(), found.end(), expected.begin(),
                      expected.end(), std::back_inserter(report.unexpected));
  std::set_difference(expected.begin(), expected.end(), found.begin(),
                      found.end(), std::back_inserter(report.missing));
  report.cells_match = report.unexpected.empty() && report.missing.empty();
  report.num_cells = sub.cells.size();
  report.expected_cells = SplitFlacets(m).size() + 2;
  report.count_match = report.num_cells == report.expected_cells;
  report.cone_dim = SecondaryConeDimension(sub).cone_dim;
  report.cone_dim_one = report.cone_dim == 1;
  return report;
}

std::string ExportSubdivision(const Subdivision& sub) {
  const std::vector<ElementSet>& vertices = CodecFor(sub.n, sub.k).subsets();
  std::ostringstream out;
  out << sub.k << ' ' << sub.n << ' ' << sub.cells.size() << '\n';
  for (const Bitmap& cell : sub.cells) {
    bool first = true;
    for (std::size_t v : CellVertices(cell)) {
      if (!first) out << ' ';
      first = false;
      bool first_element = true;
      for (int e : Elements(vertices[v])) {
        if (!first_element) out << ',';
        first_element = false;
        out << e;
      }
    }
    out << '\n';
  }
  for (auto [x, y] : sub.dual_edges) out << x << ' ' << y << '\n';
  return out.str();
}

Subdivision ParseSubdivision(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int line_number = 0;
  auto fail = [&](const std::string& reason) -> FormatError {
    return FormatError("line " + std::to_string(line_number) + ": " + reason);
  };
  Subdivision sub;
  std::size_t num_cells = 0;
  ++line_number;
  if (!std::getline(in, line)) throw fail("missing header");
  {
    std::istringstream header(line);
    std::string extra;
    if (!(header >> sub.k >> sub.n >> num_cells) || (header >> extra)) {
      throw fail("expected \"k n num_cells\"");
    }
  }
  if (sub.n < 1 || sub.n > kMaxElements || sub.k < 0 || sub.k > sub.n) {
    throw fail("invalid k or n");
  }
  const SubsetCodec& codec = CodecFor(sub.n, sub.k);
  for (std::size_t c = 0; c < num_cells; ++c) {
    ++line_number;
    if (!std::getline(in, line)) throw fail("missing cell line");
    Bitmap cell(codec.size());
    std::istringstream tokens(line);
    std::string token;
    while (tokens >> token) {
      ElementSet s = 0;
      std::istringstream parts(token);
      std::string part;
      while (std::getline(parts, part, ',')) {
        int e = 0;
        try {
          std::size_t used = 0;
          e = std::stoi(part, &used);
          if (used != part.size()) throw std::invalid_argument(part);
        } catch (const std::exception&) {
          throw fail("bad element \"" + part + "\"");
        }
        if (e < 1 || e > sub.n) throw fail("element out of range");
        s |= Singleton(e);
      }
      if (Cardinality(s) != sub.k) throw fail("subset of wrong size");
      cell.set(codec.index(s));
    }
    sub.cells.push_back(std::move(cell));
  }
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream pair(line);
    std::size_t x = 0;
    std::size_t y = 0;
    std::string extra;
    if (!(pair >> x >> y) || (pair >> extra) || x >= num_cells ||
        y >= num_cells) {
      throw fail("bad dual edge");
    }
    sub.dual_edges.emplace_back(x, y);
  }
  return sub;
}

}  // namespace splitmat
