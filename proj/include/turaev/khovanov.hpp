#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "turaev/diagram.hpp"
#include "turaev/laurent.hpp"
#include "turaev/polynomials.hpp"
#include "turaev/states.hpp"

namespace turaev {

// Gradings: the 0-smoothing is the A-smoothing, r counts 1-smoothings,
// i = r - n_-, j = (#v+ - #v-) + r + n_+ - 2 n_-. The unknot sits at (0, +-1).

enum class Field { rational, gf2 };

inline const char* field_name(Field f) { return f == Field::rational ? "Q" : "F2"; }

inline constexpr int kDefaultKhovanovCap = 12;

struct Generator {
  std::uint32_t state = 0;
  std::uint32_t labels = 0;  // bit k set: circle k carries v+
  int j = 0;
};

struct MatrixEntry {
  int row = 0;  // generator index in degree i + 1
  int col = 0;  // generator index in degree i
  int value = 0;
};

struct CubeComplex {
  Field field = Field::rational;
  int crossings = 0;
  int negative = 0;
  int positive = 0;
  /// generators[k] and differential[k] belong to homological degree k - negative.
  std::vector<std::vector<Generator>> generators;
  std::vector<std::vector<MatrixEntry>> differential;

  int min_degree() const { return -negative; }
  int max_degree() const { return crossings - negative; }
  const std::vector<Generator>& in_degree(int i) const { return generators[static_cast<std::size_t>(i + negative)]; }
  std::size_t total_dimension() const {
    std::size_t n = 0;
    for (const auto& g : generators) n += g.size();
    return n;
  }
};

namespace detail {

struct StateCircles {
  int count = 0;
  std::vector<int> of_edge;
};

inline StateCircles circles_of(const LinkDiagram& d, std::uint32_t mask) {
  const auto r = resolve(d, State(d.crossing_count(), mask));
  return {r.circle_count, r.circle_of_edge};
}

}  // namespace detail

/// Unreduced Khovanov cube of resolutions with Bar-Natan signs.
inline CubeComplex cube_complex(const LinkDiagram& d, Field field = Field::rational, int cap = kDefaultKhovanovCap) {
  const int c = d.crossing_count();
  if (c > cap || c > 24)
    throw DiagramError(ErrorKind::capacity, "cube_complex: " + std::to_string(c) +
                                                " crossings exceed the Khovanov cap of " + std::to_string(cap));
  CubeComplex cx;
  cx.field = field;
  cx.crossings = c;
  cx.negative = d.negative_crossings();
  cx.positive = d.positive_crossings();
  const std::uint32_t states = std::uint32_t{1} << c;
  std::vector<detail::StateCircles> circ(states);
  for (std::uint32_t m = 0; m < states; ++m) circ[m] = detail::circles_of(d, m);

  cx.generators.assign(static_cast<std::size_t>(c + 1), {});
  cx.differential.assign(static_cast<std::size_t>(c + 1), {});
  std::vector<int> offset(states, 0);
  for (std::uint32_t m = 0; m < states; ++m) {
    const int r = std::popcount(m);
    auto& gens = cx.generators[r];
    offset[m] = static_cast<int>(gens.size());
    const int k = circ[m].count;
    for (std::uint32_t lab = 0; lab < (std::uint32_t{1} << k); ++lab) {
      const int plus = std::popcount(lab);
      gens.push_back({m, lab, plus - (k - plus) + r + cx.positive - 2 * cx.negative});
    }
  }

  for (std::uint32_t m = 0; m < states; ++m) {
    const int r = std::popcount(m);
    const auto& from = circ[m];
    for (int x = 0; x < c; ++x) {
      if ((m >> x) & 1U) continue;
      const std::uint32_t m2 = m | (std::uint32_t{1} << x);
      const auto& to = circ[m2];
      const int sign = (std::popcount(m & ((std::uint32_t{1} << x) - 1)) % 2 == 0) ? 1 : -1;
      // Circles meeting x: in the A-smoothing, via slots 0 and 2; in the B-smoothing, likewise.
      const int a0 = from.of_edge[d.edge_at(dart_of(x, 0))], a1 = from.of_edge[d.edge_at(dart_of(x, 2))];
      const int b0 = to.of_edge[d.edge_at(dart_of(x, 0))], b1 = to.of_edge[d.edge_at(dart_of(x, 2))];
      // Image of untouched circles: the circle through any of their edges.
      std::vector<int> image(static_cast<std::size_t>(from.count), -1);
      for (int e = 0; e < d.edge_count(); ++e) image[from.of_edge[e]] = to.of_edge[e];
      auto& out = cx.differential[r];
      const int k = from.count;
      for (std::uint32_t lab = 0; lab < (std::uint32_t{1} << k); ++lab) {
        std::uint32_t base = 0;
        for (int q = 0; q < k; ++q)
          if (q != a0 && q != a1 && ((lab >> q) & 1U)) base |= std::uint32_t{1} << image[q];
        const int col = offset[m] + static_cast<int>(lab);
        auto emit = [&](std::uint32_t target) {
          out.push_back({offset[m2] + static_cast<int>(target), col, sign});
        };
        if (a0 != a1) {  // merge into b0 == b1
          const bool p0 = (lab >> a0) & 1U, p1 = (lab >> a1) & 1U;
          if (p0 && p1) emit(base | (std::uint32_t{1} << b0));
          else if (p0 || p1) emit(base);
        } else {  // split a0 into b0, b1
          if ((lab >> a0) & 1U) {
            emit(base | (std::uint32_t{1} << b0));
            emit(base | (std::uint32_t{1} << b1));
          } else {
            emit(base);
          }
        }
      }
    }
  }
  return cx;
}

/// Check d_{i+1} d_i = 0 over the integers for every i.
inline bool d_squared_zero(const CubeComplex& cx) {
  for (int r = 0; r + 1 < static_cast<int>(cx.differential.size()); ++r) {
    std::map<int, std::vector<std::pair<int, int>>> next_by_col;
    for (const auto& e : cx.differential[r + 1]) next_by_col[e.col].emplace_back(e.row, e.value);
    std::map<std::pair<int, int>, long> product;
    for (const auto& e : cx.differential[r]) {
      const auto it = next_by_col.find(e.row);
      if (it == next_by_col.end()) continue;
      for (auto [row, v] : it->second) product[{row, e.col}] += static_cast<long>(v) * e.value;
    }
    for (const auto& [key, v] : product)
      if (v != 0) return false;
  }
  return true;
}

struct GF2 {
  bool bit = false;
  GF2() = default;
  GF2(int v) : bit((v & 1) != 0) {}
  bool is_zero() const { return !bit; }
  friend GF2 operator-(GF2 a, GF2 b) { return GF2(a.bit != b.bit ? 1 : 0); }
  friend GF2 operator*(GF2 a, GF2 b) { return GF2(a.bit && b.bit ? 1 : 0); }
  friend GF2 operator/(GF2 a, GF2) { return a; }
};

namespace detail {

inline bool field_zero(const mpq_class& v) { return sgn(v) == 0; }
inline bool field_zero(const GF2& v) { return v.is_zero(); }

template <class F>
using SparseRow = std::vector<std::pair<int, F>>;

template <class F>
SparseRow<F> axpy(const SparseRow<F>& row, const F& factor, const SparseRow<F>& pivot) {
  SparseRow<F> out;
  out.reserve(row.size() + pivot.size());
  std::size_t a = 0, b = 0;
  while (a < row.size() || b < pivot.size()) {
    if (b == pivot.size() || (a < row.size() && row[a].first < pivot[b].first)) {
      out.push_back(row[a++]);
    } else if (a == row.size() || pivot[b].first < row[a].first) {
      F v = F(0) - factor * pivot[b].second;
      out.emplace_back(pivot[b].first, v);
      ++b;
    } else {
      F v = row[a].second - factor * pivot[b].second;
      if (!field_zero(v)) out.emplace_back(row[a].first, v);
      ++a;
      ++b;
    }
  }
  return out;
}

}  // namespace detail

/// Rank of a sparse matrix over a field by row echelon reduction; rows are
/// processed shortest first.
template <class F>
int sparse_rank(std::vector<detail::SparseRow<F>> rows) {
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  std::map<int, detail::SparseRow<F>> pivots;
  int rank = 0;
  for (auto& row : rows) {
    while (!row.empty()) {
      const auto it = pivots.find(row.front().first);
      if (it == pivots.end()) break;
      const F factor = row.front().second / it->second.front().second;
      row = detail::axpy(row, factor, it->second);
    }
    if (row.empty()) continue;
    ++rank;
    const int col = row.front().first;
    pivots.emplace(col, std::move(row));
  }
  return rank;
}

struct BettiTable {
  Field field = Field::rational;
  std::map<std::pair<int, int>, int> dims;  // (i, j) -> dimension

  bool is_zero() const { return dims.empty(); }
  int at(int i, int j) const {
    const auto it = dims.find({i, j});
    return it == dims.end() ? 0 : it->second;
  }
  int total() const {
    int t = 0;
    for (const auto& [k, v] : dims) t += v;
    return t;
  }
  std::set<int> diagonals() const {
    std::set<int> out;
    for (const auto& [k, v] : dims) out.insert(k.second - 2 * k.first);
    return out;
  }
  friend bool operator==(const BettiTable& a, const BettiTable& b) { return a.field == b.field && a.dims == b.dims; }
};

namespace detail {

template <class F>
int block_rank(const std::vector<MatrixEntry>& entries, const std::vector<Generator>& src, int j) {
  std::map<int, SparseRow<F>> by_col;
  for (const auto& e : entries)
    if (src[e.col].j == j) by_col[e.col].emplace_back(e.row, F(e.value));
  std::vector<SparseRow<F>> rows;
  rows.reserve(by_col.size());
  for (auto& [col, row] : by_col) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    rows.push_back(std::move(row));
  }
  return sparse_rank<F>(std::move(rows));
}

template <class F>
BettiTable homology_over(const CubeComplex& cx, int jobs) {
  BettiTable t;
  t.field = cx.field;
  const int levels = static_cast<int>(cx.generators.size());
  // rank[r][j] of d_r restricted to quantum grading j
  std::vector<std::map<int, int>> rank(static_cast<std::size_t>(levels));
  std::vector<std::pair<int, int>> tasks;
  for (int r = 0; r < levels; ++r) {
    std::set<int> js;
    for (const auto& g : cx.generators[r]) js.insert(g.j);
    for (int j : js) {
      rank[r][j] = 0;
      if (!cx.differential[r].empty()) tasks.emplace_back(r, j);
    }
  }
  std::vector<int> results(tasks.size(), 0);
  auto work = [&](std::size_t first, std::size_t step) {
    for (std::size_t k = first; k < tasks.size(); k += step) {
      const auto [r, j] = tasks[k];
      results[k] = block_rank<F>(cx.differential[r], cx.generators[r], j);
    }
  };
  if (jobs <= 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int p = 0; p < jobs; ++p) pool.emplace_back(work, static_cast<std::size_t>(p), static_cast<std::size_t>(jobs));
    for (auto& th : pool) th.join();
  }
  for (std::size_t k = 0; k < tasks.size(); ++k) rank[tasks[k].first][tasks[k].second] = results[k];
  for (int r = 0; r < levels; ++r) {
    std::map<int, int> dim;
    for (const auto& g : cx.generators[r]) ++dim[g.j];
    for (const auto& [j, n] : dim) {
      const int out_rank = rank[r][j];
      const int in_rank = r > 0 && rank[r - 1].count(j) ? rank[r - 1][j] : 0;
      const int h = n - out_rank - in_rank;
      if (h != 0) t.dims[{r - cx.negative, j}] = h;
    }
  }
  return t;
}

}  // namespace detail

/// Homology of the cube complex over its field; `jobs` threads share the
/// independent (i, j) blocks.
inline BettiTable homology(const CubeComplex& cx, int jobs = 1) {
  return cx.field == Field::rational ? detail::homology_over<mpq_class>(cx, jobs) : detail::homology_over<GF2>(cx, jobs);
}

inline BettiTable khovanov_homology(const LinkDiagram& d, Field field = Field::rational, int cap = kDefaultKhovanovCap,
                                    int jobs = 1) {
  return homology(cube_complex(d, field, cap), jobs);
}

/// Number of diagonals j - 2i carrying homology.
inline int delta_width(const BettiTable& t) {
  if (t.is_zero()) throw std::invalid_argument("delta_width: zero Betti table");
  return static_cast<int>(t.diagonals().size());
}

/// Sum of (-1)^i q^j dim H^{i,j}.
inline LaurentPoly euler_characteristic(const BettiTable& t) {
  LaurentPoly p(Variable::q);
  for (const auto& [k, v] : t.dims) p += LaurentPoly::monomial(k.first % 2 == 0 ? v : -v, k.second, Variable::q);
  return p;
}

/// (q + 1/q) V evaluated at -q: the value the Euler characteristic must equal.
inline LaurentPoly unnormalized_jones(const LaurentPoly& jones_q) {
  return LaurentPoly::from_terms({{1, 1}, {-1, 1}}, Variable::q) * jones_q.negated_variable();
}

struct WidthReport {
  int width = 0;
  int genus = 0;
  bool adequate = false;
  bool euler_ok = false;
  bool inequality = false;  // width - 2 <= g_T(D)
  bool equality = false;    // width - 2 == g_T(D)
  bool ok = false;          // inequality, plus equality when adequate
  BettiTable table;
};

inline WidthReport check_width_bound(const LinkDiagram& d, int cap = kDefaultKhovanovCap, int jobs = 1) {
  WidthReport r;
  r.table = khovanov_homology(d, Field::rational, cap, jobs);
  r.width = delta_width(r.table);
  r.genus = turaev_genus_diagram(d);
  r.adequate = adequacy(d).adequate();
  r.euler_ok = euler_characteristic(r.table) == unnormalized_jones(jones(d));
  r.inequality = r.width - 2 <= r.genus;
  r.equality = r.width - 2 == r.genus;
  r.ok = r.inequality && (!r.adequate || r.equality);
  return r;
}

}  // namespace turaev
