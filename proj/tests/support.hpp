#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "turaev/turaev.hpp"

namespace support {

inline std::string data_path(const std::string& rel) { return std::string(TURAEV_SOURCE_DIR) + "/" + rel; }

struct Named {
  std::string name;
  turaev::LinkDiagram diagram;
  turaev::CatalogEntry entry;
};

inline std::vector<Named> load(const std::string& rel) {
  const auto cat = turaev::ingest_catalog(data_path(rel));
  if (!cat.diagnostics.empty()) throw std::runtime_error("catalog diagnostics in " + rel);
  std::vector<Named> out;
  for (const auto& e : cat.entries) out.push_back({e.name, turaev::parse_pd(e.pd), e});
  return out;
}

inline const std::vector<Named>& knots() {
  static const auto k = load("data/knots_le9.tsv");
  return k;
}

inline const std::vector<Named>& extras() {
  static const auto k = load("data/extras.tsv");
  return k;
}

inline std::vector<Named> everything() {
  auto all = knots();
  for (const auto& e : extras()) all.push_back(e);
  return all;
}

inline const turaev::LinkDiagram& find(const std::string& name) {
  for (const auto* set : {&knots(), &extras()})
    for (const auto& n : *set)
      if (n.name == name) return n.diagram;
  throw std::runtime_error("no bundled diagram named " + name);
}

inline turaev::LinkDiagram trefoil() { return turaev::parse_pd("X(1,4,2,5)X(3,6,4,1)X(5,2,6,3)"); }

struct Reference {
  int turaev_genus = 0;
  std::map<int, long> jones_t;                 // exponent -> coefficient
  std::map<std::pair<int, int>, int> khovanov;  // (i, j) -> rational dimension
};

inline const std::map<std::string, Reference>& reference() {
  static const auto table = [] {
    std::map<std::string, Reference> out;
    std::ifstream in(data_path("tests/data/knotinfo_reference.tsv"));
    if (!in) throw std::runtime_error("missing knotinfo_reference.tsv");
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#') continue;
      std::istringstream ss(line);
      std::string name, genus, jones, kh;
      std::getline(ss, name, '\t');
      std::getline(ss, genus, '\t');
      std::getline(ss, jones, '\t');
      std::getline(ss, kh, '\t');
      Reference r;
      r.turaev_genus = std::stoi(genus);
      std::istringstream js(jones);
      std::string term;
      while (std::getline(js, term, ',')) {
        const auto colon = term.find(':');
        r.jones_t[std::stoi(term.substr(0, colon))] = std::stol(term.substr(colon + 1));
      }
      std::istringstream ks(kh);
      while (std::getline(ks, term, ';')) {
        int i = 0, j = 0, d = 0;
        char c1 = 0, c2 = 0;
        std::istringstream ts(term);
        ts >> i >> c1 >> j >> c2 >> d;
        r.khovanov[{i, j}] = d;
      }
      out.emplace(name, std::move(r));
    }
    return out;
  }();
  return table;
}

// ---------------------------------------------------------------------------
// Oracles. These work from the PD tuples alone and share no code with the
// library beyond its parser.

using Poly = std::map<int, long>;  // exponent -> coefficient

inline Poly mul(const Poly& a, const Poly& b) {
  Poly r;
  for (auto [ea, ca] : a)
    for (auto [eb, cb] : b) r[ea + eb] += ca * cb;
  for (auto it = r.begin(); it != r.end();) it = it->second == 0 ? r.erase(it) : std::next(it);
  return r;
}

inline Poly add(Poly a, const Poly& b) {
  for (auto [e, c] : b) a[e] += c;
  for (auto it = a.begin(); it != a.end();) it = it->second == 0 ? a.erase(it) : std::next(it);
  return a;
}

inline Poly from_laurent(const turaev::LaurentPoly& p) {
  Poly r;
  for (auto [e, c] : p.terms()) r[e] = c;
  return r;
}

struct PdGraph {
  int crossings = 0;
  std::vector<std::array<int, 4>> labels;
  std::map<int, std::vector<std::pair<int, int>>> ends;  // label -> [(crossing, slot)]
};

inline PdGraph pd_graph(const turaev::LinkDiagram& d) {
  PdGraph g;
  g.crossings = d.crossing_count();
  for (int x = 0; x < g.crossings; ++x) {
    const auto& s = d.crossings()[x].slots;
    g.labels.push_back({s[0], s[1], s[2], s[3]});
    for (int k = 0; k < 4; ++k) g.ends[s[k]].emplace_back(x, k);
  }
  return g;
}

/// Circles of a state by walking: leave along an edge, cross to the other
/// end, turn along the smoothing arc, repeat. choice[x] false = A.
inline int walk_circles(const PdGraph& g, const std::vector<bool>& choice) {
  std::vector<std::array<bool, 4>> seen(static_cast<std::size_t>(g.crossings), {false, false, false, false});
  auto other_end = [&](int x, int k) {
    const auto& e = g.ends.at(g.labels[x][k]);
    return e[0] == std::make_pair(x, k) ? e[1] : e[0];
  };
  // A joins slots 0-3 and 1-2, B joins 0-1 and 2-3.
  auto arc = [&](int x, int k) {
    static const int a[4] = {3, 2, 1, 0}, b[4] = {1, 0, 3, 2};
    return choice[x] ? b[k] : a[k];
  };
  int circles = 0;
  for (int x0 = 0; x0 < g.crossings; ++x0)
    for (int k0 = 0; k0 < 4; ++k0) {
      if (seen[x0][k0]) continue;
      ++circles;
      int x = x0, k = k0;
      while (!seen[x][k]) {
        seen[x][k] = true;
        const auto [y, m] = other_end(x, k);
        seen[y][m] = true;
        x = y;
        k = arc(y, m);
      }
    }
  return circles;
}

/// Recursive skein expansion <D> = A <D_A> + A^{-1} <D_B>.
inline Poly skein_bracket(const turaev::LinkDiagram& d) {
  const PdGraph g = pd_graph(d);
  const Poly loop{{2, -1}, {-2, -1}};
  std::vector<bool> choice(static_cast<std::size_t>(g.crossings), false);
  std::map<int, Poly> loop_pow;
  auto power = [&](int n) -> const Poly& {
    auto it = loop_pow.find(n);
    if (it != loop_pow.end()) return it->second;
    Poly p{{0, 1}};
    for (int k = 0; k < n; ++k) p = mul(p, loop);
    return loop_pow.emplace(n, p).first->second;
  };
  std::function<Poly(int)> rec = [&](int x) -> Poly {
    if (x == g.crossings) return power(walk_circles(g, choice) - 1);
    choice[x] = false;
    Poly a = mul(Poly{{1, 1}}, rec(x + 1));
    choice[x] = true;
    Poly b = mul(Poly{{-1, 1}}, rec(x + 1));
    choice[x] = false;
    return add(a, b);
  };
  return rec(0);
}

/// Writhe from label order: on a knot labelled consecutively along the
/// orientation, the over-strand enters on the lower label of {slot 1, slot 3}
/// (cyclically). A crossing is positive when that entry is slot 1.
inline int knot_writhe_from_labels(const turaev::LinkDiagram& d) {
  const int n = d.edge_count();
  int w = 0;
  for (const auto& x : d.crossings()) {
    const int j = x.slots[1], l = x.slots[3];
    const bool enters_at_1 = (l == j % n + 1);
    w += enters_at_1 ? 1 : -1;
  }
  return w;
}

/// Jones in q from the skein bracket: (-A^3)^{-w} <D>, A = q^{-1/2}.
inline Poly oracle_jones_q(const turaev::LinkDiagram& d, int writhe) {
  Poly b = skein_bracket(d);
  Poly out;
  const long sign = writhe % 2 == 0 ? 1 : -1;
  for (auto [e, c] : b) {
    const int a = e - 3 * writhe;
    if (a % 2 != 0) throw std::logic_error("odd A exponent");
    out[-a / 2] += sign * c;
  }
  return out;
}

/// Tutte polynomial by the spanning subgraph expansion
/// sum_F (x-1)^{r(E)-r(F)} (y-1)^{|F|-r(F)}, returned as (i, j) -> coeff of x^i y^j.
inline std::map<std::pair<int, int>, long> tutte_by_subsets(int vertices, const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  auto rank = [&](std::uint32_t mask) {
    std::vector<int> p(static_cast<std::size_t>(vertices));
    for (int k = 0; k < vertices; ++k) p[k] = k;
    std::function<int(int)> find = [&](int a) { return p[a] == a ? a : p[a] = find(p[a]); };
    int r = 0;
    for (int k = 0; k < m; ++k)
      if ((mask >> k) & 1U) {
        const int a = find(edges[k].first), b = find(edges[k].second);
        if (a != b) {
          p[a] = b;
          ++r;
        }
      }
    return r;
  };
  auto binomial_expand = [](int n) {  // (z - 1)^n as power -> coeff
    std::vector<long> c(static_cast<std::size_t>(n + 1));
    long v = 1;
    for (int k = 0; k <= n; ++k) {
      c[k] = ((n - k) % 2 == 0 ? 1 : -1) * v;
      v = v * (n - k) / (k + 1);
    }
    return c;
  };
  const int full = rank((m == 32 ? 0U : (1U << m)) - 1U);
  std::map<std::pair<int, int>, long> out;
  for (std::uint32_t mask = 0; mask < (1U << m); ++mask) {
    const int r = rank(mask);
    const int size = __builtin_popcount(mask);
    const auto cx = binomial_expand(full - r), cy = binomial_expand(size - r);
    for (std::size_t i = 0; i < cx.size(); ++i)
      for (std::size_t j = 0; j < cy.size(); ++j) out[{static_cast<int>(i), static_cast<int>(j)}] += cx[i] * cy[j];
  }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

/// Random diagram built from catalog pieces by crossing changes, connected
/// sums and Reidemeister moves, with at most `max_crossings` crossings.
inline turaev::LinkDiagram random_mutation(std::mt19937_64& rng, int max_crossings) {
  const auto& pool = knots();
  auto pick = [&](std::size_t n) { return static_cast<std::size_t>(rng() % n); };
  turaev::LinkDiagram d = pool[pick(pool.size())].diagram;
  if (rng() % 2 == 0) {
    const auto& other = pool[pick(pool.size())].diagram;
    if (d.crossing_count() + other.crossing_count() <= max_crossings)
      d = turaev::connected_sum(d, static_cast<int>(pick(d.edge_count())), other,
                                static_cast<int>(pick(other.edge_count())));
  }
  const int changes = static_cast<int>(rng() % 4);
  for (int k = 0; k < changes; ++k) d = turaev::crossing_change(d, static_cast<int>(pick(d.crossing_count())));
  const int moves = static_cast<int>(rng() % 4);
  for (int k = 0; k < moves; ++k) {
    const turaev::Move m = static_cast<turaev::Move>(rng() % 4);
    const int growth = m == turaev::Move::R2 ? 2 : (m == turaev::Move::R3 ? 0 : 1);
    if (d.crossing_count() + growth > max_crossings) continue;
    const auto sites = turaev::move_sites(d, m);
    if (sites.empty()) continue;
    try {
      d = turaev::reidemeister_variant(d, m, sites[pick(sites.size())]);
    } catch (const turaev::DiagramError&) {
    }
  }
  return d;
}

}  // namespace support
