#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "turaev/diagram.hpp"
#include "turaev/laurent.hpp"
#include "turaev/polynomials.hpp"
#include "turaev/states.hpp"

namespace turaev {

/// Orientable ribbon graph as a rotation system. Edge e owns half-edges 2e
/// and 2e+1; `rotation` sends a half-edge to the next one counterclockwise
/// around its vertex.
struct RibbonGraph {
  int vertex_count = 0;
  std::vector<int> rotation;
  std::vector<int> vertex_of;
  bool orientable = true;

  int edge_count() const { return static_cast<int>(rotation.size()) / 2; }

  static RibbonGraph from_vertex_cycles(const std::vector<std::vector<int>>& cycles, int edges) {
    RibbonGraph g;
    g.vertex_count = static_cast<int>(cycles.size());
    g.rotation.assign(static_cast<std::size_t>(2 * edges), -1);
    g.vertex_of.assign(static_cast<std::size_t>(2 * edges), -1);
    for (int v = 0; v < g.vertex_count; ++v) {
      const auto& cyc = cycles[v];
      for (std::size_t k = 0; k < cyc.size(); ++k) {
        const int h = cyc[k];
        if (h < 0 || h >= 2 * edges || g.vertex_of[h] != -1)
          throw std::invalid_argument("RibbonGraph: half-edge out of range or repeated");
        g.vertex_of[h] = v;
        g.rotation[h] = cyc[(k + 1) % cyc.size()];
      }
    }
    for (int h = 0; h < 2 * edges; ++h)
      if (g.vertex_of[h] == -1) throw std::invalid_argument("RibbonGraph: half-edge missing from every vertex");
    return g;
  }

  /// Boundary components: orbits of rotation after the edge involution.
  std::vector<std::vector<int>> faces() const {
    std::vector<std::vector<int>> out;
    std::vector<char> seen(rotation.size(), 0);
    for (std::size_t s = 0; s < rotation.size(); ++s) {
      if (seen[s]) continue;
      std::vector<int> f;
      for (int h = static_cast<int>(s); !seen[h]; h = rotation[h ^ 1]) {
        seen[h] = 1;
        f.push_back(h);
      }
      out.push_back(std::move(f));
    }
    // isolated vertices bound one face each
    std::vector<char> used(static_cast<std::size_t>(vertex_count), 0);
    for (int v : vertex_of) used[v] = 1;
    for (int v = 0; v < vertex_count; ++v)
      if (!used[v]) out.emplace_back();
    return out;
  }

  bool connected() const {
    if (vertex_count == 0) return true;
    detail::UnionFind uf(vertex_count);
    int parts = vertex_count;
    for (int e = 0; e < edge_count(); ++e)
      if (uf.unite(vertex_of[2 * e], vertex_of[2 * e + 1])) --parts;
    return parts == 1;
  }
};

/// (2 - V + E - F) / 2 for a connected ribbon graph.
inline int ribbon_genus(const RibbonGraph& g) {
  if (!g.connected()) throw std::invalid_argument("ribbon_genus: ribbon graph is not connected");
  const int f = static_cast<int>(g.faces().size());
  const int twice = 2 - g.vertex_count + g.edge_count() - f;
  if (twice < 0 || twice % 2 != 0) throw std::logic_error("ribbon_genus: inconsistent Euler count");
  return twice / 2;
}

/// All-A ribbon graph: one vertex per all-A circle, one edge per crossing.
/// Half-edge 2x is the A-corner of crossing x through slots {0,3}, 2x+1 the
/// corner through {1,2}; each vertex lists its corners in the order the white
/// face of the Turaev surface passes them.
inline RibbonGraph ribbon_from_all_A(const LinkDiagram& d, const TuraevSurfaceMap& surface) {
  std::vector<std::vector<int>> cycles;
  for (const auto& face : surface.white_faces) {
    std::vector<int> cyc;
    for (int h : face) {
      const int arrive = d.opposite(h);
      const int slot = slot_of(arrive);
      const int x = crossing_of(arrive);
      cyc.push_back(2 * x + ((slot == 0 || slot == 3) ? 0 : 1));
    }
    cycles.push_back(std::move(cyc));
  }
  return RibbonGraph::from_vertex_cycles(cycles, d.crossing_count());
}

inline RibbonGraph ribbon_from_all_A(const LinkDiagram& d) { return ribbon_from_all_A(d, turaev_surface_map(d)); }

struct Multigraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

inline Multigraph underlying_graph(const RibbonGraph& g) {
  Multigraph m;
  m.vertices = g.vertex_count;
  for (int e = 0; e < g.edge_count(); ++e) m.edges.emplace_back(g.vertex_of[2 * e], g.vertex_of[2 * e + 1]);
  return m;
}

/// Integer polynomial in up to three variables, keyed by exponent triples.
class GraphPoly {
 public:
  using Exponents = std::array<int, 3>;

  GraphPoly() = default;
  explicit GraphPoly(std::array<std::string, 3> names) : names_(std::move(names)) {}

  static GraphPoly monomial(std::int64_t c, Exponents e, std::array<std::string, 3> names) {
    GraphPoly p(std::move(names));
    if (c != 0) p.terms_[e] = c;
    return p;
  }

  const std::map<Exponents, std::int64_t>& terms() const { return terms_; }
  const std::array<std::string, 3>& names() const { return names_; }
  bool is_zero() const { return terms_.empty(); }
  std::int64_t coeff(Exponents e) const {
    const auto it = terms_.find(e);
    return it == terms_.end() ? 0 : it->second;
  }

  GraphPoly& operator+=(const GraphPoly& o) {
    for (const auto& [e, c] : o.terms_) add(e, c);
    return *this;
  }
  friend GraphPoly operator+(GraphPoly a, const GraphPoly& b) { return a += b; }
  friend GraphPoly operator*(const GraphPoly& a, const GraphPoly& b) {
    GraphPoly r(a.names_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) r.add({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return r;
  }
  friend bool operator==(const GraphPoly& a, const GraphPoly& b) { return a.terms_ == b.terms_; }

  void add(Exponents e, std::int64_t c) {
    if (c == 0) return;
    auto& slot = terms_[e];
    slot += c;
    if (slot == 0) terms_.erase(e);
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      if (!out.empty()) out += c < 0 ? " - " : " + ";
      else if (c < 0) out += "-";
      const std::int64_t a = c < 0 ? -c : c;
      const bool bare = e[0] == 0 && e[1] == 0 && e[2] == 0;
      if (a != 1 || bare) out += std::to_string(a);
      for (int k = 0; k < 3; ++k) {
        if (e[k] == 0) continue;
        out += names_[k];
        if (e[k] != 1) out += "^" + std::to_string(e[k]);
      }
    }
    return out;
  }

 private:
  std::array<std::string, 3> names_{"x", "y", "z"};
  std::map<Exponents, std::int64_t> terms_;
};

struct TutteOptions {
  /// 0 picks the first edge of the canonical encoding; any other value picks
  /// deletion-contraction edges at random with this seed.
  std::uint64_t seed = 0;
};

namespace detail {

class TutteSolver {
 public:
  explicit TutteSolver(TutteOptions opt) : opt_(opt), rng_(opt.seed) {}

  GraphPoly solve(int n, std::vector<std::pair<int, int>> edges) {
    int loops = 0;
    std::vector<std::pair<int, int>> rest;
    for (auto [u, v] : edges) {
      if (u == v) ++loops;
      else rest.emplace_back(std::min(u, v), std::max(u, v));
    }
    GraphPoly y_pow = mono(1, {0, loops, 0});
    if (rest.empty()) return y_pow;
    auto [key, canon_n, canon] = canonical(n, rest);
    const auto hit = memo_.find(key);
    if (hit != memo_.end()) {
      if (hit->second.first != canon) throw std::logic_error("tutte: memo key collision");
      return y_pow * hit->second.second;
    }
    const std::size_t pick =
        opt_.seed == 0 ? 0 : std::uniform_int_distribution<std::size_t>(0, canon.size() - 1)(rng_);
    const auto [u, v] = canon[pick];
    std::vector<std::pair<int, int>> deleted = canon;
    deleted.erase(deleted.begin() + static_cast<long>(pick));
    std::vector<std::pair<int, int>> contracted;
    for (auto [a, b] : deleted) contracted.emplace_back(a == v ? u : a, b == v ? u : b);
    GraphPoly result;
    if (is_bridge(canon_n, deleted, u, v)) {
      result = mono(1, {1, 0, 0}) * solve(canon_n, contracted);
    } else {
      result = solve(canon_n, deleted) + solve(canon_n, contracted);
    }
    memo_.emplace(key, std::make_pair(canon, result));
    return y_pow * result;
  }

 private:
  static GraphPoly mono(std::int64_t c, GraphPoly::Exponents e) { return GraphPoly::monomial(c, e, {"x", "y", "z"}); }

  // Relabel non-isolated vertices by descending degree, then sort edges.
  static std::tuple<std::string, int, std::vector<std::pair<int, int>>> canonical(
      int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [u, v] : edges) {
      ++deg[u];
      ++deg[v];
    }
    std::vector<int> order;
    for (int k = 0; k < n; ++k)
      if (deg[k] > 0) order.push_back(k);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return deg[a] > deg[b]; });
    std::vector<int> label(static_cast<std::size_t>(n), -1);
    for (std::size_t k = 0; k < order.size(); ++k) label[order[k]] = static_cast<int>(k);
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : edges) {
      const int a = label[u], b = label[v];
      out.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(out.begin(), out.end());
    std::string key = std::to_string(order.size()) + ":";
    for (auto [a, b] : out) key += std::to_string(a) + "-" + std::to_string(b) + ",";
    return {key, static_cast<int>(order.size()), out};
  }

  static bool is_bridge(int n, const std::vector<std::pair<int, int>>& without, int u, int v) {
    UnionFind uf(n);
    for (auto [a, b] : without) uf.unite(a, b);
    return uf.find(u) != uf.find(v);
  }

  TutteOptions opt_;
  std::mt19937_64 rng_;
  std::unordered_map<std::string, std::pair<std::vector<std::pair<int, int>>, GraphPoly>> memo_;
};

}  // namespace detail

/// Tutte polynomial T(x, y) of a connected multigraph by deletion-contraction.
inline GraphPoly tutte(const Multigraph& g, TutteOptions opt = {}) {
  for (auto [u, v] : g.edges)
    if (u < 0 || v < 0 || u >= g.vertices || v >= g.vertices) throw std::invalid_argument("tutte: bad vertex index");
  detail::TutteSolver solver(opt);
  return solver.solve(g.vertices, g.edges);
}

inline constexpr int kSubgraphEdgeCap = 24;

/// Bollobas-Riordan polynomial R(X, Y, Z) = sum over spanning subgraphs F of
/// X^{k(F)-k(G)} Y^{n(F)} Z^{k(F)-bc(F)+n(F)}, with k components, n nullity
/// and bc boundary components of the ribbon subgraph.
inline GraphPoly bollobas_riordan(const RibbonGraph& g) {
  const int e = g.edge_count();
  if (e > kSubgraphEdgeCap) throw DiagramError(ErrorKind::capacity, "bollobas_riordan: too many edges");
  const int v = g.vertex_count;
  int k_g = 0;
  {
    detail::UnionFind uf(v);
    k_g = v;
    for (int k = 0; k < e; ++k)
      if (uf.unite(g.vertex_of[2 * k], g.vertex_of[2 * k + 1])) --k_g;
  }
  GraphPoly r({"X", "Y", "Z"});
  std::vector<int> sub_rot(static_cast<std::size_t>(2 * e));
  std::vector<char> seen(static_cast<std::size_t>(2 * e));
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << e); ++mask) {
    auto in = [&](int h) { return ((mask >> (h >> 1)) & 1U) != 0; };
    detail::UnionFind uf(v);
    int k = v;
    for (int j = 0; j < e; ++j)
      if (((mask >> j) & 1U) != 0 && uf.unite(g.vertex_of[2 * j], g.vertex_of[2 * j + 1])) --k;
    std::vector<char> touched(static_cast<std::size_t>(v), 0);
    for (int h = 0; h < 2 * e; ++h) {
      if (!in(h)) continue;
      touched[g.vertex_of[h]] = 1;
      int n = g.rotation[h];
      while (!in(n)) n = g.rotation[n];
      sub_rot[h] = n;
    }
    int bc = 0;
    std::fill(seen.begin(), seen.end(), 0);
    for (int h = 0; h < 2 * e; ++h) {
      if (!in(h) || seen[h]) continue;
      ++bc;
      for (int c = h; !seen[c]; c = sub_rot[c ^ 1]) seen[c] = 1;
    }
    for (int u = 0; u < v; ++u)
      if (!touched[u]) ++bc;
    const int size = std::popcount(mask);
    const int nullity = size - (v - k);
    r.add({k - k_g, nullity, k - bc + nullity}, 1);
  }
  return r;
}

/// Substitution turning R(G_A) into the Kauffman bracket:
///   <D> = s * A^{alpha c + beta V + gamma} R(sx A^px d, sy A^py d, 1/d),
/// with d = -A^2 - A^{-2}, V the vertex count and c the crossing count.
struct BracketSpecialization {
  int x_sign = 1, x_power = 2;
  int y_sign = 1, y_power = -2;
  int alpha = 1, beta = -2, gamma = 2;
  friend bool operator==(const BracketSpecialization&, const BracketSpecialization&) = default;
};

/// Calibrated on the 1-crossing kinks, the Hopf link and both trefoils.
inline constexpr BracketSpecialization kBracketSpecialization{};

inline LaurentPoly specialize_to_bracket(const GraphPoly& br, int crossings, int vertices,
                                         const BracketSpecialization& s = kBracketSpecialization) {
  const LaurentPoly loop = loop_value();
  LaurentPoly total(Variable::A);
  for (const auto& [e, c] : br.terms()) {
    const int a = e[0], b = e[1], z = e[2];
    const int loops = a + b - z;  // = bc(F) - 1 >= 0
    if (loops < 0) throw std::logic_error("specialize_to_bracket: negative loop power");
    std::int64_t coeff = c;
    if (s.x_sign < 0 && a % 2 != 0) coeff = -coeff;
    if (s.y_sign < 0 && b % 2 != 0) coeff = -coeff;
    total += (loop.pow(static_cast<unsigned>(loops)) * coeff).shifted(s.x_power * a + s.y_power * b);
  }
  return total.shifted(s.alpha * crossings + s.beta * vertices + s.gamma);
}

/// Every candidate substitution in a small family that reproduces the state
/// sum on all `diagrams`.
inline std::vector<BracketSpecialization> calibrate_bracket_specialization(const std::vector<LinkDiagram>& diagrams) {
  std::vector<BracketSpecialization> out;
  struct Sample {
    GraphPoly br;
    int c, v;
    LaurentPoly bracket;
  };
  std::vector<Sample> samples;
  for (const auto& d : diagrams) {
    const auto g = ribbon_from_all_A(d);
    samples.push_back({bollobas_riordan(g), d.crossing_count(), g.vertex_count, bracket_bruteforce(d)});
  }
  for (int xs : {1, -1})
    for (int xp : {2, -2})
      for (int ys : {1, -1})
        for (int yp : {2, -2})
          for (int al : {1, -1})
            for (int be : {2, -2})
              for (int ga : {-2, 0, 2}) {
                const BracketSpecialization s{xs, xp, ys, yp, al, be, ga};
                bool ok = true;
                for (const auto& smp : samples)
                  if (specialize_to_bracket(smp.br, smp.c, smp.v, s) != smp.bracket) {
                    ok = false;
                    break;
                  }
                if (ok) out.push_back(s);
              }
  return out;
}

/// T(-t, -1/t) written in q = t^{1/2}.
inline LaurentPoly tutte_at_jones_point(const GraphPoly& t) {
  LaurentPoly out(Variable::q);
  for (const auto& [e, c] : t.terms()) {
    const std::int64_t sign = (e[0] + e[1]) % 2 == 0 ? 1 : -1;
    out += LaurentPoly::monomial(sign * c, 2 * e[0] - 2 * e[1], Variable::q);
  }
  return out;
}

struct MonomialFactor {
  int sign = 1;
  int q_shift = 0;  // power of q = t^{1/2}
};

/// s and k with a == s q^k b, if any.
inline std::optional<MonomialFactor> monomial_ratio(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return std::nullopt;
  const int shift = a.min_degree() - b.min_degree();
  for (int sign : {1, -1})
    if (a == b.shifted(shift) * sign) return MonomialFactor{sign, shift};
  return std::nullopt;
}

struct ThistlethwaiteReport {
  bool match = false;          // V(1/t) against T(-t, -1/t)
  bool literal_match = false;  // V(t) against T(-t, -1/t)
  MonomialFactor factor;
  GraphPoly tutte;
  LaurentPoly jones;
  LaurentPoly tutte_value;
};

/// Compare the Jones polynomial with T_{G_A}(-t, -1/t) on a reduced
/// alternating diagram. With t = A^{-4} the state sum gives
/// <D> ~ T_{G_A}(-A^4, -A^{-4}), so the identity holds for V(1/t); the
/// comparison against V(t) is reported as `literal_match`.
inline ThistlethwaiteReport check_thistlethwaite(const LinkDiagram& d) {
  if (!is_alternating(d))
    throw DiagramError(ErrorKind::precondition, "check_thistlethwaite: diagram is not reduced alternating");
  ThistlethwaiteReport r;
  r.tutte = tutte(underlying_graph(ribbon_from_all_A(d)));
  r.jones = jones(d);
  r.tutte_value = tutte_at_jones_point(r.tutte);
  if (auto f = monomial_ratio(r.jones.substituted(-1, Variable::q), r.tutte_value)) {
    r.match = true;
    r.factor = *f;
  }
  r.literal_match = monomial_ratio(r.jones, r.tutte_value).has_value();
  return r;
}

struct BracketSpecializationReport {
  bool match = false;
  GraphPoly polynomial;
  LaurentPoly specialized;
  LaurentPoly bracket;
};

inline BracketSpecializationReport check_bracket_specialization(const LinkDiagram& d, int cap = kDefaultStateCap) {
  BracketSpecializationReport r;
  const auto g = ribbon_from_all_A(d);
  r.polynomial = bollobas_riordan(g);
  r.specialized = specialize_to_bracket(r.polynomial, d.crossing_count(), g.vertex_count);
  r.bracket = bracket_bruteforce(d, cap);
  r.match = r.specialized == r.bracket;
  return r;
}

}  // namespace turaev
