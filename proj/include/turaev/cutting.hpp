#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "turaev/diagram.hpp"
#include "turaev/states.hpp"

namespace turaev {

/// Edges joining two overpasses or two underpasses, ascending.
inline std::vector<int> non_alternating_edges(const LinkDiagram& d) {
  std::vector<int> out;
  for (int e = 0; e < d.edge_count(); ++e)
    if (!edge_alternates(d, e)) out.push_back(e);
  return out;
}

/// Face ids on the two sides of every edge.
inline std::vector<std::pair<int, int>> edge_faces(const LinkDiagram& d) {
  const auto faces = planar_faces(d);
  std::vector<int> face_of(static_cast<std::size_t>(d.dart_count()));
  for (int f = 0; f < static_cast<int>(faces.size()); ++f)
    for (int h : faces[f]) face_of[h] = f;
  std::vector<std::pair<int, int>> out(static_cast<std::size_t>(d.edge_count()));
  for (int e = 0; e < d.edge_count(); ++e) {
    const int a = face_of[d.tail(e)], b = face_of[d.head(e)];
    out[e] = {std::min(a, b), std::max(a, b)};
  }
  return out;
}

/// A pair of distinct edges bounding the same two faces, if one exists. Such a
/// pair cuts the diagram into two pieces with crossings on each side.
inline std::optional<std::pair<int, int>> composite_edge_pair(const LinkDiagram& d) {
  const auto ef = edge_faces(d);
  std::map<std::pair<int, int>, int> first;
  for (int e = 0; e < d.edge_count(); ++e) {
    if (ef[e].first == ef[e].second) continue;
    auto [it, fresh] = first.emplace(ef[e], e);
    if (!fresh) return std::make_pair(it->second, e);
  }
  return std::nullopt;
}

inline bool is_prime(const LinkDiagram& d) { return !composite_edge_pair(d).has_value(); }

struct CuttingArc {
  int edge1 = -1;
  int edge2 = -1;
  int alpha = -1;  // all-A circle through both edges
  int beta = -1;   // all-B circle through both edges
  int face = -1;   // face of D containing the arc
  friend bool operator==(const CuttingArc&, const CuttingArc&) = default;
};

/// Unordered pairs of non-alternating edges lying on a common all-A circle and
/// a common all-B circle, and bounding a common face of D: the arc between
/// their midpoints runs through that face and meets D only at its ends.
inline std::vector<CuttingArc> cutting_arcs(const LinkDiagram& d) {
  const auto na = non_alternating_edges(d);
  std::vector<CuttingArc> out;
  if (na.empty()) return out;
  const auto ra = resolve(d, all_A(d));
  const auto rb = resolve(d, all_B(d));
  const auto ef = edge_faces(d);
  for (std::size_t i = 0; i < na.size(); ++i)
    for (std::size_t j = i + 1; j < na.size(); ++j) {
      const int e1 = na[i], e2 = na[j];
      if (ra.circle_of_edge[e1] != ra.circle_of_edge[e2] || rb.circle_of_edge[e1] != rb.circle_of_edge[e2]) continue;
      int face = -1;
      for (int f : {ef[e1].first, ef[e1].second})
        if (face == -1 && (f == ef[e2].first || f == ef[e2].second)) face = f;
      if (face != -1) out.push_back({e1, e2, ra.circle_of_edge[e1], rb.circle_of_edge[e1], face});
    }
  return out;
}

inline bool is_cutting_arc(const LinkDiagram& d, const CuttingArc& arc) {
  const auto all = cutting_arcs(d);
  return std::find(all.begin(), all.end(), arc) != all.end();
}

/// Crosswise reconnection of the two cut edges.
///  - `through`: tail of each edge joins the head of the other.
///  - `turn_back`: the two tails join, and the two heads join.
enum class Splice { through, turn_back };

inline const char* splice_name(Splice s) { return s == Splice::through ? "through" : "turn-back"; }

struct SurgeryResult {
  Splice splice = Splice::through;
  bool connected = true;
  std::vector<LinkDiagram> pieces;  // one piece unless the splice disconnects
  int circle_gain = 0;              // total |s_A| + |s_B| change over all pieces
  int genus_before = 0;
  int genus_after = 0;  // sum over pieces

  const LinkDiagram& diagram() const { return pieces.front(); }
};

namespace detail {

inline std::optional<std::vector<LinkDiagram>> split_and_build(const RawDiagram& r) {
  const int c = r.crossings;
  UnionFind uf(c);
  for (int h = 0; h < 4 * c; ++h) uf.unite(crossing_of(h), crossing_of(r.partner[h]));
  std::map<int, std::vector<int>> groups;
  for (int x = 0; x < c; ++x) groups[uf.find(x)].push_back(x);
  std::vector<LinkDiagram> out;
  for (const auto& [root, xs] : groups) {
    std::vector<int> index(static_cast<std::size_t>(c), -1);
    for (std::size_t k = 0; k < xs.size(); ++k) index[xs[k]] = static_cast<int>(k);
    RawDiagram p;
    p.crossings = static_cast<int>(xs.size());
    p.partner.resize(static_cast<std::size_t>(4 * p.crossings));
    p.direction.resize(p.partner.size());
    for (int x : xs)
      for (int k = 0; k < 4; ++k) {
        const int h = dart_of(x, k);
        const int o = r.partner[h];
        p.partner[dart_of(index[x], k)] = dart_of(index[crossing_of(o)], slot_of(o));
        p.direction[dart_of(index[x], k)] = r.direction.empty() ? 0 : r.direction[h];
      }
    auto a = build_diagram(p);
    if (!a.report.ok()) return std::nullopt;
    out.push_back(std::move(*a.diagram));
  }
  return out;
}

inline std::optional<SurgeryResult> try_splice(const LinkDiagram& d, const CuttingArc& arc, Splice s) {
  RawDiagram r = d.raw();
  const int t1 = d.tail(arc.edge1), h1 = d.head(arc.edge1);
  const int t2 = d.tail(arc.edge2), h2 = d.head(arc.edge2);
  if (s == Splice::through) {
    r.partner[t1] = h2;
    r.partner[h2] = t1;
    r.partner[t2] = h1;
    r.partner[h1] = t2;
  } else {
    r.partner[t1] = t2;
    r.partner[t2] = t1;
    r.partner[h1] = h2;
    r.partner[h2] = h1;
    r.direction.clear();
  }
  auto pieces = split_and_build(r);
  if (!pieces) return std::nullopt;
  SurgeryResult out;
  out.splice = s;
  out.connected = pieces->size() == 1;
  const auto before = extreme_circle_counts(d);
  int after = 0;
  for (const auto& p : *pieces) {
    const auto k = extreme_circle_counts(p);
    after += k.s_a + k.s_b;
    out.genus_after += turaev_genus_diagram(p);
  }
  out.circle_gain = after - before.s_a - before.s_b;
  out.genus_before = turaev_genus_diagram(d);
  out.pieces = std::move(*pieces);
  return out;
}

}  // namespace detail

/// Cut both edges of a cutting arc and reconnect them with the crosswise
/// splice that raises |s_A| + |s_B| by two; the splice that does not is
/// rejected. When both qualify the connected result wins, then `through`.
inline SurgeryResult surgery(const LinkDiagram& d, const CuttingArc& arc) {
  if (non_alternating_edges(d).empty())
    throw DiagramError(ErrorKind::precondition, "surgery: diagram has no non-alternating edges");
  if (turaev_genus_diagram(d) < 1) throw DiagramError(ErrorKind::precondition, "surgery: Turaev genus is 0");
  if (!is_cutting_arc(d, arc)) throw DiagramError(ErrorKind::precondition, "surgery: not a cutting arc of the diagram");
  std::optional<SurgeryResult> best;
  for (Splice s : {Splice::through, Splice::turn_back}) {
    auto r = detail::try_splice(d, arc, s);
    if (!r || r->circle_gain != 2) continue;
    if (!best || (r->connected && !best->connected)) best = std::move(r);
  }
  if (!best) throw DiagramError(ErrorKind::precondition, "surgery: neither splice is planar with a circle gain of 2");
  return *best;
}

struct Tangle {
  std::vector<int> crossings;
  std::vector<int> internal_edges;
};

struct Connector {
  int edge = -1;
  int tangle_a = -1;  // tangle at the tail
  int tangle_b = -1;  // tangle at the head
};

struct TangleDecomposition {
  std::vector<Tangle> tangles;
  std::vector<Connector> connectors;
  std::vector<int> tangle_of_crossing;

  int tangle_count() const { return static_cast<int>(tangles.size()); }
};

/// Cut every non-alternating edge and collect the pieces. Each piece is
/// alternating; the connectors are exactly the cut edges.
inline TangleDecomposition alternating_tangle_decomposition(const LinkDiagram& d) {
  const int c = d.crossing_count();
  detail::UnionFind uf(c);
  for (int e = 0; e < d.edge_count(); ++e)
    if (edge_alternates(d, e)) uf.unite(crossing_of(d.tail(e)), crossing_of(d.head(e)));
  TangleDecomposition t;
  t.tangle_of_crossing.assign(static_cast<std::size_t>(c), -1);
  std::map<int, int> id_of_root;
  for (int x = 0; x < c; ++x) {
    const int root = uf.find(x);
    auto [it, fresh] = id_of_root.emplace(root, static_cast<int>(t.tangles.size()));
    if (fresh) t.tangles.emplace_back();
    t.tangle_of_crossing[x] = it->second;
    t.tangles[it->second].crossings.push_back(x);
  }
  for (int e = 0; e < d.edge_count(); ++e) {
    const int a = t.tangle_of_crossing[crossing_of(d.tail(e))];
    const int b = t.tangle_of_crossing[crossing_of(d.head(e))];
    if (edge_alternates(d, e)) t.tangles[a].internal_edges.push_back(e);
    else t.connectors.push_back({e, a, b});
  }
  return t;
}

/// Rebuild the diagram's PD from a decomposition; equals `d.to_pd()` exactly.
inline std::string reassemble_pd(const LinkDiagram& d, const TangleDecomposition& t) {
  std::vector<PDCrossing> xs(static_cast<std::size_t>(d.crossing_count()));
  auto place = [&](int e) {
    xs[crossing_of(d.tail(e))].slots[slot_of(d.tail(e))] = e + 1;
    xs[crossing_of(d.head(e))].slots[slot_of(d.head(e))] = e + 1;
  };
  for (const auto& tg : t.tangles)
    for (int e : tg.internal_edges) place(e);
  for (const auto& cn : t.connectors) place(cn.edge);
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += ' ';
    out += "X(" + std::to_string(x.slots[0]) + "," + std::to_string(x.slots[1]) + "," + std::to_string(x.slots[2]) +
           "," + std::to_string(x.slots[3]) + ")";
  }
  return out;
}

struct CycleDescription {
  bool is_cycle = false;
  std::vector<int> order;                 // tangles in cyclic order
  std::vector<std::vector<int>> links;    // connector edges between order[k] and order[k+1]
  bool needs_review = false;              // single-tangle cycle
  std::string reason;                     // why the structure check failed, if it did
};

/// Check that a Turaev genus one diagram is a cycle of alternating 2-tangles:
/// every tangle has four boundary connectors, and consecutive tangles around
/// a single cycle share exactly two strands.
inline CycleDescription genus_one_structure(const LinkDiagram& d) {
  if (turaev_genus_diagram(d) != 1)
    throw DiagramError(ErrorKind::precondition, "genus_one_structure: Turaev genus of the diagram is not 1");
  if (!is_reduced(d)) throw DiagramError(ErrorKind::precondition, "genus_one_structure: diagram is not reduced");
  if (!is_prime(d)) throw DiagramError(ErrorKind::precondition, "genus_one_structure: diagram is not prime");
  const auto t = alternating_tangle_decomposition(d);
  CycleDescription out;
  const int n = t.tangle_count();
  if (n == 1) {
    out.needs_review = true;
    out.reason = "single tangle: every non-alternating edge returns to the same tangle";
    return out;
  }
  std::vector<int> degree(static_cast<std::size_t>(n), 0);
  std::map<std::pair<int, int>, std::vector<int>> between;
  for (const auto& cn : t.connectors) {
    if (cn.tangle_a == cn.tangle_b) {
      out.reason = "connector edge " + std::to_string(cn.edge + 1) + " returns to its own tangle";
      return out;
    }
    ++degree[cn.tangle_a];
    ++degree[cn.tangle_b];
    between[{std::min(cn.tangle_a, cn.tangle_b), std::max(cn.tangle_a, cn.tangle_b)}].push_back(cn.edge);
  }
  for (int k = 0; k < n; ++k)
    if (degree[k] != 4) {
      out.reason = "tangle " + std::to_string(k) + " has " + std::to_string(degree[k]) + " boundary points, not 4";
      return out;
    }
  const int strands_per_link = n == 2 ? 4 : 2;
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
  for (const auto& [pair, edges] : between) {
    if (static_cast<int>(edges.size()) != strands_per_link) {
      out.reason = "tangles " + std::to_string(pair.first) + " and " + std::to_string(pair.second) + " share " +
                   std::to_string(edges.size()) + " strands";
      return out;
    }
    adj[pair.first].push_back(pair.second);
    adj[pair.second].push_back(pair.first);
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  int prev = -1, cur = 0;
  while (!seen[cur]) {
    seen[cur] = 1;
    out.order.push_back(cur);
    int next = -1;
    for (int v : adj[cur])
      if (v != prev && !seen[v]) {
        next = v;
        break;
      }
    if (next == -1) break;
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(out.order.size()) != n) {
    out.order.clear();
    out.reason = "tangle adjacency graph is not a single cycle";
    return out;
  }
  for (int k = 0; k < n; ++k) {
    const int a = out.order[k], b = out.order[(k + 1) % n];
    out.links.push_back(between[{std::min(a, b), std::max(a, b)}]);
  }
  if (n == 2) out.links.pop_back();
  out.is_cycle = true;
  return out;
}

}  // namespace turaev
