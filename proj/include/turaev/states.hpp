#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "turaev/diagram.hpp"

namespace turaev {

enum class Smoothing : std::uint8_t { A, B };

// Arc pairings of the two smoothings: the A-smoothing joins slots (0,3) and (1,2), the B-smoothing (0,1) and (2,3).
inline constexpr int kArcPartnerA[4] = {3, 2, 1, 0};
inline constexpr int kArcPartnerB[4] = {1, 0, 3, 2};

inline constexpr int arc_partner(Smoothing s, int slot) {
  return s == Smoothing::A ? kArcPartnerA[slot] : kArcPartnerB[slot];
}

/// One marker per crossing. Bit x of the mask is set for a B-smoothing.
class State {
 public:
  State() = default;
  State(int crossings, std::uint64_t b_mask) : crossings_(crossings), mask_(b_mask) {
    if (crossings < 0 || crossings > 64) throw std::invalid_argument("State: crossing count out of range");
    if (crossings < 64 && (b_mask >> crossings) != 0) throw std::invalid_argument("State: marker count mismatch");
  }
  static State all_A(int crossings) { return State(crossings, 0); }
  static State all_B(int crossings) {
    return State(crossings, crossings == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << crossings) - 1);
  }

  int size() const { return crossings_; }
  std::uint64_t b_mask() const { return mask_; }
  Smoothing at(int x) const { return ((mask_ >> x) & 1U) != 0 ? Smoothing::B : Smoothing::A; }
  int b() const { return std::popcount(mask_); }
  int a() const { return crossings_ - b(); }
  State flipped(int x) const { return State(crossings_, mask_ ^ (std::uint64_t{1} << x)); }

  friend bool operator==(const State&, const State&) = default;

 private:
  int crossings_ = 0;
  std::uint64_t mask_ = 0;
};

inline State all_A(const LinkDiagram& d) { return State::all_A(d.crossing_count()); }
inline State all_B(const LinkDiagram& d) { return State::all_B(d.crossing_count()); }

struct StateResolution {
  int circle_count = 0;
  /// Circle id of every edge; ids are ordered by the smallest dart on the circle.
  std::vector<int> circle_of_edge;

  int circle_of_dart(const LinkDiagram& d, int dart) const { return circle_of_edge[d.edge_at(dart)]; }
};

/// Circle count only; the hot path for state sums.
inline int count_circles(const LinkDiagram& d, std::uint64_t b_mask) {
  const int c = d.crossing_count();
  const int e = d.edge_count();
  int parent[128];
  int local_parent_store_size = e;
  std::vector<int> heap;
  int* p = parent;
  if (local_parent_store_size > 128) {
    heap.resize(static_cast<std::size_t>(e));
    p = heap.data();
  }
  for (int k = 0; k < e; ++k) p[k] = k;
  auto find = [p](int a) {
    while (p[a] != a) {
      p[a] = p[p[a]];
      a = p[a];
    }
    return a;
  };
  int circles = e;
  for (int x = 0; x < c; ++x) {
    const auto& s = d.crossings()[x].slots;
    const bool b = ((b_mask >> x) & 1U) != 0;
    const int pairs[2][2] = {{0, b ? 1 : 3}, {2, b ? 3 : 1}};
    for (const auto& pr : pairs) {
      const int u = find(s[pr[0]] - 1), v = find(s[pr[1]] - 1);
      if (u != v) {
        p[u] = v;
        --circles;
      }
    }
  }
  return circles;
}

inline StateResolution resolve(const LinkDiagram& d, const State& s) {
  if (s.size() != d.crossing_count()) throw DiagramError(ErrorKind::precondition, "resolve: marker count mismatch");
  const int c = d.crossing_count();
  detail::UnionFind uf(d.edge_count());
  for (int x = 0; x < c; ++x) {
    const Smoothing sm = s.at(x);
    for (int k : {0, 2}) uf.unite(d.edge_at(dart_of(x, k)), d.edge_at(dart_of(x, arc_partner(sm, k))));
  }
  StateResolution r;
  r.circle_of_edge.assign(static_cast<std::size_t>(d.edge_count()), -1);
  std::vector<int> id_of_root(static_cast<std::size_t>(d.edge_count()), -1);
  for (int h = 0; h < d.dart_count(); ++h) {
    const int root = uf.find(d.edge_at(h));
    if (id_of_root[root] == -1) id_of_root[root] = r.circle_count++;
  }
  for (int e = 0; e < d.edge_count(); ++e) r.circle_of_edge[e] = id_of_root[uf.find(e)];
  return r;
}

struct CircleCounts {
  int crossings = 0;
  int s_a = 0;
  int s_b = 0;
};

inline CircleCounts extreme_circle_counts(const LinkDiagram& d) {
  return {d.crossing_count(), count_circles(d, all_A(d).b_mask()), count_circles(d, all_B(d).b_mask())};
}

/// (c + 2 - |s_A| - |s_B|) / 2.
inline int turaev_genus_diagram(const LinkDiagram& d) {
  const auto k = extreme_circle_counts(d);
  const int twice = k.crossings + 2 - k.s_a - k.s_b;
  if (twice < 0 || twice % 2 != 0)
    throw std::logic_error("turaev_genus_diagram: non-integral or negative genus");
  return twice / 2;
}

struct Adequacy {
  bool a_adequate = false;
  bool b_adequate = false;
  bool adequate() const { return a_adequate && b_adequate; }
  bool inadequate() const { return !a_adequate && !b_adequate; }
};

/// A-adequate when, at every crossing, the two A-arcs lie on distinct circles
/// of the all-A state; B-adequacy dually.
inline Adequacy adequacy(const LinkDiagram& d) {
  const auto ra = resolve(d, all_A(d));
  const auto rb = resolve(d, all_B(d));
  Adequacy out{true, true};
  for (int x = 0; x < d.crossing_count(); ++x) {
    // A-arcs at x pass slot 0 and slot 1; B-arcs pass slot 0 and slot 3.
    if (ra.circle_of_dart(d, dart_of(x, 0)) == ra.circle_of_dart(d, dart_of(x, 1))) out.a_adequate = false;
    if (rb.circle_of_dart(d, dart_of(x, 0)) == rb.circle_of_dart(d, dart_of(x, 3))) out.b_adequate = false;
  }
  return out;
}

inline constexpr int kDefaultStateCap = 20;

/// Visit every state with mask in [first, last). States come in increasing
/// mask order; disjoint ranges may be consumed in parallel.
inline void for_each_state_in(const LinkDiagram& d, std::uint64_t first, std::uint64_t last,
                              const std::function<void(const State&, const StateResolution&)>& fn) {
  for (std::uint64_t m = first; m < last; ++m) {
    const State s(d.crossing_count(), m);
    fn(s, resolve(d, s));
  }
}

inline void check_state_cap(const LinkDiagram& d, int cap, const char* what) {
  if (d.crossing_count() > cap || d.crossing_count() > 62)
    throw DiagramError(ErrorKind::capacity, std::string(what) + ": " + std::to_string(d.crossing_count()) +
                                                " crossings exceed the state enumeration cap of " +
                                                std::to_string(cap));
}

/// All 2^c states in increasing mask order.
inline void enumerate_states(const LinkDiagram& d, const std::function<void(const State&, const StateResolution&)>& fn,
                             int cap = kDefaultStateCap) {
  check_state_cap(d, cap, "enumerate_states");
  for_each_state_in(d, 0, std::uint64_t{1} << d.crossing_count(), fn);
}

/// Brute-force A-adequacy: |s| < |s_A| for every state with one B-smoothing.
inline bool a_adequate_by_states(const LinkDiagram& d) {
  const int sa = count_circles(d, 0);
  for (int x = 0; x < d.crossing_count(); ++x)
    if (count_circles(d, std::uint64_t{1} << x) >= sa) return false;
  return true;
}

inline bool b_adequate_by_states(const LinkDiagram& d) {
  const std::uint64_t all = all_B(d).b_mask();
  const int sb = count_circles(d, all);
  for (int x = 0; x < d.crossing_count(); ++x)
    if (count_circles(d, all ^ (std::uint64_t{1} << x)) >= sb) return false;
  return true;
}

/// Combinatorial map of the Turaev surface. Vertices are crossings, edges are
/// diagram edges, white faces are the all-A circles and black faces the all-B
/// circles. Each vertex turns its darts by +1 or -1 slot; the sign flips
/// across every non-alternating edge, which makes the diagram alternating on
/// the surface.
struct TuraevSurfaceMap {
  int vertices = 0;
  int edges = 0;
  std::vector<int> turn;       // per crossing, +1 or -1
  std::vector<int> rotation;   // dart -> next dart around its vertex
  std::vector<std::vector<int>> white_faces;  // dart cycles, one per all-A circle
  std::vector<std::vector<int>> black_faces;  // dart cycles, one per all-B circle

  int face_count() const { return static_cast<int>(white_faces.size() + black_faces.size()); }
  int euler_characteristic() const { return vertices - edges + face_count(); }
  int genus() const { return (2 - euler_characteristic()) / 2; }
};

/// Does a face arriving at `dart` (slot k, vertex turn t) follow an A-arc?
inline constexpr bool white_arrival(int slot, int turn) { return ((slot & 1) != 0) == (turn > 0); }

inline TuraevSurfaceMap turaev_surface_map(const LinkDiagram& d) {
  const int c = d.crossing_count();
  TuraevSurfaceMap m;
  m.vertices = c;
  m.edges = d.edge_count();
  m.turn.assign(static_cast<std::size_t>(c), 0);
  m.turn[0] = 1;
  std::vector<int> stack{0};
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (int k = 0; k < 4; ++k) {
      const int h = dart_of(x, k);
      const int o = d.opposite(h);
      const int y = crossing_of(o);
      const bool alternating = is_under_slot(slot_of(h)) != is_under_slot(slot_of(o));
      const int want = alternating ? m.turn[x] : -m.turn[x];
      if (m.turn[y] == 0) {
        m.turn[y] = want;
        stack.push_back(y);
      } else if (m.turn[y] != want) {
        throw std::logic_error("turaev_surface_map: odd number of non-alternating edges around a cycle");
      }
    }
  }
  m.rotation.resize(static_cast<std::size_t>(d.dart_count()));
  for (int h = 0; h < d.dart_count(); ++h) m.rotation[h] = rotate_dart(h, m.turn[crossing_of(h)]);

  std::vector<char> seen(static_cast<std::size_t>(d.dart_count()), 0);
  for (int start = 0; start < d.dart_count(); ++start) {
    if (seen[start]) continue;
    std::vector<int> face;
    int white = -1;
    for (int h = start; !seen[h]; h = m.rotation[d.opposite(h)]) {
      seen[h] = 1;
      face.push_back(h);
      const int arrive = d.opposite(h);
      const int w = white_arrival(slot_of(arrive), m.turn[crossing_of(arrive)]) ? 1 : 0;
      if (white == -1) white = w;
      if (white != w) throw std::logic_error("turaev_surface_map: face mixes A-corners and B-corners");
    }
    (white == 1 ? m.white_faces : m.black_faces).push_back(std::move(face));
  }
  return m;
}

}  // namespace turaev
