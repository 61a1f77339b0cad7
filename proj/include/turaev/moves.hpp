#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "turaev/diagram.hpp"

namespace turaev {

enum class Move { R1Plus, R1Minus, R2, R3 };

inline const char* move_name(Move m) {
  switch (m) {
    case Move::R1Plus: return "R1+";
    case Move::R1Minus: return "R1-";
    case Move::R2: return "R2";
    case Move::R3: return "R3";
  }
  return "?";
}

/// Where a move applies.
///  - R1+/R1-: `edge` receives a kink; `variant` (0 or 1) picks the curl side.
///  - R2: `edge` is pushed over `other_edge` across their common `face`.
///  - R3: `face` is a triangle whose strands are moved across each other.
struct MoveSite {
  Move move = Move::R1Plus;
  int edge = -1;
  int other_edge = -1;
  int face = -1;
  int variant = 0;
};

namespace detail {

inline RawDiagram grown(const LinkDiagram& d, int extra) {
  RawDiagram r = d.raw();
  r.crossings += extra;
  r.partner.resize(static_cast<std::size_t>(4 * r.crossings), -1);
  r.direction.resize(static_cast<std::size_t>(4 * r.crossings), 0);
  return r;
}

inline void join(RawDiagram& r, int out_dart, int in_dart) {
  r.partner[out_dart] = in_dart;
  r.partner[in_dart] = out_dart;
  r.direction[out_dart] = -1;
  r.direction[in_dart] = 1;
}

inline std::optional<LinkDiagram> accept(const RawDiagram& r) {
  auto a = build_diagram(r);
  if (!a.report.ok()) return std::nullopt;
  return std::move(*a.diagram);
}

inline bool has_face_on(const LinkDiagram& d, std::vector<int> crossings) {
  std::sort(crossings.begin(), crossings.end());
  for (const auto& f : planar_faces(d)) {
    if (f.size() != crossings.size()) continue;
    std::vector<int> xs;
    for (int h : f) xs.push_back(crossing_of(h));
    std::sort(xs.begin(), xs.end());
    if (xs == crossings) return true;
  }
  return false;
}

inline std::vector<LinkDiagram> r1_candidates(const LinkDiagram& d, int e) {
  std::vector<LinkDiagram> out;
  const int x = d.crossing_count();
  for (int a : {0, 1})
    for (int b : {a + 1, a + 3}) {
      RawDiagram r = grown(d, 1);
      join(r, d.tail(e), dart_of(x, a));
      join(r, dart_of(x, a + 2), dart_of(x, b));
      join(r, dart_of(x, b + 2), d.head(e));
      if (auto k = accept(r)) out.push_back(std::move(*k));
    }
  return out;
}

inline std::optional<LinkDiagram> r2_candidate(const LinkDiagram& d, int over, int under) {
  const int x = d.crossing_count(), y = x + 1;
  for (int s1 : {1, 3})
    for (int s2 : {1, 3})
      for (int first : {x, y})
        for (int u1 : {0, 2})
          for (int u2 : {0, 2}) {
            RawDiagram r = grown(d, 2);
            join(r, d.tail(over), dart_of(x, s1));
            join(r, dart_of(x, s1 + 2), dart_of(y, s2));
            join(r, dart_of(y, s2 + 2), d.head(over));
            const int second = first == x ? y : x;
            join(r, d.tail(under), dart_of(first, u1));
            join(r, dart_of(first, u1 + 2), dart_of(second, u2));
            join(r, dart_of(second, u2 + 2), d.head(under));
            auto k = accept(r);
            if (k && has_face_on(*k, {x, y})) return k;
          }
  return std::nullopt;
}

struct TriangleStrand {
  int tail;  // exit dart of the first triangle crossing
  int head;  // entry dart of the second
};

inline std::optional<std::array<TriangleStrand, 3>> triangle_strands(const LinkDiagram& d, const std::vector<int>& face) {
  if (face.size() != 3) return std::nullopt;
  std::array<int, 3> xs{};
  std::array<TriangleStrand, 3> s{};
  for (int k = 0; k < 3; ++k) {
    const int h = face[k];
    xs[k] = crossing_of(h);
    const int o = d.opposite(h);
    s[k] = d.is_entry(h) ? TriangleStrand{o, h} : TriangleStrand{h, o};
  }
  if (xs[0] == xs[1] || xs[1] == xs[2] || xs[0] == xs[2]) return std::nullopt;
  std::array<int, 3> over{};
  for (int k = 0; k < 3; ++k)
    over[k] = (is_under_slot(slot_of(s[k].tail)) ? 0 : 1) + (is_under_slot(slot_of(s[k].head)) ? 0 : 1);
  std::array<int, 3> sorted = over;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2}) return std::nullopt;
  return s;
}

inline std::optional<LinkDiagram> r3_candidate(const LinkDiagram& d, const std::vector<int>& face) {
  const auto strands = triangle_strands(d, face);
  if (!strands) return std::nullopt;
  // Each strand meets its two crossings in the opposite order afterwards.
  const RawDiagram old = d.raw();
  std::vector<int> image(old.partner.size());
  for (std::size_t h = 0; h < image.size(); ++h) image[h] = static_cast<int>(h);
  std::vector<char> inner(old.partner.size(), 0);
  for (const auto& s : *strands) {
    image[through(s.tail)] = s.head;
    image[through(s.head)] = s.tail;
    inner[s.tail] = inner[s.head] = 1;
  }
  RawDiagram r = old;
  for (std::size_t h = 0; h < old.partner.size(); ++h) {
    if (inner[h]) continue;
    r.partner[image[h]] = image[old.partner[h]];
  }
  for (const auto& s : *strands) {
    r.partner[through(s.head)] = through(s.tail);
    r.partner[through(s.tail)] = through(s.head);
  }
  auto k = accept(r);
  if (!k) return std::nullopt;
  std::vector<int> xs;
  for (int h : face) xs.push_back(crossing_of(h));
  if (!has_face_on(*k, xs)) return std::nullopt;
  return k;
}

}  // namespace detail

/// Every site where `move` applies.
inline std::vector<MoveSite> move_sites(const LinkDiagram& d, Move move) {
  std::vector<MoveSite> out;
  switch (move) {
    case Move::R1Plus:
    case Move::R1Minus:
      for (int e = 0; e < d.edge_count(); ++e)
        for (int v : {0, 1}) out.push_back({move, e, -1, -1, v});
      break;
    case Move::R2: {
      const auto faces = planar_faces(d);
      for (int f = 0; f < static_cast<int>(faces.size()); ++f) {
        std::vector<int> es;
        for (int h : faces[f]) es.push_back(d.edge_at(h));
        for (int a : es)
          for (int b : es)
            if (a != b) out.push_back({move, a, b, f, 0});
      }
      break;
    }
    case Move::R3: {
      const auto faces = planar_faces(d);
      for (int f = 0; f < static_cast<int>(faces.size()); ++f)
        if (detail::triangle_strands(d, faces[f])) out.push_back({move, -1, -1, f, 0});
      break;
    }
  }
  return out;
}

/// Apply one Reidemeister move, producing an isotopic diagram. Throws a
/// precondition DiagramError when the site does not admit the move.
inline LinkDiagram reidemeister_variant(const LinkDiagram& d, Move move, const MoveSite& site) {
  auto inapplicable = [&](const std::string& why) {
    return DiagramError(ErrorKind::precondition, std::string("reidemeister_variant ") + move_name(move) + ": " + why);
  };
  switch (move) {
    case Move::R1Plus:
    case Move::R1Minus: {
      if (site.edge < 0 || site.edge >= d.edge_count()) throw inapplicable("edge out of range");
      const int want = move == Move::R1Plus ? 1 : -1;
      int seen = 0;
      for (auto& k : detail::r1_candidates(d, site.edge)) {
        const int before = d.writhe();
        if (k.writhe() - before != want) continue;
        if (seen++ == site.variant) return std::move(k);
      }
      throw inapplicable("no kink of the requested sign and variant");
    }
    case Move::R2: {
      const auto faces = planar_faces(d);
      if (site.face < 0 || site.face >= static_cast<int>(faces.size())) throw inapplicable("face out of range");
      if (site.edge == site.other_edge) throw inapplicable("the two edges must differ");
      bool on_a = false, on_b = false;
      for (int h : faces[site.face]) {
        on_a = on_a || d.edge_at(h) == site.edge;
        on_b = on_b || d.edge_at(h) == site.other_edge;
      }
      if (!on_a || !on_b) throw inapplicable("both edges must border the face");
      if (auto k = detail::r2_candidate(d, site.edge, site.other_edge)) return std::move(*k);
      throw inapplicable("no planar bigon realization");
    }
    case Move::R3: {
      const auto faces = planar_faces(d);
      if (site.face < 0 || site.face >= static_cast<int>(faces.size())) throw inapplicable("face out of range");
      if (auto k = detail::r3_candidate(d, faces[site.face])) return std::move(*k);
      throw inapplicable("face is not a triangle with a top, middle and bottom strand");
    }
  }
  throw inapplicable("unknown move");
}

}  // namespace turaev
