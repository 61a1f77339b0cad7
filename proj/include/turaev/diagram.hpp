#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace turaev {

// A dart is one end of an edge at a crossing: dart = 4 * crossing + slot.
// Slots run counterclockwise from the incoming under-strand, so slots 0 and 2
// carry the under-strand and slots 1 and 3 the over-strand.

inline constexpr int dart_of(int crossing, int slot) { return 4 * crossing + (slot & 3); }
inline constexpr int crossing_of(int dart) { return dart >> 2; }
inline constexpr int slot_of(int dart) { return dart & 3; }
inline constexpr int rotate_dart(int dart, int k) { return (dart & ~3) | ((dart + k) & 3); }
/// The dart on the same strand across the crossing.
inline constexpr int through(int dart) { return rotate_dart(dart, 2); }
inline constexpr bool is_under_slot(int slot) { return (slot & 1) == 0; }

struct PDCrossing {
  std::array<int, 4> slots{};
  friend bool operator==(const PDCrossing&, const PDCrossing&) = default;
};

enum class Severity { warning, error };

struct Diagnostic {
  Severity severity = Severity::error;
  std::string code;
  std::string message;
  std::string location;
};

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;

  bool ok() const {
    return std::none_of(diagnostics.begin(), diagnostics.end(),
                        [](const Diagnostic& d) { return d.severity == Severity::error; });
  }
  bool has(std::string_view code) const {
    return std::any_of(diagnostics.begin(), diagnostics.end(),
                       [&](const Diagnostic& d) { return d.code == code; });
  }
  void error(std::string code, std::string message, std::string location = {}) {
    diagnostics.push_back({Severity::error, std::move(code), std::move(message), std::move(location)});
  }
  void warn(std::string code, std::string message, std::string location = {}) {
    diagnostics.push_back({Severity::warning, std::move(code), std::move(message), std::move(location)});
  }
  std::string summary() const {
    std::string out;
    for (const auto& d : diagnostics) {
      if (!out.empty()) out += "; ";
      out += d.code + ": " + d.message;
      if (!d.location.empty()) out += " (" + d.location + ")";
    }
    return out;
  }
};

enum class ErrorKind { syntax, structural, precondition, capacity };

inline const char* error_kind_name(ErrorKind k) {
  switch (k) {
    case ErrorKind::syntax: return "syntax";
    case ErrorKind::structural: return "structural";
    case ErrorKind::precondition: return "precondition";
    case ErrorKind::capacity: return "capacity";
  }
  return "unknown";
}

class DiagramError : public std::runtime_error {
 public:
  DiagramError(ErrorKind kind, const std::string& message, ValidationReport report = {})
      : std::runtime_error(message), kind_(kind), report_(std::move(report)) {}
  ErrorKind kind() const { return kind_; }
  const ValidationReport& report() const { return report_; }

 private:
  ErrorKind kind_;
  ValidationReport report_;
};

/// Diagram in unlabeled form: edges are given by pairing darts. The
/// under-strand of every crossing sits on slots {0, 2} but may run either way;
/// `direction` holds +1 for a dart where its edge enters the crossing, -1
/// where it leaves, 0 when unknown.
struct RawDiagram {
  int crossings = 0;
  std::vector<int> partner;
  std::vector<std::int8_t> direction;
};

class LinkDiagram;

namespace detail {
struct Analysis;
Analysis analyze(const std::vector<PDCrossing>& pd, const std::vector<std::int8_t>* hints);
}  // namespace detail

/// A connected, planar link diagram with at least one crossing. Edge labels
/// are normalized to 1..2c along the traversal; edge ids in the API are
/// zero-based (label - 1).
class LinkDiagram {
 public:
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int edge_count() const { return 2 * crossing_count(); }
  int dart_count() const { return 4 * crossing_count(); }
  const std::vector<PDCrossing>& crossings() const { return crossings_; }

  int edge_at(int dart) const { return crossings_[crossing_of(dart)].slots[slot_of(dart)] - 1; }
  int opposite(int dart) const { return opposite_[dart]; }
  bool is_entry(int dart) const { return entry_[dart] != 0; }
  /// Dart where edge `e` enters a crossing.
  int head(int e) const { return head_[e]; }
  /// Dart where edge `e` leaves a crossing.
  int tail(int e) const { return tail_[e]; }

  /// +1 when the over-strand enters at slot 1, -1 when it enters at slot 3.
  int sign(int crossing) const { return is_entry(dart_of(crossing, 1)) ? 1 : -1; }
  int writhe() const {
    int w = 0;
    for (int x = 0; x < crossing_count(); ++x) w += sign(x);
    return w;
  }
  int positive_crossings() const { return (crossing_count() + writhe()) / 2; }
  int negative_crossings() const { return (crossing_count() - writhe()) / 2; }

  int component_count() const { return static_cast<int>(components_.size()); }
  /// Edge ids of each component in traversal order.
  const std::vector<std::vector<int>>& components() const { return components_; }
  int component_of_edge(int e) const { return component_of_edge_[e]; }

  /// Input label of each normalized edge.
  const std::vector<int>& original_labels() const { return original_labels_; }

  RawDiagram raw() const {
    RawDiagram r;
    r.crossings = crossing_count();
    r.partner = opposite_;
    r.direction.resize(opposite_.size());
    for (std::size_t d = 0; d < opposite_.size(); ++d) r.direction[d] = entry_[d] ? 1 : -1;
    return r;
  }

  std::string to_pd() const {
    std::string out;
    for (const auto& x : crossings_) {
      if (!out.empty()) out += ' ';
      out += "X(" + std::to_string(x.slots[0]) + "," + std::to_string(x.slots[1]) + "," +
             std::to_string(x.slots[2]) + "," + std::to_string(x.slots[3]) + ")";
    }
    return out;
  }

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) { return a.crossings_ == b.crossings_; }

 private:
  friend detail::Analysis detail::analyze(const std::vector<PDCrossing>&, const std::vector<std::int8_t>*);

  std::vector<PDCrossing> crossings_;
  std::vector<int> opposite_;
  std::vector<char> entry_;
  std::vector<int> head_;
  std::vector<int> tail_;
  std::vector<std::vector<int>> components_;
  std::vector<int> component_of_edge_;
  std::vector<int> original_labels_;
};

/// Faces of the planar map: each face is the cyclic list of darts it leaves
/// through, following dart -> next slot after the opposite dart.
inline std::vector<std::vector<int>> trace_faces(int crossings, const std::vector<int>& partner) {
  const int n = 4 * crossings;
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<int>> faces;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> face;
    for (int d = start; !seen[d]; d = rotate_dart(partner[d], 1)) {
      seen[d] = 1;
      face.push_back(d);
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

inline std::vector<std::vector<int>> planar_faces(const LinkDiagram& d) {
  std::vector<int> partner(static_cast<std::size_t>(d.dart_count()));
  for (int h = 0; h < d.dart_count(); ++h) partner[h] = d.opposite(h);
  return trace_faces(d.crossing_count(), partner);
}

/// Crossings met twice by some face. These are exactly the nugatory crossings.
inline std::vector<int> nugatory_crossings(int crossings, const std::vector<std::vector<int>>& faces) {
  std::vector<char> flagged(static_cast<std::size_t>(crossings), 0);
  for (const auto& f : faces) {
    std::vector<int> xs;
    for (int d : f) xs.push_back(crossing_of(d));
    std::sort(xs.begin(), xs.end());
    for (std::size_t k = 1; k < xs.size(); ++k)
      if (xs[k] == xs[k - 1]) flagged[xs[k]] = 1;
  }
  std::vector<int> out;
  for (int x = 0; x < crossings; ++x)
    if (flagged[x]) out.push_back(x);
  return out;
}

inline std::vector<int> nugatory_crossings(const LinkDiagram& d) {
  return nugatory_crossings(d.crossing_count(), planar_faces(d));
}

inline bool is_reduced(const LinkDiagram& d) { return nugatory_crossings(d).empty(); }

/// An edge alternates when it joins an over-passage to an under-passage.
inline bool edge_alternates(const LinkDiagram& d, int e) {
  return is_under_slot(slot_of(d.head(e))) != is_under_slot(slot_of(d.tail(e)));
}

inline bool all_edges_alternate(const LinkDiagram& d) {
  for (int e = 0; e < d.edge_count(); ++e)
    if (!edge_alternates(d, e)) return false;
  return true;
}

/// Reduced alternating. Diagrams with a nugatory crossing count as
/// non-alternating, the 1-crossing unknot included.
inline bool is_alternating(const LinkDiagram& d) { return all_edges_alternate(d) && is_reduced(d); }

namespace detail {

struct Analysis {
  ValidationReport report;
  std::optional<LinkDiagram> diagram;
};

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a < b) std::swap(a, b);
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

inline std::string crossing_location(int x) { return "crossing " + std::to_string(x + 1); }

inline Analysis analyze(const std::vector<PDCrossing>& pd, const std::vector<std::int8_t>* hints) {
  Analysis out;
  ValidationReport& rep = out.report;
  const int c = static_cast<int>(pd.size());
  if (c == 0) {
    rep.error("empty-diagram", "diagram has no crossings; at least one crossing is required");
    return out;
  }
  const int n = 4 * c;

  std::map<int, std::vector<int>> darts_of_label;
  for (int x = 0; x < c; ++x)
    for (int k = 0; k < 4; ++k) {
      const int label = pd[x].slots[k];
      if (label <= 0) rep.error("label-not-positive", "edge label " + std::to_string(label) + " is not positive",
                                crossing_location(x));
      darts_of_label[label].push_back(dart_of(x, k));
    }
  for (const auto& [label, darts] : darts_of_label)
    if (darts.size() != 2)
      rep.error("label-count", "edge label " + std::to_string(label) + " appears " + std::to_string(darts.size()) +
                                   " times; each label must appear exactly twice");
  if (!rep.ok()) return out;

  std::vector<int> opposite(static_cast<std::size_t>(n));
  std::vector<int> label_of_dart(static_cast<std::size_t>(n));
  for (const auto& [label, darts] : darts_of_label) {
    opposite[darts[0]] = darts[1];
    opposite[darts[1]] = darts[0];
    label_of_dart[darts[0]] = label_of_dart[darts[1]] = label;
  }

  // Orientation: +1 entry, -1 exit. Under-strands enter at slot 0.
  std::vector<std::int8_t> dir(static_cast<std::size_t>(n), 0);
  std::vector<int> queue;
  bool conflict = false;
  auto assign = [&](int d, std::int8_t v) {
    if (dir[d] == 0) {
      dir[d] = v;
      queue.push_back(d);
    } else if (dir[d] != v) {
      conflict = true;
    }
  };
  auto propagate = [&]() {
    while (!queue.empty()) {
      const int d = queue.back();
      queue.pop_back();
      assign(opposite[d], static_cast<std::int8_t>(-dir[d]));
      assign(through(d), static_cast<std::int8_t>(-dir[d]));
    }
  };
  for (int x = 0; x < c; ++x) {
    assign(dart_of(x, 0), 1);
    assign(dart_of(x, 2), -1);
  }
  propagate();
  if (hints != nullptr)
    for (int d = 0; d < n; ++d)
      if (dir[d] == 0 && (*hints)[d] != 0) {
        assign(d, (*hints)[d]);
        propagate();
      }
  for (int d = 0; d < n; ++d)
    if (dir[d] == 0) {
      assign(d, 1);
      propagate();
    }
  if (conflict) {
    rep.error("orientation-conflict",
              "strand traversal does not close consistently: an edge is incoming (or outgoing) at both ends");
    return out;
  }

  // Diagram connectivity through edges.
  UnionFind crossings_uf(c);
  for (int d = 0; d < n; ++d) crossings_uf.unite(crossing_of(d), crossing_of(opposite[d]));
  int pieces = 0;
  for (int x = 0; x < c; ++x)
    if (crossings_uf.find(x) == x) ++pieces;
  if (pieces > 1) {
    rep.error("split-diagram", "diagram has " + std::to_string(pieces) +
                                   " disconnected pieces; only connected diagrams are supported");
    return out;
  }

  const auto faces = trace_faces(c, opposite);
  const int f = static_cast<int>(faces.size());
  if (c - 2 * c + f != 2) {
    rep.error("not-spherical", "face tracing gives V - E + F = " + std::to_string(c - 2 * c + f) +
                                   " (V=" + std::to_string(c) + ", E=" + std::to_string(2 * c) +
                                   ", F=" + std::to_string(f) + "); expected 2");
    return out;
  }
  for (int x : nugatory_crossings(c, faces))
    rep.warn("nugatory-crossing", "crossing is nugatory; the diagram is not reduced", crossing_location(x));

  // Components, ordered by smallest input label; traversal starts there.
  std::vector<int> exit_dart_of_label_order;
  std::vector<int> comp_of_dart(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<int>> comp_exit_darts;
  std::vector<std::pair<int, int>> order;  // (min label, component)
  for (int d = 0; d < n; ++d) {
    if (dir[d] != -1 || comp_of_dart[d] != -1) continue;
    const int id = static_cast<int>(comp_exit_darts.size());
    std::vector<int> exits;
    int cur = d;
    int min_label = label_of_dart[d];
    do {
      exits.push_back(cur);
      comp_of_dart[cur] = comp_of_dart[opposite[cur]] = id;
      min_label = std::min(min_label, label_of_dart[cur]);
      cur = through(opposite[cur]);
    } while (cur != d);
    comp_exit_darts.push_back(std::move(exits));
    order.emplace_back(min_label, id);
  }
  std::sort(order.begin(), order.end());

  LinkDiagram diagram;
  diagram.crossings_.assign(static_cast<std::size_t>(c), PDCrossing{});
  diagram.opposite_ = opposite;
  diagram.entry_.resize(static_cast<std::size_t>(n));
  for (int d = 0; d < n; ++d) diagram.entry_[d] = dir[d] == 1 ? 1 : 0;
  diagram.head_.resize(static_cast<std::size_t>(2 * c));
  diagram.tail_.resize(static_cast<std::size_t>(2 * c));
  diagram.component_of_edge_.resize(static_cast<std::size_t>(2 * c));
  diagram.original_labels_.resize(static_cast<std::size_t>(2 * c));
  int next_edge = 0;
  for (const auto& [min_label, id] : order) {
    const auto& exits = comp_exit_darts[id];
    std::size_t start = 0;
    for (std::size_t k = 0; k < exits.size(); ++k)
      if (label_of_dart[exits[k]] == min_label) start = k;
    std::vector<int> edges;
    for (std::size_t k = 0; k < exits.size(); ++k) {
      const int t = exits[(start + k) % exits.size()];
      const int h = opposite[t];
      const int e = next_edge++;
      diagram.tail_[e] = t;
      diagram.head_[e] = h;
      diagram.crossings_[crossing_of(t)].slots[slot_of(t)] = e + 1;
      diagram.crossings_[crossing_of(h)].slots[slot_of(h)] = e + 1;
      diagram.component_of_edge_[e] = static_cast<int>(diagram.components_.size());
      diagram.original_labels_[e] = label_of_dart[t];
      edges.push_back(e);
    }
    diagram.components_.push_back(std::move(edges));
  }
  out.diagram = std::move(diagram);
  return out;
}

}  // namespace detail

/// Validate a crossing list and build the diagram. Throws DiagramError with
/// the collected diagnostics on failure.
inline LinkDiagram diagram_from_pd(const std::vector<PDCrossing>& pd) {
  auto a = detail::analyze(pd, nullptr);
  if (!a.report.ok()) {
    const ErrorKind kind = ErrorKind::structural;
    throw DiagramError(kind, "invalid diagram: " + a.report.summary(), a.report);
  }
  return std::move(*a.diagram);
}

/// Validation diagnostics for a crossing list, without throwing.
inline ValidationReport validate_pd(const std::vector<PDCrossing>& pd) { return detail::analyze(pd, nullptr).report; }

/// Parse a PD code such as `X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)`. Square
/// brackets and an enclosing `PD[...]` are accepted.
inline std::vector<PDCrossing> parse_pd_crossings(std::string_view text) {
  std::vector<PDCrossing> out;
  std::size_t i = 0;
  auto fail = [&](const std::string& what) {
    ValidationReport r;
    r.error("syntax", what, "offset " + std::to_string(i));
    throw DiagramError(ErrorKind::syntax, "PD syntax error at offset " + std::to_string(i) + ": " + what, r);
  };
  auto skip = [&]() {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',')) ++i;
  };
  auto read_int = [&]() {
    skip();
    std::size_t j = i;
    if (j < text.size() && (text[j] == '-' || text[j] == '+')) ++j;
    const std::size_t digits = j;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (j == digits) fail("expected an integer");
    const int v = std::stoi(std::string(text.substr(i, j - i)));
    i = j;
    return v;
  };
  skip();
  bool wrapped = false;
  if (text.substr(i, 2) == "PD") {
    i += 2;
    skip();
    if (i >= text.size() || (text[i] != '[' && text[i] != '(')) fail("expected '[' after PD");
    ++i;
    wrapped = true;
  }
  while (true) {
    skip();
    if (i >= text.size()) break;
    if (wrapped && (text[i] == ']' || text[i] == ')')) {
      ++i;
      skip();
      if (i != text.size()) fail("trailing characters after PD[...]");
      wrapped = false;
      break;
    }
    if (text.substr(i, 4) == "Loop") {
      fail("crossingless Loop components are not supported; diagrams need at least one crossing on every component");
    }
    if (text[i] != 'X') fail(std::string("expected 'X', found '") + text[i] + "'");
    ++i;
    skip();
    if (i >= text.size() || (text[i] != '(' && text[i] != '[')) fail("expected '(' after X");
    const char close = text[i] == '(' ? ')' : ']';
    ++i;
    PDCrossing x;
    for (int k = 0; k < 4; ++k) x.slots[k] = read_int();
    skip();
    if (i >= text.size() || text[i] != close) fail("expected 4 labels and a closing bracket");
    ++i;
    out.push_back(x);
  }
  if (wrapped) fail("unterminated PD[");
  return out;
}

inline LinkDiagram parse_pd(std::string_view text) {
  const auto crossings = parse_pd_crossings(text);
  if (crossings.empty()) {
    ValidationReport r;
    r.error("empty-diagram", "diagram has no crossings; at least one crossing is required");
    throw DiagramError(ErrorKind::structural, "empty diagram", r);
  }
  return diagram_from_pd(crossings);
}

struct OrientationSummary {
  ValidationReport report;
  int components = 0;
  int writhe = 0;
};

/// Re-run structural validation on `d` and report warnings such as nugatory
/// crossings together with the component count and writhe.
inline OrientationSummary validate_and_orient(const LinkDiagram& d) {
  OrientationSummary s;
  s.report = validate_pd(d.crossings());
  s.components = d.component_count();
  s.writhe = d.writhe();
  return s;
}

/// Build a diagram from raw form; returns the validation report and, when
/// valid, the normalized diagram.
inline detail::Analysis build_diagram(const RawDiagram& raw) {
  const int c = raw.crossings;
  const int n = 4 * c;
  detail::Analysis fail;
  if (c == 0) {
    fail.report.error("empty-diagram", "diagram has no crossings");
    return fail;
  }
  std::vector<std::int8_t> dir(static_cast<std::size_t>(n), 0);
  std::vector<int> queue;
  bool conflict = false;
  auto assign = [&](int d, std::int8_t v) {
    if (dir[d] == 0) {
      dir[d] = v;
      queue.push_back(d);
    } else if (dir[d] != v) {
      conflict = true;
    }
  };
  auto propagate = [&]() {
    while (!queue.empty()) {
      const int d = queue.back();
      queue.pop_back();
      assign(raw.partner[d], static_cast<std::int8_t>(-dir[d]));
      assign(through(d), static_cast<std::int8_t>(-dir[d]));
    }
  };
  for (int d = 0; d < n; ++d)
    if (raw.direction.size() == static_cast<std::size_t>(n) && raw.direction[d] != 0 && dir[d] == 0) {
      assign(d, raw.direction[d]);
      propagate();
    }
  for (int d = 0; d < n; ++d)
    if (dir[d] == 0) {
      assign(d, 1);
      propagate();
    }
  if (conflict) {
    fail.report.error("orientation-conflict", "direction hints are inconsistent along a strand");
    return fail;
  }
  // Rotate each crossing by 2 when its under-strand enters at slot 2.
  std::vector<int> rot(static_cast<std::size_t>(c), 0);
  for (int x = 0; x < c; ++x)
    if (dir[dart_of(x, 0)] == -1) rot[x] = 2;
  auto moved = [&](int d) { return rotate_dart(d, rot[crossing_of(d)]); };
  std::vector<PDCrossing> pd(static_cast<std::size_t>(c));
  std::vector<std::int8_t> hints(static_cast<std::size_t>(n), 0);
  int label = 0;
  std::vector<int> label_of(static_cast<std::size_t>(n), 0);
  for (int d = 0; d < n; ++d) {
    if (label_of[d] != 0) continue;
    ++label;
    label_of[d] = label_of[raw.partner[d]] = label;
  }
  for (int d = 0; d < n; ++d) {
    const int m = moved(d);
    pd[crossing_of(m)].slots[slot_of(m)] = label_of[d];
    hints[m] = dir[d];
  }
  return detail::analyze(pd, &hints);
}

inline LinkDiagram build_diagram_or_throw(const RawDiagram& raw) {
  auto a = build_diagram(raw);
  if (!a.report.ok()) throw DiagramError(ErrorKind::structural, "invalid diagram: " + a.report.summary(), a.report);
  return std::move(*a.diagram);
}

/// Swap over and under at the given crossings.
inline LinkDiagram change_crossings(const LinkDiagram& d, const std::vector<int>& which) {
  RawDiagram r = d.raw();
  std::vector<int> rot(static_cast<std::size_t>(d.crossing_count()), 0);
  for (int x : which) {
    if (x < 0 || x >= d.crossing_count())
      throw DiagramError(ErrorKind::precondition, "crossing index out of range");
    rot[x] = 3;
  }
  // Old slot k becomes new slot k - 1, so the old over-strand lands on {0, 2}.
  auto moved = [&](int dart) { return rotate_dart(dart, rot[crossing_of(dart)]); };
  RawDiagram out;
  out.crossings = r.crossings;
  out.partner.resize(r.partner.size());
  out.direction.resize(r.direction.size());
  for (std::size_t h = 0; h < r.partner.size(); ++h) {
    const int m = moved(static_cast<int>(h));
    out.partner[m] = moved(r.partner[h]);
    out.direction[m] = r.direction[h];
  }
  return build_diagram_or_throw(out);
}

inline LinkDiagram crossing_change(const LinkDiagram& d, int crossing) { return change_crossings(d, {crossing}); }

inline LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<int> all(static_cast<std::size_t>(d.crossing_count()));
  std::iota(all.begin(), all.end(), 0);
  return change_crossings(d, all);
}

/// Splice edge e1 of d1 with edge e2 of d2, preserving orientations.
inline LinkDiagram connected_sum(const LinkDiagram& d1, int e1, const LinkDiagram& d2, int e2) {
  if (e1 < 0 || e1 >= d1.edge_count() || e2 < 0 || e2 >= d2.edge_count())
    throw DiagramError(ErrorKind::precondition, "connected_sum: edge id out of range");
  RawDiagram a = d1.raw();
  const RawDiagram b = d2.raw();
  const int off = 4 * d1.crossing_count();
  a.crossings += b.crossings;
  for (std::size_t h = 0; h < b.partner.size(); ++h) {
    a.partner.push_back(b.partner[h] + off);
    a.direction.push_back(b.direction[h]);
  }
  const int t1 = d1.tail(e1), h1 = d1.head(e1);
  const int t2 = d2.tail(e2) + off, h2 = d2.head(e2) + off;
  a.partner[t1] = h2;
  a.partner[h2] = t1;
  a.partner[t2] = h1;
  a.partner[h1] = t2;
  return build_diagram_or_throw(a);
}

}  // namespace turaev
