#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "turaev/diagram.hpp"
#include "turaev/laurent.hpp"
#include "turaev/states.hpp"

namespace turaev {

// Kauffman bracket: <D> = sum over states of A^{a(s)-b(s)} d^{|s|-1}, with
// d = -A^2 - A^{-2}. Jones: V = (-A^3)^{-w(D)} <D>, stored in q = t^{1/2} = A^{-2}.

/// Assemble sum_{(k, n)} count * A^k * d^(n-1) from state tallies.
inline LaurentPoly bracket_from_tally(const std::map<std::pair<int, int>, std::int64_t>& tally) {
  const LaurentPoly loop = loop_value();
  std::map<int, LaurentPoly> loop_powers;
  LaurentPoly total(Variable::A);
  for (const auto& [key, count] : tally) {
    const auto [exponent, circles] = key;
    auto it = loop_powers.find(circles);
    if (it == loop_powers.end()) it = loop_powers.emplace(circles, loop.pow(static_cast<unsigned>(circles - 1))).first;
    total += (it->second * count).shifted(exponent);
  }
  return total;
}

/// State-sum bracket over all 2^c states. `jobs` > 1 partitions the mask range.
inline LaurentPoly bracket_bruteforce(const LinkDiagram& d, int cap = kDefaultStateCap, int jobs = 1) {
  check_state_cap(d, cap, "bracket_bruteforce");
  const int c = d.crossing_count();
  const std::uint64_t total = std::uint64_t{1} << c;
  auto run = [&](std::uint64_t first, std::uint64_t last, std::map<std::pair<int, int>, std::int64_t>& tally) {
    for (std::uint64_t m = first; m < last; ++m) {
      const int b = std::popcount(m);
      ++tally[{c - 2 * b, count_circles(d, m)}];
    }
  };
  std::map<std::pair<int, int>, std::int64_t> tally;
  if (jobs <= 1 || total < 4096) {
    run(0, total, tally);
  } else {
    const auto parts = static_cast<std::uint64_t>(jobs);
    std::vector<std::map<std::pair<int, int>, std::int64_t>> partial(parts);
    std::vector<std::thread> threads;
    for (std::uint64_t p = 0; p < parts; ++p)
      threads.emplace_back(run, total * p / parts, total * (p + 1) / parts, std::ref(partial[p]));
    for (auto& t : threads) t.join();
    for (const auto& part : partial)
      for (const auto& [k, v] : part) tally[k] += v;
  }
  return bracket_from_tally(tally);
}

inline constexpr int kDefaultSweepWidth = 12;

/// Greedy linear layout: repeatedly take the crossing that closes the most
/// open edges, trying every start crossing and keeping the narrowest layout.
inline std::pair<std::vector<int>, int> sweep_order(const LinkDiagram& d) {
  const int c = d.crossing_count();
  std::vector<int> best_order;
  int best_width = 1 << 30;
  for (int start = 0; start < c; ++start) {
    std::vector<int> open(static_cast<std::size_t>(d.edge_count()), 0);  // endpoints processed
    std::vector<char> used(static_cast<std::size_t>(c), 0);
    std::vector<int> order;
    int frontier = 0, width = 0;
    auto place = [&](int x) {
      used[x] = 1;
      order.push_back(x);
      for (int e : d.crossings()[x].slots) {
        const int id = e - 1;
        if (++open[id] == 1) ++frontier;
        else --frontier;
      }
      width = std::max(width, frontier);
    };
    place(start);
    for (int step = 1; step < c; ++step) {
      int pick = -1, pick_closed = -1, pick_front = 0;
      for (int x = 0; x < c; ++x) {
        if (used[x]) continue;
        int closed = 0, delta = 0;
        std::array<int, 4> seen{};
        int ns = 0;
        for (int e : d.crossings()[x].slots) {
          const int id = e - 1;
          const bool repeat = std::find(seen.begin(), seen.begin() + ns, id) != seen.begin() + ns;
          seen[ns++] = id;
          if (repeat) {
            delta -= 2;  // self-loop opened and closed here
            continue;
          }
          if (open[id] == 1) {
            ++closed;
            --delta;
          } else {
            ++delta;
          }
        }
        if (closed > pick_closed || (closed == pick_closed && frontier + delta < pick_front)) {
          pick = x;
          pick_closed = closed;
          pick_front = frontier + delta;
        }
      }
      place(pick);
    }
    if (width < best_width) {
      best_width = width;
      best_order = order;
    }
  }
  return {best_order, best_width};
}

/// Bracket by a left-to-right sweep. The state vector maps each perfect
/// matching of the open edge ends to its partial bracket; cost is exponential
/// in the sweep width rather than in c.
inline LaurentPoly bracket_sweep(const LinkDiagram& d, int width_cap = kDefaultSweepWidth) {
  const auto [order, width] = sweep_order(d);
  if (width > width_cap)
    throw DiagramError(ErrorKind::capacity, "bracket_sweep: sweep width " + std::to_string(width) +
                                                " exceeds the cap of " + std::to_string(width_cap));
  const LaurentPoly loop = loop_value();
  using Key = std::string;  // partner position per frontier slot
  std::unordered_map<Key, LaurentPoly> states;
  states.emplace(Key(), LaurentPoly::constant(1));
  std::vector<int> frontier;  // edge ids

  for (int x : order) {
    const auto& slots = d.crossings()[x].slots;
    const int f = static_cast<int>(frontier.size());
    // Node ids: 0..f-1 old frontier positions, f..f+3 the slots of x.
    std::vector<int> link(static_cast<std::size_t>(f + 4), -1);  // edge identification links
    std::vector<char> consumed(static_cast<std::size_t>(f), 0);
    std::vector<int> new_frontier;
    std::vector<int> new_pos_of_node(static_cast<std::size_t>(f + 4), -1);
    for (int k = 0; k < 4; ++k) {
      const int e = slots[k] - 1;
      const auto it = std::find(frontier.begin(), frontier.end(), e);
      if (it != frontier.end()) {
        const int p = static_cast<int>(it - frontier.begin());
        link[p] = f + k;
        link[f + k] = p;
        consumed[p] = 1;
        continue;
      }
      for (int k2 = 0; k2 < 4; ++k2)
        if (k2 != k && slots[k2] - 1 == e) {
          link[f + k] = f + k2;
        }
    }
    for (int p = 0; p < f; ++p)
      if (!consumed[p]) {
        new_pos_of_node[p] = static_cast<int>(new_frontier.size());
        new_frontier.push_back(frontier[p]);
      }
    for (int k = 0; k < 4; ++k)
      if (link[f + k] == -1) {
        new_pos_of_node[f + k] = static_cast<int>(new_frontier.size());
        new_frontier.push_back(slots[k] - 1);
      }

    std::unordered_map<Key, LaurentPoly> next;
    next.reserve(states.size() * 2);
    std::vector<int> arc(static_cast<std::size_t>(f + 4));
    std::vector<char> visited(static_cast<std::size_t>(f + 4));
    for (const auto& [key, poly] : states) {
      for (int sm = 0; sm < 2; ++sm) {
        const Smoothing smoothing = sm == 0 ? Smoothing::A : Smoothing::B;
        for (int p = 0; p < f; ++p) arc[p] = static_cast<unsigned char>(key[p]);
        for (int k = 0; k < 4; ++k) arc[f + k] = f + arc_partner(smoothing, k);
        std::fill(visited.begin(), visited.end(), 0);
        Key out(new_frontier.size(), '\0');
        // Paths alternate arc steps and link steps; they end at free ends.
        for (int start = 0; start < f + 4; ++start) {
          if (visited[start] || new_pos_of_node[start] == -1) continue;
          int cur = start;
          visited[cur] = 1;
          while (true) {
            const int a = arc[cur];
            visited[a] = 1;
            if (new_pos_of_node[a] != -1) {
              out[new_pos_of_node[start]] = static_cast<char>(new_pos_of_node[a]);
              out[new_pos_of_node[a]] = static_cast<char>(new_pos_of_node[start]);
              break;
            }
            cur = link[a];
            visited[cur] = 1;
          }
        }
        int loops = 0;
        for (int start = 0; start < f + 4; ++start) {
          if (visited[start]) continue;
          int cur = start;
          do {
            visited[cur] = 1;
            const int a = arc[cur];
            visited[a] = 1;
            cur = link[a];
          } while (cur != start);
          ++loops;
        }
        LaurentPoly term = poly.shifted(sm == 0 ? 1 : -1);
        if (loops > 0) term *= loop.pow(static_cast<unsigned>(loops));
        auto [it, inserted] = next.try_emplace(std::move(out), term);
        if (!inserted) it->second += term;
      }
    }
    states = std::move(next);
    frontier = std::move(new_frontier);
  }
  const auto it = states.find(Key());
  if (it == states.end()) return LaurentPoly(Variable::A);
  return it->second.divided_exact(loop);
}

/// Bracket through the sweep, falling back to the state sum when the sweep is
/// too wide.
inline LaurentPoly kauffman_bracket(const LinkDiagram& d) {
  if (sweep_order(d).second <= kDefaultSweepWidth) return bracket_sweep(d);
  return bracket_bruteforce(d);
}

/// (-A^3)^{-w} <D> rewritten in q = A^{-2}.
inline LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe) {
  LaurentPoly f = bracket.shifted(-3 * writhe);
  if (writhe % 2 != 0) f *= -1;
  return f.exponents_divided(-2, Variable::q);
}

/// Jones polynomial in q = t^{1/2}.
inline LaurentPoly jones(const LinkDiagram& d) { return jones_from_bracket(kauffman_bracket(d), d.writhe()); }

/// Jones polynomial in t; throws for links whose exponents are half-integral.
inline LaurentPoly jones_in_t(const LaurentPoly& jones_q) { return jones_q.exponents_divided(2, Variable::t); }

struct SpanReport {
  int span = 0;  // in powers of t
  int crossings = 0;
  int genus = 0;
  int slack = 0;  // c - g_T - span
  bool adequate = false;
};

inline SpanReport span_report(const LinkDiagram& d, const LaurentPoly& jones_q) {
  SpanReport r;
  r.span = jones_q.span() / 2;
  r.crossings = d.crossing_count();
  r.genus = turaev_genus_diagram(d);
  r.slack = r.crossings - r.genus - r.span;
  r.adequate = adequacy(d).adequate();
  return r;
}

inline SpanReport span_report(const LinkDiagram& d) { return span_report(d, jones(d)); }

struct GenusCertificate {
  bool certified = false;  // exact Turaev genus of the link
  int lower = 0;
  int upper = 0;
  std::string lower_source;  // "adequate", "khovanov-width" or "trivial"

  std::optional<int> exact() const { return certified ? std::optional<int>(upper) : std::nullopt; }
};

/// Exact Turaev genus of the link for adequate diagrams; otherwise an
/// interval from the Khovanov width (when supplied) up to g_T(D).
inline GenusCertificate turaev_genus_certificate(const LinkDiagram& d, std::optional<int> khovanov_width = {}) {
  GenusCertificate g;
  g.upper = turaev_genus_diagram(d);
  if (adequacy(d).adequate()) {
    g.certified = true;
    g.lower = g.upper;
    g.lower_source = "adequate";
    return g;
  }
  g.lower = 0;
  g.lower_source = "trivial";
  if (khovanov_width && *khovanov_width - 2 > 0) {
    g.lower = std::min(g.upper, *khovanov_width - 2);
    g.lower_source = "khovanov-width";
  }
  return g;
}

}  // namespace turaev
