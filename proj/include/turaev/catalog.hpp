#pragma once

#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <istream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "turaev/cutting.hpp"
#include "turaev/diagram.hpp"
#include "turaev/khovanov.hpp"
#include "turaev/polynomials.hpp"
#include "turaev/ribbon.hpp"
#include "turaev/states.hpp"

namespace turaev {

struct CatalogEntry {
  std::string name;
  std::string pd;
  std::optional<bool> alternating;
  std::optional<bool> adequate;
  int line = 0;
};

struct CatalogDiagnostic {
  int line = 0;  // 0 for file-level messages
  std::string severity;
  std::string message;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::vector<CatalogDiagnostic> diagnostics;
};

namespace detail {

inline std::optional<bool> parse_flag(const std::string& s) {
  if (s == "Y" || s == "y" || s == "true" || s == "1") return true;
  if (s == "N" || s == "n" || s == "false" || s == "0") return false;
  return std::nullopt;
}

inline std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(line);
  while (std::getline(ss, cur, '\t')) out.push_back(cur);
  return out;
}

}  // namespace detail

/// Read `name<TAB>pd[<TAB>alternating<TAB>adequate]` lines. Blank lines and
/// lines starting with '#' are skipped; malformed lines become diagnostics.
inline Catalog parse_catalog(std::istream& in) {
  Catalog cat;
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto cols = detail::split_tabs(line);
    if (cols.size() < 2 || cols[0].empty()) {
      cat.diagnostics.push_back({number, "error", "expected name<TAB>pd"});
      continue;
    }
    CatalogEntry e{cols[0], cols[1], std::nullopt, std::nullopt, number};
    if (cols.size() > 2) e.alternating = detail::parse_flag(cols[2]);
    if (cols.size() > 3) e.adequate = detail::parse_flag(cols[3]);
    try {
      (void)parse_pd(e.pd);
    } catch (const DiagramError& err) {
      cat.diagnostics.push_back({number, "error", e.name + ": " + err.what()});
      continue;
    }
    cat.entries.push_back(std::move(e));
  }
  if (cat.entries.empty() && cat.diagnostics.empty()) cat.diagnostics.push_back({0, "warning", "catalog has no entries"});
  return cat;
}

inline Catalog ingest_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("ingest_catalog: cannot read " + path);
  return parse_catalog(in);
}

enum class Outcome { pass, fail, skipped };

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::pass: return "pass";
    case Outcome::fail: return "fail";
    case Outcome::skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  Outcome outcome = Outcome::skipped;
  std::string reason;
};

struct RunOptions {
  bool khovanov = false;
  int khovanov_cap = 9;
  int state_cap = kDefaultStateCap;
  int jobs = 1;
  bool timings = false;
};

struct EntryResult {
  std::string name;
  bool parsed = false;
  std::string error;
  int crossings = 0;
  int components = 0;
  int writhe = 0;
  int s_a = 0;
  int s_b = 0;
  int genus = 0;
  Adequacy adequacy;
  bool alternating = false;
  LaurentPoly jones{Variable::q};
  SpanReport span;
  std::optional<int> khovanov_width;
  std::vector<CheckResult> checks;
  double seconds = 0;
};

struct RunReport {
  RunOptions options;
  std::vector<EntryResult> entries;

  int count(Outcome o) const {
    int n = 0;
    for (const auto& e : entries)
      for (const auto& c : e.checks) n += c.outcome == o ? 1 : 0;
    return n;
  }
  bool all_passed() const {
    for (const auto& e : entries)
      if (!e.parsed) return false;
    return count(Outcome::fail) == 0;
  }
};

namespace detail {

inline CheckResult verdict(std::string name, bool ok, std::string why_not) {
  return {std::move(name), ok ? Outcome::pass : Outcome::fail, ok ? std::string() : std::move(why_not)};
}

inline CheckResult skipped(std::string name, std::string why) { return {std::move(name), Outcome::skipped, std::move(why)}; }

inline CheckResult guarded(const std::string& name, const std::function<CheckResult()>& fn) {
  try {
    return fn();
  } catch (const DiagramError& e) {
    if (e.kind() == ErrorKind::capacity) return skipped(name, e.what());
    return {name, Outcome::fail, e.what()};
  } catch (const std::exception& e) {
    return {name, Outcome::fail, e.what()};
  }
}

inline EntryResult run_entry(const CatalogEntry& entry, const RunOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  EntryResult r;
  r.name = entry.name;
  std::optional<LinkDiagram> parsed;
  try {
    parsed = parse_pd(entry.pd);
  } catch (const DiagramError& e) {
    r.error = e.what();
    return r;
  }
  const LinkDiagram& d = *parsed;
  r.parsed = true;
  r.crossings = d.crossing_count();
  r.components = d.component_count();
  r.writhe = d.writhe();
  const auto k = extreme_circle_counts(d);
  r.s_a = k.s_a;
  r.s_b = k.s_b;
  r.genus = turaev_genus_diagram(d);
  r.adequacy = adequacy(d);
  r.alternating = is_alternating(d);
  r.jones = jones(d);
  r.span = span_report(d, r.jones);
  auto& out = r.checks;

  if (entry.alternating || entry.adequate) {
    const bool ok = (!entry.alternating || *entry.alternating == r.alternating) &&
                    (!entry.adequate || *entry.adequate == r.adequacy.adequate());
    out.push_back(verdict("catalog-flags", ok, "computed alternating/adequate flags differ from the catalog"));
  } else {
    out.push_back(skipped("catalog-flags", "no expected flags"));
  }

  if (r.alternating) {
    out.push_back(verdict("alternating-baseline", r.genus == 0 && r.span.span == r.crossings,
                          "alternating diagram with genus " + std::to_string(r.genus) + " and span " +
                              std::to_string(r.span.span)));
  } else {
    out.push_back(skipped("alternating-baseline", "not reduced alternating"));
  }

  out.push_back(verdict("span-inequality", r.span.slack >= 0, "span exceeds c - g_T"));
  if (r.adequacy.adequate())
    out.push_back(verdict("adequate-equality", r.span.slack == 0, "adequate diagram with slack " + std::to_string(r.span.slack)));
  else
    out.push_back(skipped("adequate-equality", "not adequate"));

  out.push_back(guarded("surface-ribbon", [&] {
    const auto surface = turaev_surface_map(d);
    const int rg = ribbon_genus(ribbon_from_all_A(d, surface));
    return verdict("surface-ribbon", rg == r.genus && surface.genus() == r.genus,
                   "ribbon " + std::to_string(rg) + ", surface " + std::to_string(surface.genus()) + ", formula " +
                       std::to_string(r.genus));
  }));

  out.push_back(guarded("sweep-bruteforce", [&] {
    return verdict("sweep-bruteforce", bracket_sweep(d) == bracket_bruteforce(d, opt.state_cap),
                   "sweep and state-sum brackets differ");
  }));

  if (r.alternating) {
    out.push_back(guarded("thistlethwaite", [&] {
      return verdict("thistlethwaite", check_thistlethwaite(d).match, "Jones is not a unit multiple of the Tutte value");
    }));
  } else {
    out.push_back(skipped("thistlethwaite", "not reduced alternating"));
  }

  out.push_back(guarded("bracket-specialization", [&] {
    return verdict("bracket-specialization", check_bracket_specialization(d, opt.state_cap).match,
                   "specialized Bollobas-Riordan polynomial differs from the bracket");
  }));

  if (r.genus >= 1) {
    out.push_back(guarded("surgery-genus-drop", [&] {
      const auto arcs = cutting_arcs(d);
      if (arcs.empty()) return skipped("surgery-genus-drop", "no cutting arcs");
      for (const auto& arc : arcs) {
        const auto s = surgery(d, arc);
        if (s.connected && s.genus_after != r.genus - 1)
          return verdict("surgery-genus-drop", false,
                         "edges " + std::to_string(arc.edge1 + 1) + "," + std::to_string(arc.edge2 + 1) + " give genus " +
                             std::to_string(s.genus_after));
      }
      return verdict("surgery-genus-drop", true, "");
    }));
  } else {
    out.push_back(skipped("surgery-genus-drop", "genus 0"));
  }

  if (r.genus == 1 && is_reduced(d) && is_prime(d)) {
    out.push_back(guarded("genus-one-cycle", [&] {
      const auto cy = genus_one_structure(d);
      return verdict("genus-one-cycle", cy.is_cycle, cy.reason);
    }));
  } else {
    out.push_back(skipped("genus-one-cycle", "not a prime reduced genus-one diagram"));
  }

  if (opt.khovanov && d.crossing_count() <= opt.khovanov_cap) {
    out.push_back(guarded("khovanov-width", [&] {
      const auto w = check_width_bound(d, opt.khovanov_cap);
      r.khovanov_width = w.width;
      if (!w.euler_ok) return verdict("khovanov-width", false, "Euler characteristic differs from the Jones polynomial");
      return verdict("khovanov-width", w.ok,
                     "width " + std::to_string(w.width) + " against genus " + std::to_string(w.genus) +
                         (w.adequate ? " (adequate)" : ""));
    }));
  } else {
    out.push_back(skipped("khovanov-width", opt.khovanov ? "crossing count above the Khovanov cap" : "disabled"));
  }

  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace detail

/// Run every check on every entry. Results keep entry order regardless of
/// `jobs`.
inline RunReport run_invariants(const std::vector<CatalogEntry>& entries, const RunOptions& opt = {}) {
  RunReport rep;
  rep.options = opt;
  rep.entries.resize(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < entries.size(); k = next++) rep.entries[k] = detail::run_entry(entries[k], opt);
  };
  const int jobs = std::max(1, opt.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int p = 0; p < jobs; ++p) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  return rep;
}

}  // namespace turaev
