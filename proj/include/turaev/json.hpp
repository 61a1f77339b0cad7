#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "turaev/catalog.hpp"
#include "turaev/cutting.hpp"
#include "turaev/diagram.hpp"
#include "turaev/khovanov.hpp"
#include "turaev/laurent.hpp"
#include "turaev/polynomials.hpp"
#include "turaev/ribbon.hpp"
#include "turaev/states.hpp"

namespace turaev::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* kDiagramSchema = "turaev.diagram/1";
inline constexpr const char* kReportSchema = "turaev.report/1";
inline constexpr const char* kBettiSchema = "turaev.betti/1";
inline constexpr const char* kDecompositionSchema = "turaev.decomposition/1";

inline Json diagnostics(const ValidationReport& r) {
  Json out = Json::array();
  for (const auto& d : r.diagnostics) {
    Json j{{"severity", d.severity == Severity::error ? "error" : "warning"}, {"code", d.code}, {"message", d.message}};
    if (!d.location.empty()) j["location"] = d.location;
    out.push_back(std::move(j));
  }
  return out;
}

inline Json diagram(const LinkDiagram& d) {
  Json crossings = Json::array();
  Json signs = Json::array();
  for (int x = 0; x < d.crossing_count(); ++x) {
    const auto& s = d.crossings()[x].slots;
    crossings.push_back({s[0], s[1], s[2], s[3]});
    signs.push_back(d.sign(x));
  }
  Json components = Json::array();
  for (const auto& comp : d.components()) {
    Json labels = Json::array();
    for (int e : comp) labels.push_back(e + 1);
    components.push_back(std::move(labels));
  }
  return Json{{"schema", kDiagramSchema},
              {"pd", d.to_pd()},
              {"crossings", std::move(crossings)},
              {"signs", std::move(signs)},
              {"components", std::move(components)},
              {"writhe", d.writhe()},
              {"diagnostics", diagnostics(validate_and_orient(d).report)}};
}

/// {"variable": v, "terms": [[exponent, coefficient], ...], "text": ...}
inline Json polynomial(const LaurentPoly& p) {
  Json terms = Json::array();
  for (auto [e, c] : p.terms()) terms.push_back({e, c});
  return Json{{"variable", variable_name(p.variable())}, {"terms", std::move(terms)}, {"text", p.to_string()}};
}

inline Json polynomial(const GraphPoly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({e[0], e[1], e[2], c});
  const auto& n = p.names();
  return Json{{"variables", {n[0], n[1], n[2]}}, {"terms", std::move(terms)}, {"text", p.to_string()}};
}

inline Json betti(const BettiTable& t) {
  Json entries = Json::array();
  for (const auto& [k, v] : t.dims) entries.push_back({k.first, k.second, v});
  Json diag = Json::array();
  for (int x : t.diagonals()) diag.push_back(x);
  Json out{{"schema", kBettiSchema}, {"field", field_name(t.field)}, {"entries", std::move(entries)}};
  out["width"] = t.is_zero() ? 0 : delta_width(t);
  out["diagonals"] = std::move(diag);
  return out;
}

inline Json cutting_arc(const CuttingArc& a) {
  return Json{{"edges", {a.edge1 + 1, a.edge2 + 1}}, {"alpha", a.alpha}, {"beta", a.beta}, {"face", a.face}};
}

inline Json decomposition(const LinkDiagram& d) {
  const auto t = alternating_tangle_decomposition(d);
  Json tangles = Json::array();
  for (const auto& tg : t.tangles) {
    Json xs = Json::array(), es = Json::array(), frag = Json::array();
    for (int x : tg.crossings) {
      xs.push_back(x + 1);
      const auto& s = d.crossings()[x].slots;
      frag.push_back({s[0], s[1], s[2], s[3]});
    }
    for (int e : tg.internal_edges) es.push_back(e + 1);
    tangles.push_back(Json{{"crossings", std::move(xs)}, {"internal_edges", std::move(es)}, {"pd", std::move(frag)}});
  }
  Json connectors = Json::array();
  for (const auto& c : t.connectors) connectors.push_back(Json{{"edge", c.edge + 1}, {"from", c.tangle_a}, {"to", c.tangle_b}});
  Json na = Json::array();
  for (int e : non_alternating_edges(d)) na.push_back(e + 1);
  Json arcs = Json::array();
  for (const auto& a : cutting_arcs(d)) arcs.push_back(cutting_arc(a));
  Json out{{"schema", kDecompositionSchema},
           {"prime", is_prime(d)},
           {"non_alternating_edges", std::move(na)},
           {"cutting_arcs", std::move(arcs)},
           {"tangles", std::move(tangles)},
           {"connectors", std::move(connectors)}};
  if (turaev_genus_diagram(d) == 1 && is_reduced(d) && is_prime(d)) {
    const auto cy = genus_one_structure(d);
    Json links = Json::array();
    for (const auto& l : cy.links) {
      Json es = Json::array();
      for (int e : l) es.push_back(e + 1);
      links.push_back(std::move(es));
    }
    out["cycle"] = Json{{"is_cycle", cy.is_cycle}, {"order", cy.order}, {"links", std::move(links)},
                        {"needs_review", cy.needs_review}, {"reason", cy.reason}};
  } else {
    out["cycle"] = nullptr;
  }
  return out;
}

inline Json report(const RunReport& rep) {
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json j{{"name", e.name}, {"parsed", e.parsed}};
    if (!e.parsed) {
      j["error"] = e.error;
      entries.push_back(std::move(j));
      continue;
    }
    j["c"] = e.crossings;
    j["components"] = e.components;
    j["writhe"] = e.writhe;
    j["sA"] = e.s_a;
    j["sB"] = e.s_b;
    j["genus"] = e.genus;
    j["alternating"] = e.alternating;
    j["A_adequate"] = e.adequacy.a_adequate;
    j["B_adequate"] = e.adequacy.b_adequate;
    j["jones"] = e.jones.to_string();
    j["span"] = e.span.span;
    j["slack"] = e.span.slack;
    j["khovanov_width"] = e.khovanov_width ? Json(*e.khovanov_width) : Json(nullptr);
    Json checks = Json::array();
    for (const auto& c : e.checks) {
      Json cj{{"check", c.name}, {"outcome", outcome_name(c.outcome)}};
      if (!c.reason.empty()) cj["reason"] = c.reason;
      checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
    if (rep.options.timings) j["seconds"] = e.seconds;
    entries.push_back(std::move(j));
  }
  return Json{{"schema", kReportSchema},
              {"options",
               {{"khovanov", rep.options.khovanov},
                {"khovanov_cap", rep.options.khovanov_cap},
                {"state_cap", rep.options.state_cap}}},
              {"summary",
               {{"entries", rep.entries.size()},
                {"pass", rep.count(Outcome::pass)},
                {"fail", rep.count(Outcome::fail)},
                {"skipped", rep.count(Outcome::skipped)}}},
              {"entries", std::move(entries)}};
}

}  // namespace turaev::json
