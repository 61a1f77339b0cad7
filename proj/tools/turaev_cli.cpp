#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include "turaev/turaev.hpp"

namespace {

using turaev::json::Json;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Flags {
  int cap = turaev::kDefaultStateCap;
  int khovanov_cap = turaev::kDefaultKhovanovCap;
  std::string field = "q";
  bool pretty = false;
  int jobs = 1;
};

class InputError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& arg) {
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(arg);
  if (in) return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return arg;
}

void render_text(const Json& j, std::ostream& out, const std::string& indent) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !v.empty()) {
        out << indent << k << ":\n";
        render_text(v, out, indent + "  ");
      } else {
        out << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      }
    }
  } else if (j.is_array()) {
    bool flat = true;
    for (const auto& v : j) flat = flat && !v.is_object();
    if (flat) {
      out << indent << j.dump() << "\n";
      return;
    }
    for (const auto& v : j) {
      out << indent << "-\n";
      render_text(v, out, indent + "  ");
    }
  } else {
    out << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

void emit(const Json& j, const Flags& f) {
  if (f.pretty) render_text(j, std::cout, "");
  else std::cout << j.dump() << "\n";
}

turaev::Field parse_field(const std::string& s) {
  if (s == "q") return turaev::Field::rational;
  if (s == "f2") return turaev::Field::gf2;
  throw InputError("unknown field '" + s + "'; expected q or f2");
}

int cmd_parse(const turaev::LinkDiagram& d, const Flags& f) {
  emit(turaev::json::diagram(d), f);
  return kOk;
}

int cmd_genus(const turaev::LinkDiagram& d, const Flags& f) {
  const auto k = turaev::extreme_circle_counts(d);
  emit(Json{{"c", k.crossings}, {"sA", k.s_a}, {"sB", k.s_b}, {"genus", turaev::turaev_genus_diagram(d)}}, f);
  return kOk;
}

int cmd_adequacy(const turaev::LinkDiagram& d, const Flags& f) {
  const auto a = turaev::adequacy(d);
  emit(Json{{"A_adequate", a.a_adequate}, {"B_adequate", a.b_adequate}, {"adequate", a.adequate()},
            {"inadequate", a.inadequate()}},
       f);
  return kOk;
}

int cmd_jones(const turaev::LinkDiagram& d, const Flags& f) {
  const auto v = turaev::jones(d);
  Json out{{"writhe", d.writhe()}, {"bracket", turaev::json::polynomial(turaev::kauffman_bracket(d))},
           {"jones", turaev::json::polynomial(v)}};
  try {
    out["jones_t"] = turaev::json::polynomial(turaev::jones_in_t(v));
  } catch (const std::domain_error&) {
    out["jones_t"] = nullptr;
  }
  emit(out, f);
  return kOk;
}

int cmd_span(const turaev::LinkDiagram& d, const Flags& f) {
  const auto s = turaev::span_report(d);
  const bool ok = s.slack >= 0 && (!s.adequate || s.slack == 0);
  emit(Json{{"span", s.span}, {"c", s.crossings}, {"genus", s.genus}, {"slack", s.slack}, {"adequate", s.adequate},
            {"ok", ok}},
       f);
  return ok ? kOk : kCheckFailed;
}

int cmd_ribbon(const turaev::LinkDiagram& d, const Flags& f) {
  const auto surface = turaev::turaev_surface_map(d);
  const auto g = turaev::ribbon_from_all_A(d, surface);
  Json rot = Json::array();
  for (int v = 0; v < g.vertex_count; ++v) {
    Json cyc = Json::array();
    int start = -1;
    for (int h = 0; h < 2 * g.edge_count(); ++h)
      if (g.vertex_of[h] == v) {
        start = h;
        break;
      }
    if (start >= 0)
      for (int h = start;;) {
        cyc.push_back(h);
        h = g.rotation[h];
        if (h == start) break;
      }
    rot.push_back(std::move(cyc));
  }
  const int rg = turaev::ribbon_genus(g);
  const int formula = turaev::turaev_genus_diagram(d);
  const bool ok = rg == formula && surface.genus() == formula;
  emit(Json{{"vertices", g.vertex_count},
            {"edges", g.edge_count()},
            {"faces", g.faces().size()},
            {"genus", rg},
            {"surface_genus", surface.genus()},
            {"formula_genus", formula},
            {"rotation", std::move(rot)},
            {"ok", ok}},
       f);
  return ok ? kOk : kCheckFailed;
}

int cmd_tutte(const turaev::LinkDiagram& d, const Flags& f) {
  const auto t = turaev::tutte(turaev::underlying_graph(turaev::ribbon_from_all_A(d)));
  Json out{{"tutte", turaev::json::polynomial(t)}};
  int code = kOk;
  if (turaev::is_alternating(d)) {
    const auto r = turaev::check_thistlethwaite(d);
    out["thistlethwaite"] = Json{{"match", r.match},
                                 {"literal_match", r.literal_match},
                                 {"sign", r.factor.sign},
                                 {"t_shift", r.factor.q_shift % 2 == 0 ? Json(r.factor.q_shift / 2) : Json(nullptr)},
                                 {"q_shift", r.factor.q_shift},
                                 {"tutte_value", turaev::json::polynomial(r.tutte_value)}};
    if (!r.match) code = kCheckFailed;
  } else {
    out["thistlethwaite"] = nullptr;
  }
  emit(out, f);
  return code;
}

int cmd_br(const turaev::LinkDiagram& d, const Flags& f) {
  const auto r = turaev::check_bracket_specialization(d, f.cap);
  emit(Json{{"bollobas_riordan", turaev::json::polynomial(r.polynomial)},
            {"specialized", turaev::json::polynomial(r.specialized)},
            {"bracket", turaev::json::polynomial(r.bracket)},
            {"match", r.match}},
       f);
  return r.match ? kOk : kCheckFailed;
}

int cmd_decompose(const turaev::LinkDiagram& d, const Flags& f) {
  auto out = turaev::json::decomposition(d);
  const bool ok = out["cycle"].is_null() || out["cycle"]["is_cycle"].get<bool>();
  emit(out, f);
  return ok ? kOk : kCheckFailed;
}

int cmd_surgery(const turaev::LinkDiagram& d, const Flags& f, int which) {
  const auto arcs = turaev::cutting_arcs(d);
  if (arcs.empty()) throw turaev::DiagramError(turaev::ErrorKind::precondition, "surgery: diagram has no cutting arcs");
  if (which >= static_cast<int>(arcs.size()))
    throw InputError("arc index " + std::to_string(which) + " out of range; diagram has " + std::to_string(arcs.size()));
  Json results = Json::array();
  bool ok = true;
  for (int k = 0; k < static_cast<int>(arcs.size()); ++k) {
    if (which >= 0 && k != which) continue;
    const auto s = turaev::surgery(d, arcs[k]);
    Json pieces = Json::array();
    for (const auto& p : s.pieces) pieces.push_back(p.to_pd());
    const bool drop = !s.connected || s.genus_after == s.genus_before - 1;
    ok = ok && drop;
    results.push_back(Json{{"arc", turaev::json::cutting_arc(arcs[k])},
                           {"splice", turaev::splice_name(s.splice)},
                           {"connected", s.connected},
                           {"pieces", std::move(pieces)},
                           {"circle_gain", s.circle_gain},
                           {"genus_before", s.genus_before},
                           {"genus_after", s.genus_after},
                           {"ok", drop}});
  }
  emit(Json{{"surgeries", std::move(results)}}, f);
  return ok ? kOk : kCheckFailed;
}

int cmd_khovanov(const turaev::LinkDiagram& d, const Flags& f) {
  const auto field = parse_field(f.field);
  const auto cx = turaev::cube_complex(d, field, f.khovanov_cap);
  const auto t = turaev::homology(cx, f.jobs);
  auto out = turaev::json::betti(t);
  const int genus = turaev::turaev_genus_diagram(d);
  const bool adequate = turaev::adequacy(d).adequate();
  const bool euler = turaev::euler_characteristic(t) == turaev::unnormalized_jones(turaev::jones(d));
  const int w = turaev::delta_width(t);
  out["genus"] = genus;
  out["adequate"] = adequate;
  out["euler_matches_jones"] = euler;
  if (field == turaev::Field::rational) {
    out["width_bound"] = w - 2 <= genus;
    out["adequate_equality"] = adequate ? Json(w - 2 == genus) : Json(nullptr);
  }
  emit(out, f);
  bool ok = euler;
  if (field == turaev::Field::rational) ok = ok && w - 2 <= genus && (!adequate || w - 2 == genus);
  return ok ? kOk : kCheckFailed;
}

int cmd_batch(const std::vector<std::string>& paths, const Flags& f, bool khovanov, bool timings) {
  std::vector<turaev::CatalogEntry> entries;
  Json diags = Json::array();
  for (const auto& p : paths) {
    turaev::Catalog cat;
    try {
      cat = turaev::ingest_catalog(p);
    } catch (const std::runtime_error& e) {
      throw InputError(e.what());
    }
    for (const auto& dg : cat.diagnostics)
      diags.push_back(Json{{"file", p}, {"line", dg.line}, {"severity", dg.severity}, {"message", dg.message}});
    entries.insert(entries.end(), cat.entries.begin(), cat.entries.end());
  }
  turaev::RunOptions opt;
  opt.khovanov = khovanov;
  opt.khovanov_cap = std::min(f.khovanov_cap, 9);
  opt.state_cap = f.cap;
  opt.jobs = f.jobs;
  opt.timings = timings;
  const auto rep = turaev::run_invariants(entries, opt);
  auto out = turaev::json::report(rep);
  out["catalog_diagnostics"] = std::move(diags);
  emit(out, f);
  return rep.all_passed() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turaev surface invariants of link diagrams"};
  app.require_subcommand(1);
  Flags flags;
  app.add_option("--cap", flags.cap, "state enumeration cap (crossings)")->check(CLI::Range(1, 62));
  app.add_option("--khovanov-cap", flags.khovanov_cap, "crossing cap for the Khovanov cube")->check(CLI::Range(1, 24));
  app.add_option("--field", flags.field, "Khovanov coefficients: q (rationals) or f2");
  app.add_flag("--pretty", flags.pretty, "human-readable output instead of JSON");
  app.add_option("--jobs", flags.jobs, "worker threads")->check(CLI::Range(1, 256));

  std::string input;
  int arc = -1;
  auto pd_command = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("pd", input, "PD code, a file containing one, or - for standard input")->required();
    return sub;
  };
  auto* parse = pd_command("parse", "validate a PD code and print the normalized diagram");
  auto* genus = pd_command("genus", "all-A and all-B circle counts and the Turaev genus of the diagram");
  auto* adequacy = pd_command("adequacy", "A- and B-adequacy");
  auto* jones = pd_command("jones", "Kauffman bracket and Jones polynomial");
  auto* span = pd_command("span", "Jones span against c - g_T");
  auto* ribbon = pd_command("ribbon", "all-A ribbon graph and its genus");
  auto* tutte = pd_command("tutte", "Tutte polynomial of the all-A graph and the Jones comparison");
  auto* br = pd_command("br", "Bollobas-Riordan polynomial and the bracket specialization");
  auto* decompose = pd_command("decompose", "non-alternating edges, cutting arcs and alternating tangles");
  auto* surgery = pd_command("surgery", "surgery along cutting arcs");
  surgery->add_option("--arc", arc, "index of a single cutting arc");
  auto* khovanov = pd_command("khovanov", "Khovanov homology and the delta-width bound");
  std::vector<std::string> catalogs;
  bool with_khovanov = false, timings = false;
  auto* batch = app.add_subcommand("batch", "run every check over catalog files");
  batch->add_option("catalogs", catalogs, "catalog TSV files")->required();
  batch->add_flag("--khovanov", with_khovanov, "include the Khovanov width check");
  batch->add_flag("--timings", timings, "include per-entry timings");
  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInputError;
  }

  try {
    if (batch->parsed()) return cmd_batch(catalogs, flags, with_khovanov, timings);
    parse_field(flags.field);
    const auto d = turaev::parse_pd(read_input(input));
    if (parse->parsed()) return cmd_parse(d, flags);
    if (genus->parsed()) return cmd_genus(d, flags);
    if (adequacy->parsed()) return cmd_adequacy(d, flags);
    if (jones->parsed()) return cmd_jones(d, flags);
    if (span->parsed()) return cmd_span(d, flags);
    if (ribbon->parsed()) return cmd_ribbon(d, flags);
    if (tutte->parsed()) return cmd_tutte(d, flags);
    if (br->parsed()) return cmd_br(d, flags);
    if (decompose->parsed()) return cmd_decompose(d, flags);
    if (surgery->parsed()) return cmd_surgery(d, flags, arc);
    if (khovanov->parsed()) return cmd_khovanov(d, flags);
  } catch (const turaev::DiagramError& e) {
    std::cerr << "error (" << turaev::error_kind_name(e.kind()) << "): " << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
