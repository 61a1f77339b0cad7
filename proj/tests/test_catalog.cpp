#include <gtest/gtest.h>

#include <set>

#include "support.hpp"
#include "turaev/json.hpp"

using namespace turaev;

TEST(Catalog, BundledTableHasAllPrimeKnots) {
  const auto cat = ingest_catalog(support::data_path("data/knots_le9.tsv"));
  EXPECT_TRUE(cat.diagnostics.empty());
  EXPECT_GE(cat.entries.size(), 84U);
  std::set<std::string> names;
  for (const auto& e : cat.entries) names.insert(e.name);
  EXPECT_EQ(names.size(), cat.entries.size());
  const int per_crossing[] = {0, 0, 0, 1, 1, 2, 3, 7, 21, 49};
  for (int c = 3; c <= 9; ++c) {
    int count = 0;
    for (const auto& n : names)
      if (n.rfind(std::to_string(c) + "_", 0) == 0) ++count;
    EXPECT_EQ(count, per_crossing[c]) << c;
  }
}

TEST(Catalog, EmptyFileWarns) {
  std::istringstream in("# only a comment\n\n");
  const auto cat = parse_catalog(in);
  EXPECT_TRUE(cat.entries.empty());
  ASSERT_EQ(cat.diagnostics.size(), 1U);
  EXPECT_EQ(cat.diagnostics.front().severity, "warning");
}

TEST(Catalog, BadLinesBecomeDiagnostics) {
  std::istringstream in("good\tX(1,4,2,5)X(3,6,4,1)X(5,2,6,3)\tY\tY\nbad\tX(1,2,3)\nnotab\n");
  const auto cat = parse_catalog(in);
  ASSERT_EQ(cat.entries.size(), 1U);
  EXPECT_EQ(cat.entries.front().name, "good");
  EXPECT_EQ(cat.entries.front().alternating, std::optional<bool>(true));
  ASSERT_EQ(cat.diagnostics.size(), 2U);
  EXPECT_EQ(cat.diagnostics[0].line, 2);
  EXPECT_EQ(cat.diagnostics[1].line, 3);
}

TEST(Catalog, UnreadableFileThrows) { EXPECT_THROW(ingest_catalog("/nonexistent/catalog.tsv"), std::runtime_error); }

TEST(Run, EveryCheckPassesOnBundledData) {
  std::vector<CatalogEntry> entries;
  for (const auto& n : support::everything()) entries.push_back(n.entry);
  RunOptions opt;
  opt.jobs = 4;
  const auto rep = run_invariants(entries, opt);
  for (const auto& e : rep.entries)
    for (const auto& c : e.checks) EXPECT_NE(c.outcome, Outcome::fail) << e.name << " " << c.name << ": " << c.reason;
  EXPECT_TRUE(rep.all_passed());
  EXPECT_GT(rep.count(Outcome::pass), 0);
}

TEST(Run, ReportIsDeterministicAcrossJobs) {
  std::vector<CatalogEntry> entries;
  for (const auto& n : support::knots())
    if (n.diagram.crossing_count() <= 8) entries.push_back(n.entry);
  RunOptions one;
  one.khovanov = true;
  one.khovanov_cap = 7;
  RunOptions many = one;
  many.jobs = 6;
  const auto a = json::report(run_invariants(entries, one)).dump();
  const auto b = json::report(run_invariants(entries, many)).dump();
  const auto c = json::report(run_invariants(entries, one)).dump();
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
}

TEST(Run, UnparseableEntryIsRecorded) {
  const auto rep = run_invariants({CatalogEntry{"broken", "X(1,2,3,4)", std::nullopt, std::nullopt, 1}});
  ASSERT_EQ(rep.entries.size(), 1U);
  EXPECT_FALSE(rep.entries.front().parsed);
  EXPECT_FALSE(rep.all_passed());
}

TEST(Run, CapacityBecomesSkipped) {
  RunOptions opt;
  opt.state_cap = 4;
  const auto rep = run_invariants({CatalogEntry{"5_1", "X(1,6,2,7) X(3,8,4,9) X(5,10,6,1) X(7,2,8,3) X(9,4,10,5)", std::nullopt, std::nullopt, 1}}, opt);
  bool skipped = false;
  for (const auto& c : rep.entries.front().checks)
    if (c.name == "sweep-bruteforce") skipped = c.outcome == Outcome::skipped;
  EXPECT_TRUE(skipped);
}

TEST(Json, GenusAndDiagramShapes) {
  const auto d = support::trefoil();
  const auto j = json::diagram(d);
  EXPECT_EQ(j["schema"], "turaev.diagram/1");
  EXPECT_EQ(j["writhe"], 3);
  EXPECT_EQ(j["crossings"].size(), 3U);
  const auto b = json::betti(khovanov_homology(d));
  EXPECT_EQ(b["schema"], "turaev.betti/1");
  EXPECT_EQ(b["width"], 2);
  EXPECT_EQ(b["field"], "Q");
  const auto dec = json::decomposition(support::find("8_19"));
  EXPECT_EQ(dec["schema"], "turaev.decomposition/1");
  EXPECT_TRUE(dec["cycle"]["is_cycle"].get<bool>());
  EXPECT_TRUE(json::decomposition(d)["cycle"].is_null());
}
