#include <gtest/gtest.h>

#include <chrono>

#include "support.hpp"

using namespace turaev;

TEST(Bracket, SkeinOracleBruteforceAndSweepAgree) {
  for (const auto& n : support::everything()) {
    const auto& d = n.diagram;
    const auto brute = bracket_bruteforce(d);
    EXPECT_EQ(support::from_laurent(brute), support::skein_bracket(d)) << n.name;
    EXPECT_EQ(bracket_sweep(d), brute) << n.name;
  }
}

TEST(Bracket, TrefoilValue) {
  const auto b = kauffman_bracket(support::trefoil());
  EXPECT_EQ(b, LaurentPoly::from_terms({{-7, 1}, {-3, -1}, {5, -1}}));
  EXPECT_EQ(b.span(), 12);
}

TEST(Bracket, ParallelBruteforceIsDeterministic) {
  const auto& d = support::find("9_42");
  EXPECT_EQ(bracket_bruteforce(d, kDefaultStateCap, 4), bracket_bruteforce(d, kDefaultStateCap, 1));
}

TEST(Bracket, CapacityErrors) {
  const auto& d = support::find("9_1");
  try {
    bracket_bruteforce(d, 5);
    FAIL();
  } catch (const DiagramError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::capacity);
  }
  try {
    bracket_sweep(d, 1);
    FAIL();
  } catch (const DiagramError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::capacity);
  }
}

TEST(Jones, WritheFromLabelsMatchesOrientation) {
  for (const auto& n : support::knots()) EXPECT_EQ(n.diagram.writhe(), support::knot_writhe_from_labels(n.diagram)) << n.name;
}

TEST(Jones, OracleAndReferenceValues) {
  for (const auto& n : support::knots()) {
    const auto v = jones(n.diagram);
    EXPECT_EQ(support::from_laurent(v), support::oracle_jones_q(n.diagram, n.diagram.writhe())) << n.name;
    const auto& ref = support::reference().at(n.name).jones_t;
    const auto got = support::from_laurent(jones_in_t(v));
    const auto got_mirror = support::from_laurent(jones_in_t(v.substituted(-1, Variable::q)));
    EXPECT_TRUE(got == ref || got_mirror == ref) << n.name << ": " << jones_in_t(v).to_string();
  }
}

TEST(Jones, TrefoilInT) {
  const auto v = jones_in_t(jones(support::trefoil()));
  EXPECT_EQ(v, LaurentPoly::from_terms({{1, 1}, {3, 1}, {4, -1}}, Variable::t));
}

TEST(Jones, LinksAreHalfIntegralFree) {
  const auto v = jones(parse_pd("X(4,1,3,2) X(2,3,1,4)"));
  EXPECT_EQ(v.span(), 4);
  EXPECT_THROW(jones_in_t(v), std::domain_error);
}

TEST(Jones, MirrorInvertsVariable) {
  for (const auto& n : support::everything())
    EXPECT_EQ(jones(mirror(n.diagram)), jones(n.diagram).substituted(-1, Variable::q)) << n.name;
}

TEST(Jones, KinkedTrefoilMatchesTrefoil) {
  EXPECT_EQ(jones(support::find("3_1_kinked")), jones(support::find("3_1")));
}

TEST(Span, AlternatingBaselineAndInequality) {
  for (const auto& n : support::everything()) {
    const auto r = span_report(n.diagram);
    EXPECT_GE(r.slack, 0) << n.name;
    if (is_alternating(n.diagram)) {
      EXPECT_EQ(r.genus, 0) << n.name;
      EXPECT_EQ(r.span, r.crossings) << n.name;
    }
    if (r.adequate) {
      EXPECT_EQ(r.slack, 0) << n.name;
    }
  }
}

TEST(Span, TrefoilAndEightNineteen) {
  EXPECT_EQ(span_report(support::trefoil()).span, 3);
  const auto r = span_report(support::find("8_19"));
  EXPECT_EQ(r.span, 5);
  EXPECT_EQ(r.genus, 1);
  EXPECT_EQ(r.slack, 2);
  EXPECT_FALSE(r.adequate);
}

TEST(Sweep, LongTorusKnotIsFast) {
  std::string pd;
  const int n = 21;
  auto label = [&](int x) { return std::to_string((x - 1) % (2 * n) + 1); };
  for (int k = 0; k < n; ++k) {
    const int m = 2 * k + 2;
    pd += "X(" + label(m) + "," + label(m + n) + "," + label(m + 1) + "," + label(m + n + 1) + ")";
  }
  const auto d = parse_pd(pd);
  ASSERT_EQ(d.crossing_count(), 21);
  ASSERT_EQ(d.component_count(), 1);
  const auto start = std::chrono::steady_clock::now();
  const auto v = jones(d);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(secs, 1.0);
  EXPECT_EQ(v.span() / 2, 21);
  EXPECT_LE(sweep_order(d).second, kDefaultSweepWidth);
}

TEST(Sweep, RandomMutationsAgreeWithBruteforce) {
  std::mt19937_64 rng(3);
  for (int k = 0; k < 40; ++k) {
    const auto d = support::random_mutation(rng, 12);
    EXPECT_EQ(bracket_sweep(d), bracket_bruteforce(d)) << d.to_pd();
  }
}

TEST(Certificate, BoundsBracketGenus) {
  const auto& d = support::find("8_19");
  const auto g = turaev_genus_certificate(d, 3);
  EXPECT_EQ(g.upper, 1);
  EXPECT_EQ(g.lower, 1);
  const auto alt = turaev_genus_certificate(support::find("7_4"));
  EXPECT_EQ(alt.upper, 0);
  EXPECT_EQ(alt.lower, 0);
}
