#include <gtest/gtest.h>

#include "support.hpp"

using namespace turaev;

TEST(Moves, R1ChangesWritheByOne) {
  const auto d = support::trefoil();
  for (Move m : {Move::R1Plus, Move::R1Minus}) {
    const int want = m == Move::R1Plus ? 1 : -1;
    int applied = 0;
    for (const auto& site : move_sites(d, m)) {
      try {
        const auto k = reidemeister_variant(d, m, site);
        ++applied;
        EXPECT_EQ(k.crossing_count(), 4);
        EXPECT_EQ(k.writhe(), d.writhe() + want);
        EXPECT_FALSE(is_reduced(k));
        EXPECT_EQ(jones(k), jones(d));
      } catch (const DiagramError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::precondition);
      }
    }
    EXPECT_GE(applied, d.edge_count()) << move_name(m);
  }
}

TEST(Moves, R2KeepsWritheAndAddsTwoCrossings) {
  const auto& d = support::find("4_1");
  int applied = 0;
  for (const auto& site : move_sites(d, Move::R2)) {
    try {
      const auto k = reidemeister_variant(d, Move::R2, site);
      ++applied;
      EXPECT_EQ(k.crossing_count(), d.crossing_count() + 2);
      EXPECT_EQ(k.writhe(), d.writhe());
      EXPECT_EQ(jones(k), jones(d));
    } catch (const DiagramError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::precondition);
    }
  }
  EXPECT_GT(applied, 0);
}

TEST(Moves, R3PreservesCrossingsWritheAndJones) {
  int applied = 0;
  for (const auto& n : support::knots()) {
    const auto& d = n.diagram;
    for (const auto& site : move_sites(d, Move::R3)) {
      const auto k = reidemeister_variant(d, Move::R3, site);
      ++applied;
      EXPECT_EQ(k.crossing_count(), d.crossing_count()) << n.name;
      EXPECT_EQ(k.writhe(), d.writhe()) << n.name;
      EXPECT_EQ(jones(k), jones(d)) << n.name;
    }
  }
  EXPECT_GT(applied, 0);
}

TEST(Moves, R3AfterR2OnTrefoil) {
  const auto d = support::trefoil();
  int triangles = 0;
  for (const auto& s2 : move_sites(d, Move::R2)) {
    LinkDiagram k;
    try {
      k = reidemeister_variant(d, Move::R2, s2);
    } catch (const DiagramError&) {
      continue;
    }
    for (const auto& s3 : move_sites(k, Move::R3)) {
      ++triangles;
      EXPECT_EQ(jones(reidemeister_variant(k, Move::R3, s3)), jones(d));
    }
  }
  EXPECT_GT(triangles, 0);
}

TEST(Moves, InapplicableSitesThrowPrecondition) {
  const auto d = support::trefoil();
  auto kind_of = [&](Move m, MoveSite s) {
    try {
      reidemeister_variant(d, m, s);
    } catch (const DiagramError& e) {
      return e.kind();
    }
    return ErrorKind::syntax;
  };
  EXPECT_EQ(kind_of(Move::R1Plus, {Move::R1Plus, 100, -1, -1, 0}), ErrorKind::precondition);
  EXPECT_EQ(kind_of(Move::R1Plus, {Move::R1Plus, 0, -1, -1, 7}), ErrorKind::precondition);
  EXPECT_EQ(kind_of(Move::R2, {Move::R2, 0, 0, 0, 0}), ErrorKind::precondition);
  EXPECT_EQ(kind_of(Move::R3, {Move::R3, -1, -1, 999, 0}), ErrorKind::precondition);
  EXPECT_TRUE(move_sites(d, Move::R3).empty());
}

TEST(Moves, RandomMutationsStayValid) {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 40; ++k) {
    const auto d = support::random_mutation(rng, 14);
    EXPECT_LE(d.crossing_count(), 14);
    EXPECT_TRUE(validate_and_orient(d).report.ok());
    EXPECT_EQ(parse_pd(d.to_pd()), d);
  }
}
