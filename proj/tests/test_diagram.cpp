#include <gtest/gtest.h>

#include "support.hpp"

using namespace turaev;

TEST(Parse, TrefoilNormalizesAndOrients) {
  const auto d = support::trefoil();
  EXPECT_EQ(d.crossing_count(), 3);
  EXPECT_EQ(d.component_count(), 1);
  EXPECT_EQ(d.writhe(), 3);
  EXPECT_EQ(d.to_pd(), "X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)");
  for (int e = 0; e < d.edge_count(); ++e) {
    EXPECT_TRUE(d.is_entry(d.head(e)));
    EXPECT_FALSE(d.is_entry(d.tail(e)));
  }
}

TEST(Parse, AcceptsBracketsAndWrapper) {
  EXPECT_EQ(parse_pd("PD[X[1,4,2,5], X[3,6,4,1], X[5,2,6,3]]"), support::trefoil());
}

TEST(Parse, RelabelsArbitraryLabels) {
  const auto d = parse_pd("X(10,40,20,50) X(30,60,40,10) X(50,20,60,30)");
  EXPECT_EQ(d, support::trefoil());
  EXPECT_EQ(d.original_labels().front(), 10);
}

TEST(Parse, SyntaxErrors) {
  for (const char* bad : {"X(1,2,3)", "Y(1,2,3,4)", "X(1,2,3,4", "PD[X[1,2,2,1]", "X(a,b,c,d)"}) {
    try {
      parse_pd(bad);
      ADD_FAILURE() << bad;
    } catch (const DiagramError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::syntax) << bad;
    }
  }
}

TEST(Parse, StructuralErrorsCarryCodes) {
  auto code_of = [](const char* text) {
    try {
      parse_pd(text);
    } catch (const DiagramError& e) {
      EXPECT_EQ(e.kind(), ErrorKind::structural);
      return e.report().diagnostics.empty() ? std::string() : e.report().diagnostics.front().code;
    }
    return std::string("accepted");
  };
  EXPECT_EQ(code_of(""), "empty-diagram");
  EXPECT_EQ(code_of("X(1,2,3,4)"), "label-count");
  EXPECT_EQ(code_of("X(0,1,1,0)"), "label-not-positive");
  EXPECT_EQ(code_of("X(1,2,2,1) X(3,4,4,3)"), "split-diagram");
  EXPECT_EQ(code_of("X(1,1,2,2) X(3,3,4,4)"), "split-diagram");
  EXPECT_EQ(code_of("X(1,2,1,2)"), "not-spherical");
}

TEST(Parse, OrientationConflictDetected) {
  // under-strands of both crossings enter along label 1
  const auto r = validate_pd({PDCrossing{{1, 2, 3, 4}}, PDCrossing{{1, 4, 3, 2}}});
  EXPECT_FALSE(r.ok());
  EXPECT_TRUE(r.has("orientation-conflict"));
}

TEST(Validate, NugatoryWarning) {
  const auto d = parse_pd("X(1,2,2,1)");
  const auto s = validate_and_orient(d);
  EXPECT_TRUE(s.report.ok());
  EXPECT_TRUE(s.report.has("nugatory-crossing"));
  EXPECT_EQ(s.components, 1);
  EXPECT_EQ(s.writhe, 1);
  EXPECT_EQ(parse_pd("X(1,1,2,2)").writhe(), -1);
}

TEST(Faces, SphericityOnEveryBundledDiagram) {
  for (const auto& n : support::everything()) {
    const auto& d = n.diagram;
    const auto faces = planar_faces(d);
    EXPECT_EQ(d.crossing_count() - d.edge_count() + static_cast<int>(faces.size()), 2) << n.name;
    std::vector<int> count(static_cast<std::size_t>(d.dart_count()), 0);
    for (const auto& f : faces)
      for (int h : f) ++count[h];
    for (int c : count) EXPECT_EQ(c, 1) << n.name;
  }
}

TEST(Faces, TraversalClosure) {
  for (const auto& n : support::everything()) {
    const auto& d = n.diagram;
    int total = 0;
    for (const auto& comp : d.components()) {
      total += static_cast<int>(comp.size());
      for (std::size_t k = 0; k < comp.size(); ++k) {
        const int e = comp[k], next = comp[(k + 1) % comp.size()];
        EXPECT_EQ(d.tail(next), through(d.head(e))) << n.name;
      }
    }
    EXPECT_EQ(total, d.edge_count()) << n.name;
  }
}

TEST(Alternating, MatchesCatalogFlags) {
  for (const auto& n : support::everything())
    EXPECT_EQ(is_alternating(n.diagram), n.entry.alternating.value()) << n.name;
}

TEST(Alternating, KinkIsNotReducedAlternating) {
  const auto d = parse_pd("X(1,2,2,1)");
  EXPECT_TRUE(all_edges_alternate(d));
  EXPECT_FALSE(is_reduced(d));
  EXPECT_FALSE(is_alternating(d));
}

TEST(Mirror, InvolutionAndWrithe) {
  for (const auto& n : support::everything()) {
    const auto m = mirror(n.diagram);
    EXPECT_EQ(m.writhe(), -n.diagram.writhe()) << n.name;
    EXPECT_EQ(m.crossing_count(), n.diagram.crossing_count()) << n.name;
    const auto back = mirror(m);
    EXPECT_EQ(back.writhe(), n.diagram.writhe()) << n.name;
    EXPECT_EQ(extreme_circle_counts(back).s_a, extreme_circle_counts(n.diagram).s_a) << n.name;
    EXPECT_EQ(extreme_circle_counts(m).s_a, extreme_circle_counts(n.diagram).s_b) << n.name;
  }
}

TEST(ConnectedSum, CrossingsAddAndResultValidates) {
  const auto& a = support::find("3_1");
  const auto& b = support::find("4_1");
  for (int e1 = 0; e1 < a.edge_count(); ++e1)
    for (int e2 = 0; e2 < b.edge_count(); ++e2) {
      const auto s = connected_sum(a, e1, b, e2);
      EXPECT_EQ(s.crossing_count(), 7);
      EXPECT_EQ(s.component_count(), 1);
      EXPECT_EQ(s.writhe(), a.writhe() + b.writhe());
      EXPECT_TRUE(validate_and_orient(s).report.ok());
    }
  EXPECT_THROW(connected_sum(a, 99, b, 0), DiagramError);
}

TEST(CrossingChange, SwapsSignOnly) {
  const auto d = support::trefoil();
  const auto c = crossing_change(d, 1);
  EXPECT_EQ(c.writhe(), 1);
  EXPECT_EQ(crossing_change(c, 1), d);
}
