#include <gtest/gtest.h>

#include "turaev/laurent.hpp"

using turaev::LaurentPoly;
using turaev::Variable;

TEST(Laurent, ZeroHasNoTermsAndThrowsOnDegree) {
  LaurentPoly z;
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.to_string(), "0");
  EXPECT_THROW(z.min_degree(), std::domain_error);
  EXPECT_EQ(LaurentPoly::constant(0), z);
}

TEST(Laurent, ArithmeticTrimsCancellation) {
  const auto a = LaurentPoly::from_terms({{-2, 1}, {3, 4}});
  const auto b = LaurentPoly::from_terms({{3, -4}});
  const auto s = a + b;
  EXPECT_EQ(s, LaurentPoly::monomial(1, -2));
  EXPECT_EQ(s.span(), 0);
  EXPECT_TRUE((a - a).is_zero());
}

TEST(Laurent, LoopValueSquared) {
  const auto d = turaev::loop_value();
  EXPECT_EQ(d * d, LaurentPoly::from_terms({{4, 1}, {0, 2}, {-4, 1}}));
  EXPECT_EQ(d.pow(0), LaurentPoly::constant(1));
  EXPECT_EQ(d.pow(3), d * d * d);
}

TEST(Laurent, ExactDivisionRoundTrips) {
  const auto d = turaev::loop_value();
  const auto p = LaurentPoly::from_terms({{5, -1}, {-3, -1}, {-7, 1}});
  EXPECT_EQ((p * d).divided_exact(d), p);
  EXPECT_THROW(p.divided_exact(d), std::domain_error);
}

TEST(Laurent, SubstitutionsAndVariables) {
  const auto p = LaurentPoly::from_terms({{2, 1}, {-6, 3}}, Variable::q);
  EXPECT_EQ(p.exponents_divided(2, Variable::t), LaurentPoly::from_terms({{1, 1}, {-3, 3}}, Variable::t));
  EXPECT_THROW(LaurentPoly::monomial(1, 3, Variable::q).exponents_divided(2, Variable::t), std::domain_error);
  EXPECT_EQ(p.substituted(-1, Variable::q), LaurentPoly::from_terms({{-2, 1}, {6, 3}}, Variable::q));
  EXPECT_EQ(LaurentPoly::from_terms({{1, 2}, {2, 5}}).negated_variable(), LaurentPoly::from_terms({{1, -2}, {2, 5}}));
  EXPECT_THROW((void)(LaurentPoly::monomial(1, 1, Variable::A) + LaurentPoly::monomial(1, 1, Variable::q)),
               std::invalid_argument);
}

TEST(Laurent, Rendering) {
  EXPECT_EQ(LaurentPoly::from_terms({{8, -1}, {6, 1}, {2, 1}}, Variable::q).to_string(), "-q^8 + q^6 + q^2");
  EXPECT_EQ(LaurentPoly::from_terms({{0, 3}, {-1, -2}}).to_string(), "3 - 2A^-1");
}
