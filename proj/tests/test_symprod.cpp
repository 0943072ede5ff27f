#include <gtest/gtest.h>

#include "mgn/symprod.hpp"

using mgn::Rational;
using namespace mgn::symprod;

TEST(EvalMonomial, Examples) {
  EXPECT_EQ(eval_monomial(12, 1, 0), Rational(239500800));
  EXPECT_EQ(eval_monomial(5, 1, 1), Rational(20));
  for (int g = 3; g <= 21; ++g)
    for (int m = 1; 2 * m < g; ++m) EXPECT_EQ(eval_monomial(g, m, g - 2 * m), Rational(1));
}

TEST(EvalMonomial, RangeErrors) {
  EXPECT_THROW(eval_monomial(12, 1, 11), mgn::input_error);
  EXPECT_THROW(eval_monomial(12, 1, -1), mgn::input_error);
  EXPECT_THROW(eval_monomial(12, 6, 0), mgn::input_error);
  EXPECT_THROW(eval_monomial(12, 0, 0), mgn::input_error);
}

TEST(EvalMonomial, ConsecutiveRatio) {
  for (int g = 3; g <= 21; ++g)
    for (int m = 1; 2 * m < g; ++m)
      for (int k = 0; k < g - 2 * m; ++k)
        EXPECT_EQ(eval_monomial(g, m, k) / eval_monomial(g, m, k + 1), Rational(2 * m + k + 1));
}

TEST(CdClass, Examples) {
  EXPECT_EQ(to_text(cd_class("F_restricted", 12, 1)), "10*theta - 12*x");
  EXPECT_EQ(to_text(cd_class("diagonal", 12, 1)), "-theta + 21*x");
  EXPECT_EQ(to_text(cd_class("secant_porteous", 5, 1)), "1/2*theta^2 - 2*theta*x + 3*x^2");
  EXPECT_EQ(cd_class("delta02_pull", 9, 2), diagonal(9, 2));
  EXPECT_EQ(to_text(cd_class("psi_tilde_pull", 12, 1)), "22*x");
}

TEST(CdClass, Errors) {
  EXPECT_THROW(cd_class("nope", 12, 1), mgn::input_error);
  EXPECT_THROW(cd_class("diagonal", 12, 6), mgn::input_error);
  EXPECT_THROW(cd_class("diagonal", 12, 0), mgn::input_error);
}

TEST(CdClass, NegativeUpperBinomials) {
  for (int g = 5; g <= 21; ++g)
    for (int m = 1; 2 * m < g; ++m) {
      auto p = secant_porteous(g, m);
      const int d = g - 2 * m;
      for (int j = 0; j <= d - 1; ++j) {
        Rational sign = j % 2 == 0 ? Rational(1) : Rational(-1);
        EXPECT_EQ(p.at(j), sign * mgn::binomial(m + j, j) / mgn::factorial(d - 1 - j));
      }
    }
}

TEST(CdClass, FRestrictedInFourthQuadrant) {
  for (int g = 3; g <= 21; ++g)
    for (int m = 1; 2 * m < g; ++m) {
      auto f = f_restricted(g, m);
      EXPECT_GT(f.at(0), Rational(0));
      EXPECT_LT(f.at(1), Rational(0));
    }
}

TEST(Extremal, SmallestInstanceByHand) {
  auto f = f_restricted(5, 1), v = secant_porteous(5, 1);
  EXPECT_EQ(to_text(f), "3*theta - 5*x");
  auto prod = f * v;
  EXPECT_EQ(prod.degree, 3);
  EXPECT_EQ(eval_monomial(5, 1, 0), Rational(60));
  EXPECT_EQ(eval_monomial(5, 1, 2), Rational(5));
  EXPECT_EQ(evaluate(prod), Rational(0));
  auto e = extremal_intersection(5, 1);
  EXPECT_EQ(e.pairing, Rational(0));
  EXPECT_EQ(e.closed_form, Rational(0));
}

TEST(Extremal, NineTwo) {
  auto e = extremal_intersection(9, 2);
  EXPECT_EQ(e.closed_form, Rational(360));
  EXPECT_EQ(e.pairing, Rational(360));
  EXPECT_FALSE(e.extension_used);
}

TEST(Extremal, PairingMatchesClosedFormOnGrid) {
  for (int g = 5; g <= 21; ++g)
    for (int m = 1; m <= 5 && 2 * m < g; ++m) {
      auto e = extremal_intersection(g, m);
      EXPECT_EQ(e.pairing, e.closed_form) << g << " " << m;
      EXPECT_EQ(e.extension_used, g - m - 2 < m);
    }
}

TEST(Extremal, PencilCaseVanishes) {
  for (int g = 5; g <= 40; ++g) EXPECT_EQ(extremal_intersection(g, 1).pairing, Rational(0)) << g;
}

TEST(Extremal, ExtensionFlagged) {
  auto e = extremal_intersection(9, 4);
  EXPECT_TRUE(e.extension_used);
  EXPECT_EQ(e.closed_form, Rational(0));
  EXPECT_EQ(e.pairing, e.closed_form);
}

TEST(Pullback, Examples) {
  auto p = pullback_consistency(12, 1);
  EXPECT_TRUE(p.equal);
  EXPECT_FALSE(p.numeric);
  EXPECT_EQ(to_text(p.descended), "10*theta - 12*x");
  EXPECT_TRUE(pullback_consistency(13, 2).equal);
  EXPECT_THROW(pullback_consistency(12, 0), mgn::input_error);
}

TEST(Pullback, FullGrid) {
  for (int g = 3; g <= 21; ++g)
    for (int m = 1; 2 * m < g; ++m) {
      auto p = pullback_consistency(g, m);
      EXPECT_TRUE(p.equal) << g << " " << m;
      EXPECT_EQ(p.numeric, g - 2 * m == 1);
    }
}

TEST(Poly, ProductRespectsDimension) {
  auto d = diagonal(7, 2);  // dimension 3
  auto sq = d * d;
  EXPECT_EQ(sq.degree, 2);
  EXPECT_NO_THROW(sq * d);
  EXPECT_THROW(sq * sq, mgn::input_error);
  EXPECT_THROW(d + sq, mgn::input_error);
  EXPECT_THROW(d + diagonal(9, 2), mgn::input_error);
  EXPECT_THROW(evaluate(d), mgn::input_error);
}

TEST(Poly, ZeroText) { EXPECT_EQ(to_text(diagonal(9, 2) * Rational(0)), "0"); }

TEST(Poly, JsonRoundTrip) {
  for (const auto& name : cd_class_names())
    for (int g = 5; g <= 13; ++g)
      for (int m = 1; 2 * m < g; ++m) {
        auto p = cd_class(name, g, m);
        auto j = to_json(p);
        EXPECT_EQ(poly_from_json(j), p);
        EXPECT_EQ(to_json(poly_from_json(j)).dump(), j.dump());
      }
  auto j = to_json(f_restricted(12, 1));
  EXPECT_EQ(j.dump(), R"({"g":12,"m":1,"degree":1,"terms":[{"x_pow":0,"coeff":"10"},{"x_pow":1,"coeff":"-12"}]})");
}
