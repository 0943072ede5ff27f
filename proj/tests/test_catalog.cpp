#include <gtest/gtest.h>

#include <random>

#include "mgn/catalog.hpp"
#include "random_classes.hpp"

using mgn::DivisorClass;
using mgn::Rational;

TEST(CanonicalClass, TwelveElevenCoefficients) {
  auto k = mgn::canonical_class(12, 11);
  EXPECT_EQ(k.lambda(), Rational(13));
  EXPECT_EQ(k.psi(), Rational(1));
  EXPECT_EQ(k.delta_irr(), Rational(-2));
  EXPECT_EQ(k.boundary(0, 2), Rational(-2));
  EXPECT_EQ(k.boundary(1, 0), Rational(-3));
  EXPECT_EQ(k.boundary(5, 7), Rational(-2));
}

TEST(CanonicalClass, NoPointsSpecialization) {
  auto k = mgn::canonical_class(3, 0);
  EXPECT_EQ(k.lambda(), Rational(13));
  EXPECT_EQ(k.psi(), Rational(0));
  EXPECT_EQ(k.delta_irr(), Rational(-2));
  EXPECT_EQ(k.boundary(1, 0), Rational(-3));
  EXPECT_EQ(k.boundary().size(), 1u);
}

TEST(SymquotCanonical, DiffersOnlyOnDelta02) {
  for (int g = 4; g <= 21; ++g) {
    auto diff = mgn::canonical_class(g, g - 1) - mgn::symquot_canonical_pullback(g, g - 1);
    DivisorClass expect(g, g - 1);
    expect.set_boundary(0, 2, 1);
    EXPECT_EQ(diff, expect) << g;
  }
  auto k = mgn::symquot_canonical_pullback(12, 11);
  EXPECT_EQ(k.boundary(0, 2), Rational(-3));
  EXPECT_EQ(k.boundary(0, 3), Rational(-2));
  EXPECT_EQ(k.lambda(), Rational(13));
  EXPECT_EQ(k.psi(), Rational(1));
  EXPECT_EQ(k.delta_irr(), Rational(-2));
  EXPECT_THROW(mgn::symquot_canonical_pullback(12, 1), mgn::input_error);
}

TEST(Antram, GenusTwelveCoefficients) {
  auto a = mgn::antram(12);
  EXPECT_EQ(a.points(), 11);
  EXPECT_EQ(a.lambda(), Rational(-20));
  EXPECT_EQ(a.psi(), Rational(40));
  EXPECT_EQ(a.delta_irr(), Rational(-2));
  EXPECT_EQ(a.boundary(0, 2), Rational(-122));
  EXPECT_EQ(a.boundary(1, 0), Rational(-44));
  EXPECT_EQ(a.boundary(2, 1), Rational(0));
  EXPECT_EQ(a.boundary().count({2, 1}), 0u);
}

TEST(Antram, RelationWithIrreducibleCoefficient) {
  for (int g = 4; g <= 21; ++g) {
    auto a = mgn::antram(g);
    EXPECT_EQ(a.boundary(1, 0), Rational(2 * g - 2) * a.delta_irr()) << g;
  }
}

TEST(Antram, PartnerIndicesAgree) {
  for (int g = 4; g <= 15; ++g) {
    auto a = mgn::antram(g);
    for (int i = 0; i <= g; ++i)
      for (int s = 0; s <= g - 1; ++s) EXPECT_EQ(a.boundary(i, s), a.boundary(g - i, g - 1 - s));
  }
}

TEST(Antram, PolynomialOverlapWithDelta02) {
  for (int g = 5; g <= 40; ++g) EXPECT_EQ(mgn::antram_boundary_polynomial(g, g, g - 3), Rational(12 * g - 22)) << g;
}

TEST(Antram, PolynomialRangeGuard) {
  EXPECT_THROW(mgn::antram_boundary_polynomial(12, 2, 2), mgn::input_error);
  EXPECT_THROW(mgn::antram(3), mgn::input_error);
}

TEST(FClass, GenusTwelvePencil) {
  auto f = mgn::f_class(12, 1);
  EXPECT_TRUE(f.is_partial());
  EXPECT_EQ(f.points(), 10);
  EXPECT_EQ(f.lambda(), Rational(0));
  EXPECT_EQ(f.psi(), Rational(9));
  EXPECT_EQ(f.delta_irr(), Rational(-1));
  EXPECT_EQ(f.boundary(0, 2), Rational(-28));
  EXPECT_EQ(mgn::f_class(13, 1).lambda(), Rational(-1));
}

TEST(FClass, MEqualsOneSpecialization) {
  for (int g = 5; g <= 21; ++g) {
    auto f = mgn::f_class(g, 1);
    EXPECT_EQ(f.lambda(), Rational(-(g - 12))) << g;
    EXPECT_EQ(f.psi(), Rational(g - 3)) << g;
    EXPECT_EQ(f.delta_irr(), Rational(-1)) << g;
    for (int s = 2; s <= g - 2; ++s)
      EXPECT_EQ(f.boundary(0, s), -Rational(s * (g - 4 + s * g - 2 * s), 2)) << g << " " << s;
  }
}

TEST(FClass, OnlyRationalTailsPopulated) {
  for (int g = 5; g <= 21; ++g)
    for (int m = 1; 2 * m <= g - 1; ++m) {
      const auto f = mgn::f_class(g, m);
      for (const auto& [b, v] : f.boundary()) EXPECT_EQ(b.i, 0);
    }
}

TEST(FClass, RangeErrors) {
  EXPECT_THROW(mgn::f_class(12, 0), mgn::input_error);
  EXPECT_THROW(mgn::f_class(12, 6), mgn::input_error);
}

TEST(NamedClass, NgnMinusPsiTilde) {
  for (int g = 3; g <= 10; ++g)
    for (int n = 1; n <= 9; ++n) {
      auto diff = mgn::named_class("ngn_pullback", g, n) - mgn::named_class("psi_tilde_pullback", g, n);
      DivisorClass expect(g, n);
      for (int s = 2; s <= n; ++s) expect.add_boundary(0, s, s);
      EXPECT_EQ(diff, expect);
    }
}

TEST(NamedClass, KappaOne) {
  auto k = mgn::named_class("kappa1_pullback", 12, 11);
  EXPECT_EQ(k.lambda(), Rational(12));
  EXPECT_EQ(k.psi(), Rational(1));
  EXPECT_EQ(k.delta_irr(), Rational(-1));
  EXPECT_EQ(k.boundary(3, 4), Rational(-1));
}

TEST(NamedClass, BrillNoetherProfile) {
  auto b = mgn::named_class("bn_divisor_pullback", 13, 0);
  EXPECT_EQ(b.lambda(), Rational(16));
  EXPECT_EQ(b.delta_irr(), Rational(-7, 3));
  EXPECT_EQ(b.boundary(1, 0), Rational(-12));
  EXPECT_EQ(b.lambda() / -b.delta_irr(), Rational(6) + Rational(12, 14));
}

TEST(NamedClass, WeierstrassPattern) {
  for (int g = 3; g <= 12; ++g)
    for (int n = 1; n <= 8; ++n) {
      auto w = mgn::named_class("weierstrass_pullback", g, n);
      const Rational top = mgn::binomial(g + 1, 2);
      EXPECT_EQ(w.lambda(), Rational(-n));
      EXPECT_EQ(w.psi(), top);
      for (int s = 2; s <= n; ++s) EXPECT_EQ(w.boundary(0, s), -top * Rational(s));
    }
}

TEST(NamedClass, Errors) {
  EXPECT_THROW(mgn::named_class("nope", 5, 2), mgn::input_error);
  EXPECT_THROW(mgn::named_class("ngn_pullback", 5, 0), mgn::input_error);
}

TEST(NecessaryCondition, AntramAndPencilClasses) {
  for (int g = 5; g <= 21; ++g) {
    auto s = mgn::summarize(mgn::antram(g));
    EXPECT_LT(Rational(3) * s.c, s.b02) << g;
    // n = g - 2m >= 2, so that delta_{0:2} exists
    for (int m = 1; 2 * m <= g - 2; ++m) {
      auto f = mgn::summarize(mgn::f_class(g, m));
      EXPECT_LT(Rational(3) * f.c, f.b02) << g << " " << m;
    }
  }
}

TEST(Summary, Antram12) {
  EXPECT_EQ(mgn::summarize(mgn::antram(12)), (mgn::ClassSummary{-20, 40, 2, 122}));
}

TEST(EClass, GoldenFourteenEleven) {
  auto e = mgn::e_class_odd(14, 11);
  EXPECT_EQ(e.completeness(), mgn::Completeness::partial_rule_derived);
  auto s = mgn::summarize(e);
  EXPECT_EQ(s.a, Rational(-11, 6));
  EXPECT_EQ(s.c, Rational(12));
  EXPECT_EQ(s.b_irr, Rational(11, 12));
  EXPECT_EQ(s.b02, Rational(37));
}

TEST(EClass, LinearInInputAndZeroOnZero) {
  EXPECT_TRUE(mgn::boundary_restriction_pushforward(DivisorClass(9, 5)).is_zero());
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    DivisorClass x(9, 5), y(9, 5);
    for (auto* d : {&x, &y}) {
      d->set_lambda(testing_support::random_rational(rng)).set_psi(testing_support::random_rational(rng));
      d->set_delta_irr(testing_support::random_rational(rng));
      for (int s = 2; s <= 5; ++s) d->set_boundary(0, s, testing_support::random_rational(rng));
    }
    Rational k = testing_support::random_rational(rng);
    EXPECT_EQ(mgn::boundary_restriction_pushforward(x + y * k),
              mgn::boundary_restriction_pushforward(x) + mgn::boundary_restriction_pushforward(y) * k);
  }
}

TEST(EClass, UnresolvableTermAborts) {
  DivisorClass d(9, 5);
  d.set_boundary(2, 1, 1);
  EXPECT_THROW(mgn::boundary_restriction_pushforward(d), mgn::rule_error);
}

TEST(EClass, ParityMismatch) {
  EXPECT_THROW(mgn::e_class_odd(14, 10), mgn::input_error);
  EXPECT_THROW(mgn::e_class_odd(14, 13), mgn::input_error);
}

TEST(CatalogLookup, StableNames) {
  for (const auto& name : mgn::catalog_names()) {
    std::optional<int> n = 11, m;
    if (name == "F" || name == "E_odd") n = name == "F" ? 10 : 9;
    EXPECT_NO_THROW(mgn::catalog_class(name, 12, n, m)) << name;
  }
  EXPECT_THROW(mgn::catalog_class("K", 12, std::nullopt, std::nullopt), mgn::input_error);
  EXPECT_THROW(mgn::catalog_class("antram", 12, 5, std::nullopt), mgn::input_error);
  EXPECT_THROW(mgn::catalog_class("F", 12, 9, std::nullopt), mgn::input_error);
  EXPECT_EQ(mgn::catalog_class("F", 12, std::nullopt, 1), mgn::f_class(12, 1));
}
