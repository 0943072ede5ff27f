#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "mgn/catalog.hpp"
#include "mgn/divisor.hpp"
#include "random_classes.hpp"

using mgn::BoundaryIndex;
using mgn::DivisorClass;
using mgn::Rational;
using testing_support::random_class;
using testing_support::random_curve;
using testing_support::random_rational;

TEST(Canonicalize, IdentifiesComplementaryIndex) {
  auto b = mgn::canonicalize_index(12, 11, 12, 9);
  ASSERT_TRUE(b);
  EXPECT_EQ(*b, (BoundaryIndex{0, 2}));
}

TEST(Canonicalize, RationalTailWithOnePointIsZero) {
  EXPECT_FALSE(mgn::canonicalize_index(12, 11, 0, 1));
  EXPECT_FALSE(mgn::canonicalize_index(12, 11, 0, 0));
  EXPECT_FALSE(mgn::canonicalize_index(12, 11, 12, 10));
}

TEST(Canonicalize, OutOfRangeIndicesAreZero) {
  EXPECT_FALSE(mgn::canonicalize_index(5, 4, 6, 0));
  EXPECT_FALSE(mgn::canonicalize_index(5, 4, 2, 5));
}

TEST(Canonicalize, AlreadyCanonicalIsFixed) {
  auto b = mgn::canonicalize_index(5, 4, 2, 1);
  ASSERT_TRUE(b);
  EXPECT_EQ(*b, (BoundaryIndex{2, 1}));
}

TEST(Canonicalize, NegativeIndexRejected) {
  EXPECT_THROW(mgn::canonicalize_index(5, 4, -1, 0), mgn::input_error);
  EXPECT_THROW(mgn::canonicalize_index(5, 4, 1, -2), mgn::input_error);
}

TEST(Canonicalize, InvolutionCompatibleAndIdempotent) {
  for (int g = 3; g <= 12; ++g)
    for (int n = 0; n <= 11; ++n)
      for (int i = 0; i <= g; ++i)
        for (int s = 0; s <= n; ++s) {
          auto a = mgn::canonicalize_index(g, n, i, s);
          auto b = mgn::canonicalize_index(g, n, g - i, n - s);
          ASSERT_EQ(a, b) << g << " " << n << " " << i << " " << s;
          if (a) {
            EXPECT_EQ(mgn::canonicalize_index(g, n, a->i, a->s), a);
          }
        }
}

TEST(Canonicalize, IndexListHasNoDuplicatesOrZeros) {
  auto idx = mgn::boundary_indices(12, 11);
  EXPECT_TRUE(std::is_sorted(idx.begin(), idx.end()));
  for (const auto& b : idx) EXPECT_EQ(mgn::canonicalize_index(12, 11, b.i, b.s), b);
  EXPECT_EQ(std::adjacent_find(idx.begin(), idx.end()), idx.end());
}

TEST(DivisorClass, ZeroIndexAbsorbsCoefficient) {
  DivisorClass d(5, 4);
  d.add_boundary(0, 1, 7).add_boundary(6, 0, 3);
  EXPECT_TRUE(d.is_zero());
}

TEST(DivisorClass, ExplicitZeroValuesAreDropped) {
  DivisorClass d(5, 4);
  d.add_boundary(2, 1, 3).add_boundary(3, 3, -3);  // (3,3) ~ (2,1)
  EXPECT_TRUE(d.boundary().empty());
}

TEST(DivisorClass, EqualityIndependentOfTermOrder) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    DivisorClass a = random_class(rng, 8, 6);
    std::vector<std::pair<BoundaryIndex, Rational>> terms(a.boundary().begin(), a.boundary().end());
    std::shuffle(terms.begin(), terms.end(), rng);
    DivisorClass b(8, 6);
    b.set_lambda(a.lambda()).set_psi(a.psi()).set_delta_irr(a.delta_irr());
    for (const auto& [k, v] : terms) b.add_boundary(8 - k.i, 6 - k.s, v);  // via the partner index
    EXPECT_EQ(a, b);
    EXPECT_EQ(mgn::serialize(a), mgn::serialize(b));
  }
}

TEST(DivisorClass, DifferentSpacesRejected) {
  DivisorClass a(5, 4), b(5, 3);
  EXPECT_THROW(a += b, mgn::input_error);
  EXPECT_THROW(DivisorClass(2, 0), mgn::input_error);
}

TEST(Pair, MovingPointAgainstAntramInterior) {
  const int g = 12;
  DivisorClass d(g, g - 1);
  d.set_psi(4 * g - 8).set_boundary(0, 2, -(12 * g - 22));
  EXPECT_EQ(mgn::pair(mgn::curves::moving_point(g, g - 1), d), Rational(460));
  EXPECT_EQ(Rational((4 * g - 2) * (g - 2)), Rational(460));
}

TEST(Pair, ZeroClassPairsToZero) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) EXPECT_EQ(mgn::pair(random_curve(rng, 7, 5), DivisorClass(7, 5)), Rational(0));
}

TEST(Pair, EllipticPencilMissesAntram) {
  EXPECT_EQ(mgn::pair(mgn::curves::elliptic_pencil(12, 11), mgn::antram(12)), Rational(0));
}

TEST(Pair, MismatchedSpaceRejected) {
  EXPECT_THROW(mgn::pair(mgn::curves::moving_point(12, 10), mgn::antram(12)), mgn::input_error);
}

TEST(Pair, Bilinear) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const int g = 3 + static_cast<int>(rng() % 8), n = static_cast<int>(rng() % 7);
    auto c = random_curve(rng, g, n);
    auto x = random_class(rng, g, n), y = random_class(rng, g, n);
    Rational a = random_rational(rng), b = random_rational(rng);
    EXPECT_EQ(mgn::pair(c, x * a + y * b), a * mgn::pair(c, x) + b * mgn::pair(c, y));
  }
}

TEST(TestCurves, RationalTailRange) {
  EXPECT_THROW(mgn::curves::rational_tail(8, 5, 2), mgn::input_error);
  EXPECT_THROW(mgn::curves::rational_tail(8, 5, 6), mgn::input_error);
  auto c = mgn::curves::rational_tail(8, 5, 3);
  EXPECT_EQ(c.psi_total, Rational(3));
  EXPECT_EQ(c.boundary.at({0, 3}), Rational(-1));
  EXPECT_EQ(c.boundary.at({0, 2}), Rational(3));
}

TEST(ForgetfulPullback, WeierstrassPattern) {
  auto d = mgn::symmetrized_forgetful_pullback(5, 3, mgn::weierstrass_pointed(5));
  EXPECT_EQ(d.lambda(), Rational(-3));
  EXPECT_EQ(d.psi(), Rational(15));
  EXPECT_EQ(d.boundary(0, 2), Rational(-30));
  EXPECT_EQ(d.boundary(0, 3), Rational(-45));
}

TEST(ForgetfulPullback, ZeroPointedClass) {
  EXPECT_TRUE(mgn::symmetrized_forgetful_pullback(6, 4, mgn::PointedClass{}).is_zero());
}

TEST(ForgetfulPullback, PsiPattern) {
  mgn::PointedClass p;
  p.psi = 1;
  auto d = mgn::symmetrized_forgetful_pullback(4, 2, p);
  EXPECT_EQ(d.psi(), Rational(1));
  EXPECT_EQ(d.boundary(0, 2), Rational(-2));
  EXPECT_EQ(d.boundary().size(), 1u);
}

TEST(Serialization, SchemaAndSortedBoundary) {
  auto j = mgn::to_json(mgn::canonical_class(5, 2));
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"g", "n", "lambda", "psi", "delta_irr", "boundary"}));
  EXPECT_EQ(j["lambda"], "13");
  const auto& b = j["boundary"];
  for (std::size_t k = 1; k < b.size(); ++k)
    EXPECT_LT(std::make_pair(b[k - 1]["i"].get<int>(), b[k - 1]["s"].get<int>()),
              std::make_pair(b[k]["i"].get<int>(), b[k]["s"].get<int>()));
}

TEST(Serialization, PartialFlagSurvives) {
  auto f = mgn::f_class(12, 1);
  auto j = mgn::to_json(f);
  EXPECT_EQ(j["completeness"], "partial");
  auto back = mgn::divisor_from_json(j);
  EXPECT_TRUE(back.is_partial());
  EXPECT_EQ(back, f);
}

TEST(Serialization, RoundTripRandomClasses) {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 300; ++t) {
    const int g = 3 + static_cast<int>(rng() % 10), n = static_cast<int>(rng() % 9);
    auto d = random_class(rng, g, n);
    auto text = mgn::serialize(d);
    auto back = mgn::deserialize(text);
    EXPECT_EQ(back, d);
    EXPECT_EQ(mgn::serialize(back), text);
  }
}

TEST(Serialization, MalformedInputRejected) {
  EXPECT_ANY_THROW(mgn::deserialize("{\"g\":5}"));
  EXPECT_THROW(mgn::deserialize(R"({"g":5,"n":2,"lambda":"1.5","psi":"0","delta_irr":"0","boundary":[]})"),
               mgn::input_error);
  EXPECT_THROW(
      mgn::deserialize(R"({"g":5,"n":2,"lambda":"1","psi":"0","delta_irr":"0","boundary":[],"completeness":"x"})"),
      mgn::input_error);
}

TEST(Coordinates, UnitClassesFormABasis) {
  auto coords = mgn::coordinates(6, 3);
  for (const auto& a : coords)
    for (const auto& b : coords)
      EXPECT_EQ(mgn::coordinate_value(mgn::unit_class(6, 3, a), b), Rational(a == b ? 1 : 0));
}
