#include "ztame/ncpoly.hpp"
#include "ztame/parse.hpp"

#include "support/generators.hpp"
#include "support/seed.hpp"

#include <gtest/gtest.h>

using namespace ztame;
using ztame::testing::Rng;

TEST(NCPolynomial, ProductIsNoncommutative) {
  EXPECT_EQ(mul(x(), y()), NCPolynomial::monomial(Word("xy")));
  EXPECT_EQ(mul(y(), x()), NCPolynomial::monomial(Word("yx")));
  EXPECT_NE(mul(x(), y()), mul(y(), x()));
}

TEST(NCPolynomial, AdditiveInverseAndAssociativity) {
  const NCPolynomial p = parse_nc("3*x*z - 2/5*y + 7");
  EXPECT_TRUE(add(p, scale(-1, p)).is_zero());
  EXPECT_EQ(mul(z(), mul(x(), z())), mul(mul(z(), x()), z()));
  EXPECT_EQ(mul(z(), mul(x(), z())), NCPolynomial::monomial(Word("zxz")));
}

TEST(NCPolynomial, ZeroCoefficientsArePruned) {
  NCPolynomial p = x() + y();
  p.add_term(Word("x"), -1);
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(p.coefficient(Word("x")), 0);
  EXPECT_THROW(Word("xa"), std::invalid_argument);
}

TEST(NCPolynomial, DegreeIn) {
  EXPECT_EQ(degree_in(z() * x() * z() + y(), Letter::X), 1u);
  EXPECT_EQ(degree_in(NCPolynomial(), Letter::Y), std::nullopt);
  // x + z(xz - zy) = x + zxz - zzy: two z's in both long words.
  EXPECT_EQ(degree_in(x() + z() * (x() * z() - z() * y()), Letter::Z), 2u);
}

TEST(NCPolynomial, LeadingBicomponentExamples) {
  EXPECT_EQ(leading_bicomponent(x() + z() * x() * z()), z() * x() * z());
  EXPECT_EQ(leading_bicomponent(x() + y() * y(), Weights{2, 1}), x() + y() * y());
  EXPECT_EQ(leading_bicomponent(x() + y() * y(), Weights{1, 1}), y() * y());
  EXPECT_THROW(leading_bicomponent(NCPolynomial()), ZeroPolynomialError);
  EXPECT_EQ(bidegree(x() + y() * y(), Weights{2, 1}), (BiDegree{2, 0}));
}

TEST(NCPolynomial, SubstituteExamples) {
  EXPECT_EQ(substitute(x() * y(), y(), x()), y() * x());
  const NCPolynomial img = x() + y() * y();
  EXPECT_EQ(substitute(x() + z() * x() * z(), img, y()), img + z() * img * z());
  const NCPolynomial p = parse_nc("x*y*z - 3*z^2*x + y + 1");
  EXPECT_EQ(substitute(p, x(), y()), p);
}

TEST(NCPolynomial, Predicates) {
  EXPECT_TRUE(depends_only_on_z(z() * z() * z() + 2));
  EXPECT_FALSE(depends_only_on_z(z() * y()));
  EXPECT_TRUE(is_linear_in_xy(z() * x() * z() + z() * z() * y() + z()));
  EXPECT_FALSE(is_linear_in_xy(x() * z() - z() * y() + x() * y()));
}

TEST(NCPolynomialProperty, RingLaws) {
  Rng rng(ztame::testing::seed());
  for (int i = 0; i < 60; ++i) {
    const NCPolynomial a = ztame::testing::random_nc(rng, 6, 8), b = ztame::testing::random_nc(rng, 6, 8),
                       c = ztame::testing::random_nc(rng, 6, 8);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a + b) * c, a * c + b * c);
    ASSERT_EQ(a * NCPolynomial(1), a);
    ASSERT_EQ(NCPolynomial(1) * a, a);
    ASSERT_EQ(a + b, b + a);
  }
}

TEST(NCPolynomialProperty, LeadingBicomponentIsTop) {
  Rng rng(ztame::testing::seed() + 1);
  const Weights ws[] = {{1, 1}, {2, 1}, {1, 3}};
  for (int i = 0; i < 100; ++i) {
    const NCPolynomial p = ztame::testing::random_nc(rng, 6, 8);
    if (p.is_zero()) continue;
    for (const Weights& w : ws) {
      const NCPolynomial lead = leading_bicomponent(p, w);
      ASSERT_TRUE(is_bihomogeneous(lead, w));
      const NCPolynomial rest = p - lead;
      if (!rest.is_zero()) ASSERT_LT(*bidegree(rest, w), *bidegree(p, w));
    }
  }
}

TEST(NCPolynomialProperty, SubstituteIsHomomorphism) {
  Rng rng(ztame::testing::seed() + 2);
  for (int i = 0; i < 60; ++i) {
    const NCPolynomial p = ztame::testing::random_nc(rng, 4, 5), q = ztame::testing::random_nc(rng, 4, 5);
    const NCPolynomial ix = ztame::testing::random_nc(rng, 2, 3), iy = ztame::testing::random_nc(rng, 2, 3);
    ASSERT_EQ(substitute(p * q, ix, iy), substitute(p, ix, iy) * substitute(q, ix, iy));
    ASSERT_EQ(substitute(p + q, ix, iy), substitute(p, ix, iy) + substitute(q, ix, iy));
  }
}

TEST(NCPolynomialProperty, BidegreeAdditiveOnWords) {
  Rng rng(ztame::testing::seed() + 3);
  for (int i = 0; i < 200; ++i) {
    const Word a = ztame::testing::random_word(rng, rng.uniform(0, 3), rng.uniform(0, 3), rng.uniform(0, 3));
    const Word b = ztame::testing::random_word(rng, rng.uniform(0, 3), rng.uniform(0, 3), rng.uniform(0, 3));
    const BiDegree ab = (a * b).bidegree(), da = a.bidegree(), db = b.bidegree();
    ASSERT_EQ(ab, (BiDegree{da.d + db.d, da.e + db.e}));
  }
}
