#include "ztame/errors.hpp"
#include "ztame/parse.hpp"
#include "ztame/recognize.hpp"

#include "support/generators.hpp"
#include "support/seed.hpp"

#include <gtest/gtest.h>

using namespace ztame;
using ztame::testing::Rng;

namespace {
const NCPolynomial kComm = x() * z() - z() * y();

std::vector<NCPolynomial> wild_hs() {
  const NCPolynomial t = x();
  return {t, t * t, t * z() + z() * t, t * t * z()};
}

NCPolynomial h_of_comm(const NCPolynomial& h) { return substitute(h, kComm, y()); }
}  // namespace

TEST(RecognizeAutomorphism, Examples) {
  const Decision d = recognize_automorphism({parse_nc("x + y^2"), y()});
  ASSERT_EQ(d.verdict, Verdict::TameAutomorphism);
  EXPECT_EQ(apply_word(d.certificate), (ZEndomorphism{parse_nc("x + y^2"), y()}));

  EXPECT_EQ(recognize_automorphism({parse_nc("z^2"), y()}).verdict, Verdict::NotAutomorphism);
  EXPECT_EQ(recognize_automorphism({parse_nc("x + y"), parse_nc("2*x + 2*y + z")}).verdict, Verdict::NotAutomorphism);
  EXPECT_EQ(recognize_automorphism({parse_nc("x + z*(x*z - z*y)"), parse_nc("y + (x*z - z*y)*z")}).verdict,
            Verdict::NotZTame);
}

TEST(RecognizeAutomorphism, LinearCase) {
  const ZEndomorphism e{parse_nc("2*x - y + z^2 + 1"), parse_nc("x + 3*y - z")};
  const Decision d = recognize_automorphism(e);
  ASSERT_EQ(d.verdict, Verdict::TameAutomorphism);
  EXPECT_EQ(apply_word(d.certificate), e);
}

TEST(RecognizeAutomorphism, TieTriesBothSteps) {
  // Equal leading bidegrees where only the second step applies.
  const ZEndomorphism e{parse_nc("x + y^2"), parse_nc("y + 2*(x + y^2)")};
  const Decision d = recognize_automorphism(e);
  ASSERT_EQ(d.verdict, Verdict::TameAutomorphism);
  EXPECT_EQ(apply_word(d.certificate), e);
}

TEST(RecognizeAutomorphism, SigmaFamilyIsNotZTame) {
  for (const NCPolynomial& h : wild_hs()) {
    const ZEndomorphism s = sigma_h(h);
    EXPECT_EQ(recognize_automorphism(s).verdict, Verdict::NotZTame) << print_nc(h);
    EXPECT_EQ(compose(s, sigma_h(-h)), ZEndomorphism::identity());
  }
}

TEST(RecognizeCoordinate, Examples) {
  const Decision a = recognize_coordinate(parse_nc("x + y^2 + z"));
  ASSERT_EQ(a.verdict, Verdict::TameCoordinate);
  EXPECT_EQ(apply_word(a.certificate).f, parse_nc("x + y^2 + z"));
  EXPECT_EQ(recognize_coordinate(parse_nc("x + z*(x*z - z*y)")).verdict, Verdict::NotZTameCoordinate);
  EXPECT_EQ(recognize_coordinate(parse_nc("x + (x*z - z*y)^2")).verdict, Verdict::NotZTameCoordinate);
  EXPECT_EQ(recognize_coordinate(parse_nc("z^3 + 1")).verdict, Verdict::NotZTameCoordinate);
  EXPECT_THROW(recognize_coordinate(NCPolynomial()), ZeroPolynomialError);
}

TEST(RecognizeCoordinate, BaseCases) {
  for (const char* s : {"x + y^2*z + z^3", "-2*x + y*z*y", "3*y + z^2", "x - y + 4"}) {
    const NCPolynomial f = parse_nc(s);
    const Decision d = recognize_coordinate(f);
    ASSERT_EQ(d.verdict, Verdict::TameCoordinate) << s;
    EXPECT_EQ(apply_word(d.certificate).f, f) << s;
  }
}

TEST(RecognizeCoordinate, NeedsScaleOfOmega) {
  // q = 2*z*y*y: recovering omega loses the factor 2.
  const NCPolynomial q = parse_nc("2*z*y^2");
  const NCPolynomial f = substitute(parse_nc("x + y^3"), y(), x() + q);  // first coordinate of (x + q, y) then swap
  const Decision d = recognize_coordinate(f);
  ASSERT_EQ(d.verdict, Verdict::TameCoordinate);
  EXPECT_EQ(apply_word(d.certificate).f, f);
}

TEST(RecognizeCoordinate, SigmaFamilyIsRejected) {
  for (const NCPolynomial& h : wild_hs()) {
    EXPECT_EQ(recognize_coordinate(x() + z() * h_of_comm(h)).verdict, Verdict::NotZTameCoordinate) << print_nc(h);
    EXPECT_EQ(recognize_coordinate(x() + h_of_comm(h)).verdict, Verdict::NotZTameCoordinate) << print_nc(h);
  }
}

TEST(MixedMonomialFilter, Examples) {
  EXPECT_EQ(mixed_monomial_filter({parse_nc("x + x*y - y*x"), y()}), FilterResult::NotAutomorphism);
  EXPECT_EQ(mixed_monomial_filter({parse_nc("x + y^2"), y()}), FilterResult::Inconclusive);
  EXPECT_EQ(mixed_monomial_filter({parse_nc("x + x*z*y"), parse_nc("y + 3*y*x*y")}), FilterResult::NotAutomorphism);
  EXPECT_EQ(mixed_monomial_filter(ZEndomorphism::identity()), FilterResult::Inconclusive);
}

TEST(SigmaH, Examples) {
  EXPECT_EQ(sigma_h(x()), (ZEndomorphism{parse_nc("x + z*(x*z - z*y)"), parse_nc("y + (x*z - z*y)*z")}));
  EXPECT_EQ(sigma_h(NCPolynomial()), ZEndomorphism::identity());
  EXPECT_THROW(sigma_h(y()), std::invalid_argument);
}

TEST(SigmaHProperty, InverseIsSigmaOfNegative) {
  Rng rng(ztame::testing::seed() + 60);
  for (int i = 0; i < 30; ++i) {
    NCPolynomial h;
    for (int j = 0; j < 3; ++j) h.add_term(ztame::testing::random_word(rng, rng.uniform(0, 2), 0, rng.uniform(0, 2)), rng.coeff());
    ASSERT_EQ(compose(sigma_h(h), sigma_h(-h)), ZEndomorphism::identity());
  }
}

TEST(RecognizeProperty, TameWordsAreRecognized) {
  Rng rng(ztame::testing::seed() + 61);
  for (int i = 0; i < 60; ++i) {
    const NormalForm nf = ztame::testing::random_normal_form(rng, std::nullopt, 8);
    const ZEndomorphism e = apply(nf);
    const Decision d = recognize_automorphism(e);
    ASSERT_EQ(d.verdict, Verdict::TameAutomorphism) << "f = " << e.f << ", g = " << e.g;
    ASSERT_EQ(apply_word(d.certificate), e);
  }
}

TEST(RecognizeProperty, RandomWordsAreRecognized) {
  Rng rng(ztame::testing::seed() + 62);
  for (int i = 0; i < 40; ++i) {
    const ZEndomorphism e = apply_word(ztame::testing::random_tame_word(rng, 5, 8));
    const Decision d = recognize_automorphism(e);
    ASSERT_EQ(d.verdict, Verdict::TameAutomorphism) << "f = " << e.f << ", g = " << e.g;
    ASSERT_EQ(apply_word(d.certificate), e);
  }
}

TEST(RecognizeProperty, TameCoordinatesAreRecognized) {
  Rng rng(ztame::testing::seed() + 63);
  for (int i = 0; i < 60; ++i) {
    const NormalForm nf = ztame::testing::random_normal_form(rng, std::nullopt, 8);
    const NCPolynomial f = apply(nf).f;
    const Decision d = recognize_coordinate(f);
    ASSERT_EQ(d.verdict, Verdict::TameCoordinate) << "f = " << f;
    ASSERT_EQ(apply_word(d.certificate).f, f);
  }
}

TEST(RecognizeProperty, FilterAgreesWithRecognizer) {
  Rng rng(ztame::testing::seed() + 64);
  for (int i = 0; i < 100; ++i) {
    const ZEndomorphism e = ztame::testing::random_mixed_endomorphism(rng);
    ASSERT_EQ(mixed_monomial_filter(e), FilterResult::NotAutomorphism);
    ASSERT_NE(recognize_automorphism(e).verdict, Verdict::TameAutomorphism) << e.f << " ; " << e.g;
  }
}

TEST(RecognizeAutomorphism, ShortCertificates) {
  const Decision d = recognize_automorphism({parse_nc("x + y^2"), y()});
  ASSERT_EQ(d.certificate.size(), 1u);
  EXPECT_TRUE(std::holds_alternative<Triangular>(d.certificate.front()));
  const Decision id = recognize_automorphism(ZEndomorphism::identity());
  EXPECT_EQ(id.verdict, Verdict::TameAutomorphism);
  EXPECT_TRUE(id.certificate.empty());
}
