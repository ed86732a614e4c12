#include <gtest/gtest.h>

#include "d4cs/genfun.hpp"
#include "d4cs/operator.hpp"

using namespace d4cs;

namespace {
ZPolynomial Z(const char* s) { return parse_zpolynomial(s); }
}  // namespace

TEST(GenFun, BuildPrintedData) {
  RationalGF f1 = build(GFLabel::F1);
  EXPECT_EQ(f1.numerator.size(), 3u);
  EXPECT_EQ(f1.numerator[0], Z("1"));
  EXPECT_EQ(f1.numerator[2], Z("-1"));
  const auto& d = gf_denominator();
  ASSERT_EQ(d.size(), 9u);
  EXPECT_EQ(d[0], Z("1"));
  EXPECT_EQ(d[4], Z("z3^2 + z4^2 - 2*z2 - 2"));
  EXPECT_EQ(d[8], Z("1"));
  EXPECT_EQ(build(GFLabel::F0).numerator[0], Z("8"));
  for (GFLabel l : {GFLabel::F0, GFLabel::G0, GFLabel::F1, GFLabel::G1}) {
    EXPECT_EQ(build(l).denominator, d);
    EXPECT_EQ(gf_from_name(gf_name(l)), l);
  }
  EXPECT_THROW(gf_from_name("H0"), std::invalid_argument);
}

// D(t,z) is the characteristic polynomial prod_j (1 - t x_j)(1 - t/x_j)
// of the vector representation, so it is palindromic.
TEST(GenFun, DenominatorIsPalindromic) {
  const auto& d = gf_denominator();
  for (int k = 0; k <= 8; ++k) EXPECT_EQ(d[k], d[8 - k]);
}

TEST(GenFun, ExpansionExamples) {
  TauSeries f0 = expand(build(GFLabel::F0), 1);
  EXPECT_EQ(f0[0], Z("8"));
  EXPECT_EQ(f0[1], Z("z1"));
  TauSeries f1 = expand(build(GFLabel::F1), 2);
  EXPECT_EQ(f1[2], Z("z1^2 - z2 - 1"));
  EXPECT_EQ(expand(build(GFLabel::G0), 0)[0], Z("z2 - 4"));
  EXPECT_EQ(expand(build(GFLabel::G1), 1)[1], Z("z1*z2 - z3*z4"));
  EXPECT_THROW(expand(build(GFLabel::F0), -1), std::invalid_argument);
}

TEST(GenFun, SeriesMatchesSolver) {
  PolynomialCache cache;
  for (auto [l, order] : {std::pair{GFLabel::F0, 8}, {GFLabel::F1, 8}, {GFLabel::G0, 6}, {GFLabel::G1, 6}}) {
    auto checks = check_series(l, order, cache);
    ASSERT_EQ(checks.size(), static_cast<std::size_t>(order + 1));
    for (const auto& c : checks) {
      EXPECT_TRUE(c.pass) << gf_name(l) << " t^" << c.m << ": " << (c.expected - c.got).to_string();
    }
  }
}

TEST(GenFun, PdeResidualVanishes) {
  EXPECT_TRUE(pde_residual(GFLabel::F0, 6).is_zero());
  EXPECT_TRUE(pde_residual(GFLabel::F1, 6).is_zero());
  EXPECT_TRUE(pde_residual(GFLabel::F0, 0).is_zero());
  EXPECT_THROW(pde_residual(GFLabel::G0, 3), std::invalid_argument);
}

TEST(GenFun, PdeDetectsAWrongNumerator) {
  // Drop the t^2 term of N1: the result is no longer an eigen-series.
  RationalGF bad = build(GFLabel::F1);
  bad.numerator.resize(1);
  TauSeries s = expand(bad, 3);
  const KappaRational half = KappaRational(1) / KappaRational(2);
  ZPolynomial r2 = apply_L_at(s[2], BigRational(1)) * half - s[2] * KappaRational(4 + 12);
  EXPECT_FALSE(r2.is_zero());
}

TEST(GenFun, KappaZeroThreeTermRelation) {
  auto r = kappa0_three_term_residuals(7);
  ASSERT_EQ(r.size(), 7u);
  EXPECT_EQ(r[0], Z("z2 - 4"));
  for (int m = 2; m <= 7; ++m) EXPECT_TRUE(r[m - 1].is_zero()) << m;
}
