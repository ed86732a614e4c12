#include <gtest/gtest.h>

#include "d4cs/errors.hpp"
#include "d4cs/series.hpp"
#include "d4cs/zpoly.hpp"
#include "support.hpp"

using namespace d4cs;
using testing_support::random_zpoly;

TEST(ZPolynomial, ParseAndInspect) {
  ZPolynomial p = parse_zpolynomial("z1^2 - 2/(1+k)*z2 - 8*k/((1+k)*(1+3*k))");
  EXPECT_EQ(p.size(), 3u);
  EXPECT_EQ(p.coefficient({2, 0, 0, 0}), KappaRational(1));
  EXPECT_EQ(p.coefficient({0, 1, 0, 0}), parse_kappa_rational("-2/(1+k)"));
  EXPECT_EQ(p.coefficient({0, 0, 0, 1}), KappaRational());
  EXPECT_FALSE(p.kappa_free());
  EXPECT_TRUE(parse_zpolynomial("z1*z2 - 3*z3*z4").kappa_free());
  EXPECT_EQ(parse_zpolynomial("(k+1)/(k+1)").as_constant(), KappaRational(1));
  EXPECT_THROW(parse_zpolynomial("z1").as_constant(), std::invalid_argument);
}

TEST(ZPolynomial, ParserErrors) {
  for (const char* bad : {"z5", "z1 +", "1/z1", "z1^-1", "(z1", "z1 $ z2", "kap"}) {
    EXPECT_THROW(parse_zpolynomial(bad), std::invalid_argument) << bad;
  }
  EXPECT_THROW(parse_zpolynomial("1/(k-k)"), std::invalid_argument);
}

TEST(ZPolynomial, ToStringRoundTrips) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 100; ++t) {
    ZPolynomial p = random_zpoly(rng);
    EXPECT_EQ(parse_zpolynomial(p.to_string()), p) << p.to_string();
  }
  EXPECT_EQ(parse_zpolynomial("z1^2 - z2 - 1").to_string(), "z1^2 - z2 - 1");
  EXPECT_EQ(ZPolynomial().to_string(), "0");
}

TEST(ZPolynomial, RingAxiomsRandom) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 100; ++t) {
    ZPolynomial a = random_zpoly(rng), b = random_zpoly(rng), c = random_zpoly(rng, 3, 1);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(a * ZPolynomial(1), a);
  }
}

TEST(ZPolynomial, DerivativeLeibniz) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    ZPolynomial a = random_zpoly(rng), b = random_zpoly(rng);
    for (int j = 1; j <= 4; ++j) {
      EXPECT_EQ((a * b).derivative(j), a.derivative(j) * b + a * b.derivative(j));
    }
  }
  EXPECT_EQ(parse_zpolynomial("z1^3*z2").derivative(1), parse_zpolynomial("3*z1^2*z2"));
  EXPECT_TRUE(parse_zpolynomial("z1^3").derivative(2).is_zero());
}

TEST(ZPolynomial, SubstitutionAndEvaluation) {
  std::mt19937_64 rng(13);
  const std::array<std::complex<double>, 4> z = {{{0.3, 0.1}, {-1.2, 0}, {0.7, -0.4}, {2.0, 0.5}}};
  for (int t = 0; t < 100; ++t) {
    ZPolynomial a = random_zpoly(rng), b = random_zpoly(rng);
    const BigRational k0(17, 5);
    try {
      EXPECT_EQ((a * b).substitute(k0), a.substitute(k0) * b.substitute(k0));
      auto va = a.evaluate(z, k0.get_d()), vb = b.evaluate(z, k0.get_d());
      auto vab = (a * b).evaluate(z, k0.get_d());
      EXPECT_NEAR(std::abs(vab - va * vb), 0.0, 1e-8 * (1 + std::abs(vab)));
    } catch (const PoleAtKappa&) {
    }
  }
}

TEST(ZPolynomial, PermuteVariables) {
  ZPolynomial p = parse_zpolynomial("z1^2*z3 + k*z4");
  EXPECT_EQ(p.permute_variables({2, 1, 0, 3}), parse_zpolynomial("z3^2*z1 + k*z4"));
  EXPECT_EQ(p.permute_variables({0, 1, 3, 2}), parse_zpolynomial("z1^2*z4 + k*z3"));
}

TEST(ZPolynomial, ShiftedAndRhoLevel) {
  EXPECT_EQ(parse_zpolynomial("z1 + 2").shifted({0, 1, 0, 0}), parse_zpolynomial("z1*z2 + 2*z2"));
  EXPECT_EQ(rho_level({1, 1, 1, 1}), 14);
}

TEST(TauSeries, DivisionRoundTrip) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 30; ++t) {
    const int order = 5;
    std::vector<ZPolynomial> num, den{ZPolynomial(1)};
    for (int k = 0; k <= order; ++k) num.push_back(random_zpoly(rng, 2, 1));
    for (int k = 1; k <= 3; ++k) den.push_back(random_zpoly(rng, 2, 1));
    TauSeries n(order, num), d(order, den);
    TauSeries q = series_div(n, d);
    EXPECT_EQ(q * d, n);
  }
}

TEST(TauSeries, GeometricSeries) {
  TauSeries one(4, {ZPolynomial(1)});
  TauSeries den(4, {ZPolynomial(1), -ZPolynomial::variable(1)});
  TauSeries q = series_div(one, den);
  for (int k = 0; k <= 4; ++k) EXPECT_EQ(q[k], ZPolynomial::monomial({k, 0, 0, 0}));
  EXPECT_EQ(q.euler()[3], ZPolynomial::monomial({3, 0, 0, 0}, KappaRational(3)));
}

TEST(TauSeries, DivisionNeedsInvertibleConstant) {
  TauSeries one(2, {ZPolynomial(1)});
  EXPECT_THROW(series_div(one, TauSeries(2, {ZPolynomial()})), std::domain_error);
  EXPECT_THROW(series_div(one, TauSeries(2, {ZPolynomial::variable(1)})), std::domain_error);
}
