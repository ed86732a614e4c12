#include <gtest/gtest.h>

#include "d4cs/errors.hpp"
#include "d4cs/kappa.hpp"
#include "d4cs/zpoly.hpp"
#include "support.hpp"

using namespace d4cs;
using testing_support::random_poly;
using testing_support::random_rational;

namespace {
KappaRational K(const char* s) { return parse_kappa_rational(s); }
}  // namespace

TEST(KappaPoly, Basics) {
  KappaPoly p = parse_kappa_poly("4*k^2-3*k+1");
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.to_string(), "4*k^2-3*k+1");
  EXPECT_EQ(KappaPoly().degree(), -1);
  EXPECT_EQ(KappaPoly().to_string(), "0");
  EXPECT_EQ(p.evaluate(BigRational(1, 2)), BigRational(1, 2));
  EXPECT_EQ(parse_kappa_poly("6*k+4").content(), 2);
  EXPECT_EQ(parse_kappa_poly("6*k+4").primitive_part(), parse_kappa_poly("3*k+2"));
}

TEST(KappaPoly, ExactDivision) {
  KappaPoly a = parse_kappa_poly("(k+1)*(2*k-3)*(k^2+1)");
  EXPECT_EQ(a.divexact(parse_kappa_poly("2*k-3")), parse_kappa_poly("(k+1)*(k^2+1)"));
  EXPECT_THROW(a.divexact(parse_kappa_poly("k+2")), InternalInconsistency);
}

TEST(KappaPoly, Gcd) {
  EXPECT_EQ(primitive_gcd(parse_kappa_poly("(k+1)*(3*k+2)"), parse_kappa_poly("(3*k+2)*(k-5)")),
            parse_kappa_poly("3*k+2"));
  EXPECT_EQ(primitive_gcd(parse_kappa_poly("k^2+1"), parse_kappa_poly("k^2+2")), KappaPoly(1));
  EXPECT_EQ(primitive_gcd(parse_kappa_poly("(k^2+k+1)^2*(k-1)"), parse_kappa_poly("(k^2+k+1)*(k+7)")),
            parse_kappa_poly("k^2+k+1"));
}

TEST(KappaPoly, GcdDividesBothRandom) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 100; ++t) {
    KappaPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng, 2);
    if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
    KappaPoly g = primitive_gcd(a * c, b * c);
    EXPECT_NO_THROW((a * c).divexact(g));
    EXPECT_NO_THROW((b * c).divexact(g));
    EXPECT_NO_THROW(g.divexact(c.primitive_part()));
  }
}

TEST(KappaRational, CanonicalForm) {
  KappaRational r = KappaRational::make(parse_kappa_poly("2*k+2"), parse_kappa_poly("-4*k^2-4*k"));
  EXPECT_EQ(r.num(), KappaPoly(-1));
  EXPECT_EQ(r.den(), parse_kappa_poly("2*k"));
  EXPECT_EQ(K("(k^2-1)/(k-1)"), K("k+1"));
  EXPECT_EQ(K("0/(k+3)"), KappaRational());
  EXPECT_EQ(KappaRational().den(), KappaPoly(1));
  EXPECT_THROW(KappaRational::make(KappaPoly(1), KappaPoly()), std::domain_error);
  EXPECT_EQ(K("4*(k-1)/(5*k+1)").to_string(), "(4*k-4)/(5*k+1)");
  EXPECT_EQ(K("1/2").to_string(), "(1)/(2)");
}

TEST(KappaRational, RingAxiomsRandom) {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 150; ++t) {
    KappaRational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, KappaRational());
    EXPECT_EQ(a + KappaRational(), a);
    EXPECT_EQ(a * KappaRational(1), a);
    if (!b.is_zero()) {
      EXPECT_EQ((a / b) * b, a);
      EXPECT_EQ(b / b, KappaRational(1));
    }
  }
}

TEST(KappaRational, SubstitutionIsAHomomorphism) {
  std::mt19937_64 rng(3);
  const BigRational points[] = {BigRational(0), BigRational(1), BigRational(7, 3), BigRational(-5, 11)};
  for (int t = 0; t < 100; ++t) {
    KappaRational a = random_rational(rng), b = random_rational(rng);
    for (const auto& x : points) {
      try {
        BigRational va = a.substitute(x), vb = b.substitute(x);
        EXPECT_EQ((a + b).substitute(x), va + vb);
        EXPECT_EQ((a * b).substitute(x), va * vb);
        EXPECT_NEAR(a.evaluate(x.get_d()), va.get_d(), 1e-9 * (1 + std::abs(va.get_d())));
      } catch (const PoleAtKappa&) {
      }
    }
  }
}

TEST(KappaRational, PoleDetection) {
  KappaRational r = K("1/((k+1)*(3*k+1))");
  EXPECT_THROW(r.substitute(BigRational(-1)), PoleAtKappa);
  EXPECT_THROW(r.substitute(BigRational(-1, 3)), PoleAtKappa);
  EXPECT_THROW(r.evaluate(-1.0), PoleAtKappa);
  EXPECT_EQ(r.substitute(BigRational(1)), BigRational(1, 8));
  try {
    r.substitute(BigRational(-1, 3));
  } catch (const PoleAtKappa& e) {
    EXPECT_EQ(e.kappa(), "-1/3");
  }
  // A removable singularity is not a pole after reduction.
  EXPECT_EQ(K("(k+1)/(k+1)").substitute(BigRational(-1)), 1);
}

TEST(KappaRational, ConstantValue) {
  EXPECT_EQ(K("6/4").constant_value(), BigRational(3, 2));
  EXPECT_TRUE(K("k").is_polynomial());
  EXPECT_FALSE(K("1/k").is_polynomial());
  EXPECT_THROW(K("k").constant_value(), std::logic_error);
}
