#include <gtest/gtest.h>

#include <fstream>

#include "d4cs/errors.hpp"
#include "d4cs/golden.hpp"
#include "d4cs/operator.hpp"
#include "d4cs/qspace.hpp"
#include "d4cs/serialize.hpp"
#include "d4cs/solver.hpp"
#include "oracles.hpp"

using namespace d4cs;

namespace {
ZPolynomial Z(const char* s) { return parse_zpolynomial(s); }
WeightVector W(int a, int b, int c, int d) { return WeightVector{{a, b, c, d}}; }
}  // namespace

TEST(SupportCone, SmallCases) {
  EXPECT_EQ(support_cone(W(0, 0, 0, 0)).elements.size(), 1u);
  // z1^2, z2, 1
  auto cone = support_cone(W(2, 0, 0, 0));
  ASSERT_EQ(cone.elements.size(), 3u);
  EXPECT_TRUE(cone.elements[0].mu.is_zero());
  EXPECT_EQ(cone.elements[1].exponent, (Monomial{0, 1, 0, 0}));
  EXPECT_EQ(cone.elements[2].exponent, (Monomial{0, 0, 0, 0}));
  EXPECT_THROW(support_cone(W(0, 0, -1, 0)), NotDominant);
}

TEST(SupportCone, SortedByHeightAndComplete) {
  for (const auto& m : dominant_weights_up_to(3)) {
    auto cone = support_cone(m);
    for (std::size_t i = 1; i < cone.elements.size(); ++i) {
      EXPECT_LE(cone.elements[i - 1].mu.height(), cone.elements[i].mu.height());
    }
    // Brute force over a generous box.
    std::size_t count = 0;
    for (int a = 0; a <= 12; ++a)
      for (int b = 0; b <= 12; ++b)
        for (int c = 0; c <= 12; ++c)
          for (int d = 0; d <= 12; ++d) {
            if ((m - root_to_weight(RootVector{{a, b, c, d}})).dominant()) ++count;
          }
    EXPECT_EQ(cone.elements.size(), count) << m.to_string();
  }
}

TEST(Solve, Examples) {
  EXPECT_EQ(solve(W(0, 0, 0, 0)).polynomial, Z("1"));
  EXPECT_EQ(solve(W(1, 0, 0, 0)).polynomial, Z("z1"));
  EXPECT_EQ(solve(W(0, 1, 0, 0)).polynomial, Z("z2 + 4*(k-1)/(5*k+1)"));
  EXPECT_EQ(solve(W(2, 0, 0, 0)).polynomial, Z("z1^2 - 2/(1+k)*z2 - 8*k/((1+k)*(1+3*k))"));
  EXPECT_EQ(solve(W(1, 0, 1, 0)).polynomial, Z("z1*z3 - 4/(1+3*k)*z4"));
  EXPECT_THROW(solve(W(1, -1, 0, 0)), NotDominant);
}

TEST(Solve, LeadingCoefficientAndEigenvalue) {
  for (const auto& m : dominant_weights_up_to(3)) {
    CSPolynomial p = solve(m);
    EXPECT_EQ(p.coefficients.front().second, KappaRational(1));
    EXPECT_EQ(p.polynomial.coefficient(m.coords), KappaRational(1));
    EXPECT_EQ(p.eigenvalue, epsilon(m));
    EXPECT_TRUE(verify_eigen(p)) << m.to_string();
  }
}

TEST(Solve, TrialityCovariant) {
  for (const auto& m : dominant_weights_up_to(3)) {
    ZPolynomial p = solve(m).polynomial;
    for (const auto& perm : triality_group()) {
      EXPECT_EQ(solve(triality_permute(m, perm)).polynomial, p.permute_variables(perm));
    }
  }
}

TEST(Solve, CoefficientLookup) {
  CSPolynomial p = solve(W(2, 0, 0, 0));
  EXPECT_EQ(p.coefficient(RootVector{{1, 0, 0, 0}}), parse_kappa_rational("-2/(1+k)"));
  EXPECT_EQ(p.coefficient(RootVector{{0, 0, 1, 0}}), KappaRational());
}

TEST(FromPolynomial, RebuildsAndRejects) {
  CSPolynomial p = solve(W(1, 1, 0, 0));
  CSPolynomial q = from_polynomial(p.m, p.polynomial);
  EXPECT_EQ(q.coefficients, p.coefficients);
  EXPECT_THROW(from_polynomial(W(1, 0, 0, 0), Z("z1 + z2")), std::invalid_argument);
}

TEST(Specialize, PolesAndValues) {
  CSPolynomial p = solve(W(2, 0, 0, 0));
  EXPECT_EQ(specialize(p, BigRational(1)), Z("z1^2 - z2 - 1"));
  EXPECT_EQ(specialize(p, BigRational(0)), Z("z1^2 - 2*z2"));
  try {
    specialize(p, BigRational(-1));
    FAIL() << "expected a pole";
  } catch (const PoleAtKappa& e) {
    ASSERT_TRUE(e.mu().has_value());
    EXPECT_EQ(*e.mu(), (std::array<int, 4>{1, 0, 0, 0}));
  }
}

TEST(Specialize, TwoRhoIsRegularAtMinusHalf) {
  CSPolynomial p = solve(W(2, 2, 2, 2));
  EXPECT_TRUE(verify_eigen(p));
  EXPECT_NO_THROW(specialize(p, BigRational(-1, 2)));
}

// kappa = 1: characters; their value at the identity is the dimension.
TEST(Degeneration, DimensionAtIdentity) {
  for (const auto& m : dominant_weights_up_to(3)) {
    ZPolynomial p = specialize(solve(m), BigRational(1));
    BigRational v = 0;
    for (const auto& [e, c] : p.terms()) {
      BigRational t = c.constant_value();
      const int base[4] = {8, 28, 8, 8};
      for (int j = 0; j < 4; ++j)
        for (int r = 0; r < e[j]; ++r) t *= base[j];
      v += t;
    }
    EXPECT_EQ(v, BigRational(oracle::dimension(m.coords))) << m.to_string();
  }
}

// Numeric comparison with Weyl-orbit sums (kappa = 0) and the Weyl
// character formula (kappa = 1), both evaluated directly on the torus.
TEST(Degeneration, OrbitSumsAndCharactersOnTheTorus) {
  const std::array<std::array<double, 4>, 3> qs = {{{0.31, 1.12, 1.93, 2.71},
                                                    {0.2, 0.9, 1.7, 2.4},
                                                    {2.9, 0.45, 1.35, 2.05}}};
  for (const auto& m : dominant_weights_up_to(3)) {
    CSPolynomial p = solve(m);
    ZPolynomial p0 = specialize(p, BigRational(0)), p1 = specialize(p, BigRational(1));
    for (const auto& q : qs) {
      auto z = characters_from_q(TorusPoint::real(q[0], q[1], q[2], q[3]));
      auto mono = oracle::orbit_sum(m.coords, q), chr = oracle::weyl_character(m.coords, q);
      EXPECT_NEAR(std::abs(p0.evaluate(z, 0) - mono), 0.0, 1e-9 * (1 + std::abs(mono))) << m.to_string();
      EXPECT_NEAR(std::abs(p1.evaluate(z, 1) - chr), 0.0, 1e-9 * (1 + std::abs(chr))) << m.to_string();
    }
  }
}

TEST(Golden, CorpusEntries) {
  PolynomialCache cache;
  auto entries = load_golden(fixtures_dir() / "golden_corpus.json");
  ASSERT_EQ(entries.size(), 36u);
  for (const auto& e : entries) {
    GoldenResult r = check_golden(e, cache);
    EXPECT_TRUE(r.pass) << e.kind << " " << e.m.to_string() << ": " << r.difference;
  }
}

TEST(Golden, SerializedRegression) {
  std::size_t files = 0;
  for (const auto& f : std::filesystem::directory_iterator(fixtures_dir() / "golden")) {
    std::ifstream in(f.path());
    Json j = Json::parse(in);
    CSPolynomial stored = cspolynomial_from_json(j);
    CSPolynomial fresh = solve(stored.m);
    EXPECT_EQ(stored.polynomial, fresh.polynomial) << f.path();
    EXPECT_EQ(cspolynomial_to_json(fresh), j) << f.path();
    ++files;
  }
  EXPECT_EQ(files, 12u);
}

TEST(PolynomialCache, Memoizes) {
  PolynomialCache cache;
  auto a = cache.get(W(1, 1, 0, 0));
  auto b = cache.get(W(1, 1, 0, 0));
  EXPECT_EQ(a.get(), b.get());
  EXPECT_EQ(cache.size(), 1u);
}
