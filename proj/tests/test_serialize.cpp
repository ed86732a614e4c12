#include <gtest/gtest.h>

#include "d4cs/serialize.hpp"
#include "support.hpp"

using namespace d4cs;

TEST(Serialize, KappaRoundTrip) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 100; ++t) {
    KappaRational c = testing_support::random_rational(rng);
    EXPECT_EQ(kappa_from_json(kappa_to_json(c)), c);
  }
  EXPECT_EQ(kappa_to_json(parse_kappa_rational("4*(k-1)/(5*k+1)")).dump(),
            R"({"den":"5*k+1","num":"4*k-4"})");
  EXPECT_THROW(kappa_from_json(Json{{"num", "1"}}), std::invalid_argument);
}

TEST(Serialize, ZPolynomialRoundTrip) {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 50; ++t) {
    ZPolynomial p = testing_support::random_zpoly(rng);
    EXPECT_EQ(zpolynomial_from_json(zpolynomial_to_json(p)), p);
  }
}

TEST(Serialize, CSPolynomialRoundTrip) {
  for (const auto& m : dominant_weights_up_to(2)) {
    CSPolynomial p = solve(m);
    CSPolynomial q = cspolynomial_from_json(cspolynomial_to_json(p));
    EXPECT_EQ(q.polynomial, p.polynomial);
    EXPECT_EQ(q.eigenvalue, p.eigenvalue);
  }
  Json j = cspolynomial_to_json(solve(WeightVector{{1, 0, 0, 0}}));
  j["epsilon"]["num"] = "5";
  EXPECT_THROW(cspolynomial_from_json(j), std::invalid_argument);
  Json k = cspolynomial_to_json(solve(WeightVector{{1, 0, 0, 0}}));
  k["coeffs"].push_back({{"mu", {3, 0, 0, 0}}, {"num", "1"}, {"den", "1"}});
  EXPECT_THROW(cspolynomial_from_json(k), std::invalid_argument);
}

TEST(Serialize, KeysSorted) {
  std::string s = cspolynomial_to_json(solve(WeightVector{{2, 0, 0, 0}})).dump();
  EXPECT_LT(s.find("\"coeffs\""), s.find("\"epsilon\""));
  EXPECT_LT(s.find("\"epsilon\""), s.find("\"m\""));
}
