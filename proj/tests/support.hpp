#pragma once

#include <random>

#include "d4cs/zpoly.hpp"

namespace testing_support {

inline d4cs::KappaPoly random_poly(std::mt19937_64& rng, int max_degree = 3, int range = 9) {
  std::uniform_int_distribution<int> deg(0, max_degree), c(-range, range);
  std::vector<d4cs::BigInt> coeffs;
  for (int i = 0, d = deg(rng); i <= d; ++i) coeffs.emplace_back(c(rng));
  return d4cs::KappaPoly(coeffs);
}

inline d4cs::KappaRational random_rational(std::mt19937_64& rng) {
  d4cs::KappaPoly den;
  do {
    den = random_poly(rng, 2, 5);
  } while (den.is_zero());
  return d4cs::KappaRational::make(random_poly(rng), den);
}

inline d4cs::ZPolynomial random_zpoly(std::mt19937_64& rng, int terms = 4, int max_exp = 2) {
  std::uniform_int_distribution<int> e(0, max_exp);
  d4cs::ZPolynomial p;
  for (int i = 0; i < terms; ++i) p.add_term({e(rng), e(rng), e(rng), e(rng)}, random_rational(rng));
  return p;
}

}  // namespace testing_support
