#pragma once

// Eigenpolynomials P_m^kappa by the height-ordered coefficient recursion.

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "d4cs/kappa.hpp"
#include "d4cs/rootsystem.hpp"
#include "d4cs/zpoly.hpp"

namespace d4cs {

struct ConeElement {
  RootVector mu;
  WeightVector mu_weight;
  Monomial exponent;  // m - mu_weight, all entries >= 0
};

/// Root-lattice shifts mu >= 0 with m - mu componentwise nonnegative,
/// sorted by (height, mu). The first element is mu = 0.
struct SupportCone {
  WeightVector m;
  std::vector<ConeElement> elements;
};

SupportCone support_cone(const WeightVector& m);

/// A solved eigenpolynomial: sum over the cone of c_mu z^{m - mu}.
struct CSPolynomial {
  WeightVector m;
  KappaRational eigenvalue;
  /// (mu, c_mu) sorted by (height, mu); c_0 = 1. Zero coefficients are kept.
  std::vector<std::pair<RootVector, KappaRational>> coefficients;
  ZPolynomial polynomial;

  /// Zero for mu outside the cone.
  KappaRational coefficient(const RootVector& mu) const;
};

CSPolynomial solve(const WeightVector& m);

/// Rebuilds the coefficient table of P_m from a polynomial known to have
/// its support in the cone of m. Throws std::invalid_argument otherwise.
CSPolynomial from_polynomial(const WeightVector& m, const ZPolynomial& p);

/// Substitutes kappa = k0 into every coefficient. Throws PoleAtKappa with
/// the offending mu.
ZPolynomial specialize(const CSPolynomial& p, const BigRational& k0);

/// Exact check of L P = epsilon_m P.
bool verify_eigen(const CSPolynomial& p);

/// Thread-safe memo of solve().
class PolynomialCache {
 public:
  std::shared_ptr<const CSPolynomial> get(const WeightVector& m);
  std::size_t size() const;

 private:
  mutable std::mutex mu_;
  std::map<WeightVector, std::shared_ptr<const CSPolynomial>> cache_;
};

}  // namespace d4cs
