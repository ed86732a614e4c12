#pragma once

// The Calogero-Sutherland operator written in the fundamental characters.
//
// L is normalized so that L P_m = epsilon_m P_m for the eigenpolynomials,
// with epsilon_m = 2(lambda, lambda + 2 kappa rho).

#include <array>
#include <cstddef>

#include "d4cs/kappa.hpp"
#include "d4cs/rootsystem.hpp"
#include "d4cs/zpoly.hpp"

namespace d4cs {

/// epsilon_m(kappa) for a dominant m. Throws NotDominant.
KappaRational epsilon(const WeightVector& m);

/// epsilon as the pair (constant part, kappa coefficient), for any weight.
std::array<long, 2> epsilon_coefficients(const Monomial& e);

/// Second-order differential operator L applied term by term.
ZPolynomial apply_L(const ZPolynomial& p);

/// L applied to p followed by kappa = k0.
ZPolynomial apply_L_at(const ZPolynomial& p, const BigRational& k0);

/// L z^e from the closed-form monomial action: epsilon_e z^e minus the
/// seventeen lowering terms z^{e - shift}.
ZPolynomial apply_L_monomial(const Monomial& e);

/// L(z_v p) - z_v L(p), v in 1..4.
ZPolynomial commutator_with(int v, const ZPolynomial& p);

/// Number of lowering shifts in the monomial action.
inline constexpr std::size_t kLoweringCount = 17;

/// The lowering shifts in simple-root coordinates.
const std::array<RootVector, kLoweringCount>& lowering_shifts();

/// Coefficient of z^{e - shift_i} in -(L z^e), as a function of e.
/// Vanishes whenever e - shift_i would have a negative entry.
KappaRational lowering_coefficient(std::size_t i, const Monomial& e);

}  // namespace d4cs
