#pragma once

// Numeric checks in the torus coordinates q: characters z_j(q), the
// ground state, a finite-difference residual of the q-space operator and
// the kappa = -(n-1)/2 proportionality to a power of the ground state.

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

#include "d4cs/solver.hpp"

namespace d4cs {

using Complex = std::complex<double>;

struct TorusPoint {
  std::array<Complex, 4> q;

  static TorusPoint real(double q1, double q2, double q3, double q4);
  /// x_j = exp(2 i q_j).
  std::array<Complex, 4> x() const;
  /// exp(i (q1+q2+q3+q4)); squares to x1 x2 x3 x4.
  Complex xbar() const;
};

using CharacterValues = std::array<Complex, 4>;

CharacterValues characters_from_q(const TorusPoint& p);

/// prod_{j<k} sin(q_j - q_k) sin(q_j + q_k).
Complex sine_product(const TorusPoint& p);

/// sine_product^kappa with the principal power; exactly 1 at kappa = 0.
Complex ground_state(const TorusPoint& p, double kappa);

/// 28 kappa^2.
double ground_state_energy(double kappa);

/// eps_m + 28 kappa^2 as an exact rational function of kappa.
KappaRational energy(const WeightVector& m);
/// 2 (lambda + kappa rho, lambda + kappa rho) through inverse-Cartan inner
/// products. Must agree with energy(m).
KappaRational energy_from_inner_product(const WeightVector& m);

/// min over j<k of |sin(q_j - q_k)| and |sin(q_j + q_k)|.
double singularity_distance(const TorusPoint& p);

struct ResidualReport {
  double residual = 0;        // the smaller of the two below
  int sign = -1;              // sign s with s * Delta^kappa Phi = eps Phi
  double residual_minus = 0;  // |(-D - eps) Phi| / |eps Phi|
  double residual_plus = 0;   // |(+D - eps) Phi| / |eps Phi|
};

/// Applies the q-space operator to Phi = P_m(z(q)) (kappa-specialized) by
/// central differences with step h and compares with eps_m Phi. Falls back
/// to the absolute residual when eps_m Phi vanishes. Throws NearSingularity
/// when singularity_distance(p) <= 0.1.
ResidualReport hamiltonian_residual(const CSPolynomial& poly, double kappa, const TorusPoint& p,
                                    double h);

struct SpecialIdentity {
  int n = 0;
  Complex lhs;  // P_{n rho} at kappa = -(n-1)/2
  Complex rhs;  // (-1)^n 2^{12n} sine_product^n
  double relative_error = 0;
};

/// Throws PoleAtKappa if P_{n rho} has a pole at kappa = -(n-1)/2.
SpecialIdentity special_kappa_identity(int n, const TorusPoint& p, PolynomialCache& cache);

/// `count` real points in (0, pi)^4 with singularity_distance > min_distance,
/// reproducible from `seed`.
std::vector<TorusPoint> random_torus_points(std::size_t count, std::uint64_t seed,
                                            double min_distance = 0.2);

}  // namespace d4cs
