#include "d4cs/qspace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include "d4cs/errors.hpp"
#include "d4cs/operator.hpp"

namespace d4cs {

namespace {

constexpr Complex I(0.0, 1.0);

Complex phi(const ZPolynomial& poly, double kappa, const TorusPoint& p) {
  return poly.evaluate(characters_from_q(p), kappa);
}

}  // namespace

TorusPoint TorusPoint::real(double q1, double q2, double q3, double q4) {
  return TorusPoint{{Complex(q1), Complex(q2), Complex(q3), Complex(q4)}};
}

std::array<Complex, 4> TorusPoint::x() const {
  std::array<Complex, 4> out;
  for (int j = 0; j < 4; ++j) out[j] = std::exp(2.0 * I * q[j]);
  return out;
}

Complex TorusPoint::xbar() const { return std::exp(I * (q[0] + q[1] + q[2] + q[3])); }

CharacterValues characters_from_q(const TorusPoint& p) {
  const auto x = p.x();
  const Complex xb = p.xbar();
  Complex z1 = 0, z2 = 0, z3 = 0, z4 = 0;
  Complex sum_x = 0, sum_inv = 0, pairs = 0;
  for (int j = 0; j < 4; ++j) {
    sum_x += x[j];
    sum_inv += 1.0 / x[j];
  }
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      pairs += x[i] * x[j];
      z2 += x[i] * x[j] + 1.0 / (x[i] * x[j]);
    }
  }
  // Ordered pairs including i = j: the four zero weights of the adjoint.
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) z2 += x[j] / x[i];
  }
  z1 = sum_x + sum_inv;
  z3 = xb * sum_inv + sum_x / xb;
  z4 = xb + 1.0 / xb + pairs / xb;
  return {z1, z2, z3, z4};
}

Complex sine_product(const TorusPoint& p) {
  Complex prod = 1.0;
  for (int j = 0; j < 4; ++j) {
    for (int k = j + 1; k < 4; ++k) prod *= std::sin(p.q[j] - p.q[k]) * std::sin(p.q[j] + p.q[k]);
  }
  return prod;
}

Complex ground_state(const TorusPoint& p, double kappa) {
  if (kappa == 0.0) return 1.0;
  return std::pow(sine_product(p), kappa);
}

double ground_state_energy(double kappa) { return 28.0 * kappa * kappa; }

KappaRational energy(const WeightVector& m) {
  const KappaRational k = KappaRational::kappa();
  return epsilon(m) + KappaRational(28) * k * k;
}

KappaRational energy_from_inner_product(const WeightVector& m) {
  if (!m.dominant()) throw NotDominant("energy: " + m.to_string() + " is not dominant");
  const WeightVector rho = d4().weyl_vector;
  const KappaRational k = KappaRational::kappa();
  const KappaRational ll(inner_product(m, m));
  const KappaRational lr(inner_product(m, rho));
  const KappaRational rr(inner_product(rho, rho));
  return KappaRational(2) * (ll + KappaRational(2) * k * lr + k * k * rr);
}

double singularity_distance(const TorusPoint& p) {
  double d = std::numeric_limits<double>::infinity();
  for (int j = 0; j < 4; ++j) {
    for (int k = j + 1; k < 4; ++k) {
      d = std::min({d, std::abs(std::sin(p.q[j] - p.q[k])), std::abs(std::sin(p.q[j] + p.q[k]))});
    }
  }
  return d;
}

ResidualReport hamiltonian_residual(const CSPolynomial& poly, double kappa, const TorusPoint& p,
                                    double h) {
  if (singularity_distance(p) <= 0.1) {
    throw NearSingularity("torus point within 0.1 of a singular hyperplane");
  }
  const ZPolynomial& P = poly.polynomial;
  const Complex f0 = phi(P, kappa, p);
  std::array<Complex, 4> d1, d2;
  for (int j = 0; j < 4; ++j) {
    TorusPoint up = p, dn = p;
    up.q[j] += h;
    dn.q[j] -= h;
    const Complex fu = phi(P, kappa, up), fd = phi(P, kappa, dn);
    d1[j] = (fu - fd) / (2.0 * h);
    d2[j] = (fu - 2.0 * f0 + fd) / (h * h);
  }
  Complex delta = 0;
  for (int j = 0; j < 4; ++j) delta += 0.5 * d2[j];
  for (int j = 0; j < 4; ++j) {
    for (int k = j + 1; k < 4; ++k) {
      const Complex cm = 1.0 / std::tan(p.q[j] - p.q[k]);
      const Complex cp = 1.0 / std::tan(p.q[j] + p.q[k]);
      delta += kappa * (cm * (d1[j] - d1[k]) + cp * (d1[j] + d1[k]));
    }
  }
  const Complex eps_phi = poly.eigenvalue.evaluate(kappa) * f0;
  const double scale = std::abs(eps_phi) > 0.0 ? std::abs(eps_phi) : 1.0;
  ResidualReport r;
  r.residual_minus = std::abs(-delta - eps_phi) / scale;
  r.residual_plus = std::abs(delta - eps_phi) / scale;
  r.sign = r.residual_minus <= r.residual_plus ? -1 : 1;
  r.residual = std::min(r.residual_minus, r.residual_plus);
  return r;
}

SpecialIdentity special_kappa_identity(int n, const TorusPoint& p, PolynomialCache& cache) {
  if (n < 1) throw std::invalid_argument("special_kappa_identity: n must be >= 1");
  const WeightVector m{{n, n, n, n}};
  BigRational k0(-(n - 1), 2);
  k0.canonicalize();
  ZPolynomial P = specialize(*cache.get(m), k0);
  SpecialIdentity out;
  out.n = n;
  out.lhs = P.evaluate(characters_from_q(p), 0.0);
  out.rhs = std::pow(-1.0, n) * std::pow(2.0, 12 * n) * std::pow(sine_product(p), n);
  const double diff = std::abs(out.lhs - out.rhs);
  out.relative_error = std::abs(out.rhs) > 0.0 ? diff / std::abs(out.rhs) : diff;
  return out;
}

std::vector<TorusPoint> random_torus_points(std::size_t count, std::uint64_t seed,
                                            double min_distance) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, std::numbers::pi);
  std::vector<TorusPoint> out;
  while (out.size() < count) {
    TorusPoint p = TorusPoint::real(angle(rng), angle(rng), angle(rng), angle(rng));
    if (singularity_distance(p) > min_distance) out.push_back(p);
  }
  return out;
}

}  // namespace d4cs
