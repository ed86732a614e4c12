#pragma once

// Rational generating functions in t for P_{m,0,0,0} and P_{m,1,0,0} at
// kappa = 0 (monomial functions) and kappa = 1 (characters).

#include <string>
#include <vector>

#include "d4cs/series.hpp"
#include "d4cs/solver.hpp"

namespace d4cs {

enum class GFLabel { F0, G0, F1, G1 };

std::string gf_name(GFLabel label);
/// Throws std::invalid_argument for anything but F0, G0, F1, G1.
GFLabel gf_from_name(const std::string& name);
/// 0 for F0/G0, 1 for F1/G1.
int gf_kappa(GFLabel label);
/// The quantum numbers generated at t^m: (m,0,0,0) for F, (m,1,0,0) for G.
WeightVector gf_weight(GFLabel label, int m);

/// numerator / denominator, each a list of t-coefficients (t^0 first).
struct RationalGF {
  GFLabel label;
  std::vector<ZPolynomial> numerator;
  std::vector<ZPolynomial> denominator;
};

/// The common denominator D(t,z), degree 8 in t with D(0,z) = 1.
const std::vector<ZPolynomial>& gf_denominator();

RationalGF build(GFLabel label);

/// Series expansion through t^order.
TauSeries expand(const RationalGF& gf, int order);

/// The polynomial the t^m coefficient should equal: P_m specialized at
/// kappa = 0 or 1, with the t^0 conventions 8 (F0) and 1 (F1).
ZPolynomial expected_coefficient(GFLabel label, int m, PolynomialCache& cache);

struct SeriesCheck {
  int m = 0;
  bool pass = false;
  ZPolynomial expected;
  ZPolynomial got;
};

std::vector<SeriesCheck> check_series(GFLabel label, int order, PolynomialCache& cache);

/// [L/2 - (t d/dt)^2 - 6 t d/dt] applied coefficientwise to the expansion
/// of F1 (without the last term for F0), kappa specialized to 0 or 1.
/// Throws std::invalid_argument for G0/G1.
TauSeries pde_residual(GFLabel label, int order);

/// z1 F0[m] - F0[m+1] - F0[m-1] - G0[m-1] for 1 <= m <= max_m, from the
/// expanded series. Zero for m >= 2. At m = 1 the kappa -> 0 limit of c_1
/// is 2, not 1, so the entry there is G0[0] = z2 - 4.
std::vector<ZPolynomial> kappa0_three_term_residuals(int max_m);

}  // namespace d4cs
