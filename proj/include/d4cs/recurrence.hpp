#pragma once

// Products z_v * P_m expanded in the P basis (kappa-deformed
// Clebsch-Gordan series), closed-form coefficients and the z1 ladder.

#include <map>
#include <string>
#include <vector>

#include "d4cs/kappa.hpp"
#include "d4cs/rootsystem.hpp"
#include "d4cs/solver.hpp"
#include "d4cs/zpoly.hpp"

namespace d4cs {

/// Weights of the fundamental representation of z_v, as quantum-number
/// shifts. 8 entries for v in {1,3,4}; 25 for v = 2 (the 24 roots and one
/// zero weight standing for the whole Cartan part).
struct ShiftTable {
  int variable;
  std::vector<WeightVector> shifts;
};

const ShiftTable& shift_table(int v);

struct RecurrenceExpansion {
  int variable = 0;
  WeightVector m;
  /// Shifted quantum numbers m' (all >= 0) to nonzero coefficients.
  std::map<WeightVector, KappaRational> terms;

  KappaRational coefficient(const WeightVector& mp) const;
};

/// Expands z_v * P_m over the shift table of v by peeling leading
/// monomials. Throws ResidualNonzero if a remainder survives.
RecurrenceExpansion expand_product(int v, const WeightVector& m, PolynomialCache& cache);

/// sum coeff(m') P_{m'} - z_v P_m; zero when the expansion is right.
ZPolynomial reconstruction_residual(const RecurrenceExpansion& x, PolynomialCache& cache);

/// Maps an expansion of z_v P_m to the corresponding one for
/// z_{perm(v)} P_{perm(m)}.
RecurrenceExpansion permute_expansion(const RecurrenceExpansion& x, const TrialityPerm& perm);

enum class ClosedForm { a, b, c, d, e, f, g, h, k, p, q, r, s };

const std::vector<ClosedForm>& all_closed_forms();
std::string closed_form_name(ClosedForm id);
/// Throws std::invalid_argument for unknown names.
ClosedForm closed_form_from_name(const std::string& name);

/// The quintic in kappa appearing in the numerator of s_m.
KappaPoly t_polynomial(int m);

/// Printed closed form of the coefficient at integer m >= 1.
KappaRational closed_form(ClosedForm id, int m);

struct RelationCheck {
  std::string family;    // "a/c", "b", "d/e", "f/g/h", "k..s", "triality", "kappa=1"
  std::string relation;  // e.g. "z1*P(m,0,0,0)"
  int m = 0;
  bool pass = false;
  std::vector<std::string> mismatches;
};

struct VerificationReport {
  std::vector<RelationCheck> checks;

  bool all_pass() const;
  std::size_t failures() const;
};

/// Runs every printed relation family for m = 1..max_m, the unit value of
/// every closed form at kappa = 1, and the triality identities of the
/// expansion coefficients for dominant weights with coordinate sum <=
/// triality_max_sum.
VerificationReport verify_closed_forms(int max_m, PolynomialCache& cache,
                                       int triality_max_sum = 2);

/// One step of the ladder: P_{m+1,0,0,0} from P_{m,0,0,0} and
/// P_{m-1,0,0,0} through the commutator [L, z1]. For m = 0 pass
/// p_prev = 0.
CSPolynomial ladder_next(int m, const ZPolynomial& p_m, const ZPolynomial& p_prev);

/// P_{0,0,0,0} .. P_{max_m,0,0,0} produced by the ladder alone, starting
/// from 1 and z1.
std::vector<ZPolynomial> ladder_sequence(int max_m);

/// P_{m,1,0,0} from c_{m+1} P_{m,1,0,0} = z1 P_{m+1} - P_{m+2} - a_{m+1} P_m,
/// with P_j = P_{j,0,0,0}.
ZPolynomial recover_m1(int m, const ZPolynomial& p_m, const ZPolynomial& p_m1,
                       const ZPolynomial& p_m2);

}  // namespace d4cs
