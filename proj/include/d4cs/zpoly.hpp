#pragma once

// Sparse polynomials in the fundamental characters z1..z4 with
// KappaRational coefficients.

#include <array>
#include <complex>
#include <map>
#include <string>

#include "d4cs/kappa.hpp"

namespace d4cs {

/// Exponents of z1..z4. Always nonnegative inside a ZPolynomial.
using Monomial = std::array<int, 4>;

/// Sum of the exponents paired with rho, i.e. 3e1 + 5e2 + 3e3 + 3e4.
/// Strictly decreases along every lowering shift of a positive root.
int rho_level(const Monomial& e);

std::string monomial_to_string(const Monomial& e);

class ZPolynomial {
 public:
  using TermMap = std::map<Monomial, KappaRational>;

  ZPolynomial() = default;
  explicit ZPolynomial(const KappaRational& c);
  ZPolynomial(long c) : ZPolynomial(KappaRational(c)) {}  // NOLINT(google-explicit-constructor)

  /// z_j for j in 1..4.
  static ZPolynomial variable(int j);
  static ZPolynomial monomial(const Monomial& e, const KappaRational& c = KappaRational(1));

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Zero when the monomial is absent.
  KappaRational coefficient(const Monomial& e) const;
  /// True when every coefficient is free of kappa.
  bool kappa_free() const;
  /// The single coefficient of the constant monomial, when that is the
  /// only term (or zero for the zero polynomial). Throws otherwise.
  KappaRational as_constant() const;

  /// Adds c * z^e in place; drops the term if it cancels.
  void add_term(const Monomial& e, const KappaRational& c);

  ZPolynomial operator-() const;
  ZPolynomial& operator+=(const ZPolynomial& o);
  ZPolynomial& operator-=(const ZPolynomial& o);
  ZPolynomial& operator*=(const KappaRational& s);
  friend ZPolynomial operator+(ZPolynomial a, const ZPolynomial& b) { return a += b; }
  friend ZPolynomial operator-(ZPolynomial a, const ZPolynomial& b) { return a -= b; }
  friend ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b);
  friend ZPolynomial operator*(ZPolynomial a, const KappaRational& s) { return a *= s; }
  friend ZPolynomial operator*(const KappaRational& s, ZPolynomial a) { return a *= s; }
  friend bool operator==(const ZPolynomial&, const ZPolynomial&) = default;

  /// Multiplies by z^e.
  ZPolynomial shifted(const Monomial& e) const;

  /// Formal partial derivative with respect to z_j, j in 1..4.
  ZPolynomial derivative(int j) const;

  /// Substitutes kappa = k0 in every coefficient. Throws PoleAtKappa.
  ZPolynomial substitute(const BigRational& k0) const;

  /// Floating-point value at complex z, with kappa = k0 in the coefficients.
  std::complex<double> evaluate(const std::array<std::complex<double>, 4>& z,
                                double k0) const;

  /// Renames variables: z_i becomes z_{perm[i]} (0-based perm).
  ZPolynomial permute_variables(const std::array<int, 4>& perm) const;

  /// Human-readable rendering, highest rho_level first.
  std::string to_string() const;

 private:
  TermMap terms_;
};

/// Parses an expression such as "z1^2 - 2/(1+k)*z2 - 8*k/((1+k)*(1+3*k))".
///
/// Grammar: +, -, *, / (divisor must be free of z), ^ with a nonnegative
/// integer exponent, parentheses, integer literals, the coupling `k` (or
/// `kappa`) and the variables z1..z4. Throws std::invalid_argument.
ZPolynomial parse_zpolynomial(const std::string& text);

/// Parses a kappa-only expression into a KappaRational.
KappaRational parse_kappa_rational(const std::string& text);

/// Parses a kappa-only polynomial expression (e.g. "4*k-4").
KappaPoly parse_kappa_poly(const std::string& text);

}  // namespace d4cs
