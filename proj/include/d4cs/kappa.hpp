#pragma once

// Exact univariate arithmetic in the coupling kappa.
//
// KappaPoly is a dense integer-coefficient polynomial; KappaRational is a
// reduced quotient of two of them, kept in a canonical form so that equal
// rational functions compare equal member by member.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace d4cs {

using BigInt = mpz_class;
using BigRational = mpq_class;

class KappaPoly {
 public:
  KappaPoly() = default;
  KappaPoly(long c);  // NOLINT(google-explicit-constructor)
  explicit KappaPoly(BigInt c);
  /// Coefficients in ascending order of degree.
  explicit KappaPoly(std::vector<BigInt> coeffs);

  static KappaPoly kappa() { return KappaPoly(std::vector<BigInt>{0, 1}); }
  /// c0 + c1 * kappa
  static KappaPoly linear(long c0, long c1) { return KappaPoly(std::vector<BigInt>{c0, c1}); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<BigInt>& coeffs() const { return c_; }
  BigInt coeff(int i) const;
  const BigInt& leading() const { return c_.back(); }

  /// gcd of the coefficients, nonnegative.
  BigInt content() const;
  KappaPoly primitive_part() const;

  KappaPoly operator-() const;
  KappaPoly& operator+=(const KappaPoly& o);
  KappaPoly& operator-=(const KappaPoly& o);
  KappaPoly& operator*=(const BigInt& s);
  friend KappaPoly operator+(KappaPoly a, const KappaPoly& b) { return a += b; }
  friend KappaPoly operator-(KappaPoly a, const KappaPoly& b) { return a -= b; }
  friend KappaPoly operator*(const KappaPoly& a, const KappaPoly& b);
  friend bool operator==(const KappaPoly&, const KappaPoly&) = default;

  /// Divides every coefficient by `s`, which must divide them all.
  KappaPoly divexact(const BigInt& s) const;
  /// Exact quotient by a polynomial known to divide this one in Z[kappa].
  KappaPoly divexact(const KappaPoly& d) const;

  BigRational evaluate(const BigRational& x) const;
  double evaluate(double x) const;

  /// Renders e.g. "4*k^2-3*k+1"; the zero polynomial renders as "0".
  std::string to_string() const;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/// Primitive gcd in Z[kappa] with positive leading coefficient (1 when the
/// polynomials are coprime over Q). gcd(0, 0) is 0.
KappaPoly primitive_gcd(const KappaPoly& a, const KappaPoly& b);

class KappaRational {
 public:
  KappaRational() : den_(1) {}
  KappaRational(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  explicit KappaRational(const BigInt& c) : num_(c), den_(1) {}
  explicit KappaRational(const BigRational& c);
  explicit KappaRational(KappaPoly p) : num_(std::move(p)), den_(1) {}

  /// Reduces num/den to canonical form. Throws std::domain_error when `den`
  /// is the zero polynomial.
  static KappaRational make(KappaPoly num, KappaPoly den);
  static KappaRational kappa() { return KappaRational(KappaPoly::kappa()); }

  const KappaPoly& num() const { return num_; }
  const KappaPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool is_polynomial() const { return den_.is_constant(); }
  /// Value of a kappa-free element; throws std::logic_error otherwise.
  BigRational constant_value() const;

  KappaRational operator-() const;
  KappaRational& operator+=(const KappaRational& o);
  KappaRational& operator-=(const KappaRational& o);
  KappaRational& operator*=(const KappaRational& o);
  KappaRational& operator/=(const KappaRational& o);
  friend KappaRational operator+(KappaRational a, const KappaRational& b) { return a += b; }
  friend KappaRational operator-(KappaRational a, const KappaRational& b) { return a -= b; }
  friend KappaRational operator*(KappaRational a, const KappaRational& b) { return a *= b; }
  friend KappaRational operator/(KappaRational a, const KappaRational& b) { return a /= b; }
  friend bool operator==(const KappaRational&, const KappaRational&) = default;

  /// Exact value at kappa = k0. Throws PoleAtKappa if the reduced
  /// denominator vanishes there.
  BigRational substitute(const BigRational& k0) const;
  /// Floating-point value; throws PoleAtKappa at an exact zero of the
  /// denominator.
  double evaluate(double k0) const;

  /// "num" when the denominator is 1, otherwise "(num)/(den)".
  std::string to_string() const;

 private:
  KappaRational(KappaPoly num, KappaPoly den, bool /*already canonical*/)
      : num_(std::move(num)), den_(std::move(den)) {}
  void normalize_content();

  KappaPoly num_;
  KappaPoly den_;
};

std::string to_string(const BigRational& q);

}  // namespace d4cs
