#pragma once

// Truncated power series in an auxiliary variable t with ZPolynomial
// coefficients.

#include <vector>

#include "d4cs/zpoly.hpp"

namespace d4cs {

class TauSeries {
 public:
  /// The zero series truncated at t^order.
  explicit TauSeries(int order);
  /// Coefficients of t^0..t^k; padded with zeros or truncated to `order`.
  TauSeries(int order, std::vector<ZPolynomial> coeffs);

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const ZPolynomial& operator[](int k) const { return c_.at(k); }
  ZPolynomial& operator[](int k) { return c_.at(k); }
  const std::vector<ZPolynomial>& coeffs() const { return c_; }
  bool is_zero() const;

  TauSeries& operator+=(const TauSeries& o);
  TauSeries& operator-=(const TauSeries& o);
  friend TauSeries operator+(TauSeries a, const TauSeries& b) { return a += b; }
  friend TauSeries operator-(TauSeries a, const TauSeries& b) { return a -= b; }
  /// Product truncated at the smaller of the two orders.
  friend TauSeries operator*(const TauSeries& a, const TauSeries& b);
  friend bool operator==(const TauSeries&, const TauSeries&) = default;

  /// t d/dt: multiplies the coefficient of t^k by k.
  TauSeries euler() const;

  /// Applies `f` to every coefficient.
  template <typename F>
  TauSeries map(F&& f) const {
    TauSeries r(order());
    for (int k = 0; k <= order(); ++k) r.c_[k] = f(c_[k]);
    return r;
  }

 private:
  std::vector<ZPolynomial> c_;
};

/// q with q * den = num through t^order, order = min of the two orders.
/// Throws std::domain_error unless den's t^0 coefficient is a nonzero
/// constant.
TauSeries series_div(const TauSeries& num, const TauSeries& den);

}  // namespace d4cs
