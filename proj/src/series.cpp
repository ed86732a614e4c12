#include "d4cs/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace d4cs {

TauSeries::TauSeries(int order) {
  if (order < 0) throw std::invalid_argument("series order must be nonnegative");
  c_.resize(order + 1);
}

TauSeries::TauSeries(int order, std::vector<ZPolynomial> coeffs) : TauSeries(order) {
  const int n = std::min<int>(order + 1, static_cast<int>(coeffs.size()));
  for (int k = 0; k < n; ++k) c_[k] = std::move(coeffs[k]);
}

bool TauSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const ZPolynomial& p) { return p.is_zero(); });
}

TauSeries& TauSeries::operator+=(const TauSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series orders differ");
  for (int k = 0; k <= order(); ++k) c_[k] += o.c_[k];
  return *this;
}

TauSeries& TauSeries::operator-=(const TauSeries& o) {
  if (o.order() != order()) throw std::invalid_argument("series orders differ");
  for (int k = 0; k <= order(); ++k) c_[k] -= o.c_[k];
  return *this;
}

TauSeries operator*(const TauSeries& a, const TauSeries& b) {
  const int n = std::min(a.order(), b.order());
  TauSeries r(n);
  for (int i = 0; i <= n; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.c_[j].is_zero()) continue;
      r.c_[i + j] += a.c_[i] * b.c_[j];
    }
  }
  return r;
}

TauSeries TauSeries::euler() const {
  TauSeries r(order());
  for (int k = 1; k <= order(); ++k) r.c_[k] = c_[k] * KappaRational(static_cast<long>(k));
  return r;
}

TauSeries series_div(const TauSeries& num, const TauSeries& den) {
  KappaRational lead;
  try {
    lead = den[0].as_constant();
  } catch (const std::invalid_argument&) {
    throw std::domain_error("series_div: constant coefficient of the divisor depends on z");
  }
  if (lead.is_zero()) throw std::domain_error("series_div: divisor is not invertible");
  const KappaRational inv = KappaRational(1) / lead;
  const int n = std::min(num.order(), den.order());
  TauSeries q(n);
  for (int k = 0; k <= n; ++k) {
    ZPolynomial acc = num[k];
    for (int j = 1; j <= k; ++j) {
      if (den[j].is_zero() || q[k - j].is_zero()) continue;
      acc -= den[j] * q[k - j];
    }
    q[k] = acc * inv;
  }
  return q;
}

}  // namespace d4cs
