#include "d4cs/kappa.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "d4cs/errors.hpp"

namespace d4cs {

namespace {

// Coprimality filter: a gcd of degree 0 modulo a prime that does not divide
// either leading coefficient proves the integer gcd has degree 0 as well.
constexpr std::uint64_t kPrime = 2305843009213693951ULL;  // 2^61 - 1

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b) { return static_cast<u64>((static_cast<u128>(a) * b) % kPrime); }

u64 powmod(u64 a, u64 e) {
  u64 r = 1;
  while (e) {
    if (e & 1) r = mulmod(r, a);
    a = mulmod(a, a);
    e >>= 1;
  }
  return r;
}

u64 invmod(u64 a) { return powmod(a, kPrime - 2); }

std::vector<u64> reduce_mod(const KappaPoly& p) {
  std::vector<u64> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), c.get_mpz_t(), kPrime);
    out.push_back(r.get_ui());
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

int modular_gcd_degree(std::vector<u64> a, std::vector<u64> b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    const u64 inv = invmod(b.back());
    while (a.size() >= b.size()) {
      const u64 factor = mulmod(a.back(), inv);
      const std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i) {
        a[shift + i] = (a[shift + i] + kPrime - mulmod(factor, b[i])) % kPrime;
      }
      while (!a.empty() && a.back() == 0) a.pop_back();
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// lc(b)^k * a mod b, up to a constant factor.
KappaPoly pseudo_remainder(KappaPoly a, const KappaPoly& b) {
  const BigInt& lb = b.leading();
  std::vector<BigInt> r = a.coeffs();
  const auto& bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  while (!r.empty() && r.size() - 1 >= db) {
    BigInt lr = r.back();
    BigInt g = gcd(lr, lb);
    BigInt fa = lb / g;
    BigInt fb = lr / g;
    const std::size_t shift = r.size() - 1 - db;
    for (auto& x : r) x *= fa;
    for (std::size_t i = 0; i <= db; ++i) r[shift + i] -= fb * bc[i];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  return KappaPoly(std::move(r));
}

KappaPoly normalized_primitive(const KappaPoly& p) {
  KappaPoly q = p.primitive_part();
  if (!q.is_zero() && q.leading() < 0) q = -q;
  return q;
}

}  // namespace

KappaPoly::KappaPoly(long c) {
  if (c != 0) c_.emplace_back(c);
}

KappaPoly::KappaPoly(BigInt c) {
  if (c != 0) c_.push_back(std::move(c));
}

KappaPoly::KappaPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void KappaPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt KappaPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
  return c_[i];
}

BigInt KappaPoly::content() const {
  BigInt g = 0;
  for (const auto& c : c_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

KappaPoly KappaPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt g = content();
  return g == 1 ? *this : divexact(g);
}

KappaPoly KappaPoly::operator-() const {
  KappaPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

KappaPoly& KappaPoly::operator+=(const KappaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

KappaPoly& KappaPoly::operator-=(const KappaPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

KappaPoly& KappaPoly::operator*=(const BigInt& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

KappaPoly operator*(const KappaPoly& a, const KappaPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.c_.size() == 1) {
    KappaPoly r = b;
    return r *= a.c_[0];
  }
  if (b.c_.size() == 1) {
    KappaPoly r = a;
    return r *= b.c_[0];
  }
  std::vector<BigInt> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
  }
  return KappaPoly(std::move(out));
}

KappaPoly KappaPoly::divexact(const BigInt& s) const {
  KappaPoly r = *this;
  for (auto& c : r.c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), s.get_mpz_t());
  return r;
}

KappaPoly KappaPoly::divexact(const KappaPoly& d) const {
  if (d.is_zero()) throw std::domain_error("KappaPoly: division by zero polynomial");
  if (d.c_.size() == 1) return divexact(d.c_[0]);
  std::vector<BigInt> r = c_;
  if (r.size() < d.c_.size()) {
    if (r.empty()) return {};
    throw InternalInconsistency("KappaPoly::divexact: divisor does not divide");
  }
  std::vector<BigInt> q(r.size() - d.c_.size() + 1);
  const std::size_t dd = d.c_.size() - 1;
  for (std::size_t k = q.size(); k-- > 0;) {
    BigInt& top = r[k + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), d.c_.back().get_mpz_t())) {
      throw InternalInconsistency("KappaPoly::divexact: inexact leading division");
    }
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), d.c_.back().get_mpz_t());
    for (std::size_t i = 0; i <= dd; ++i) {
      mpz_submul(r[k + i].get_mpz_t(), q[k].get_mpz_t(), d.c_[i].get_mpz_t());
    }
  }
  for (std::size_t i = 0; i < dd; ++i) {
    if (r[i] != 0) throw InternalInconsistency("KappaPoly::divexact: nonzero remainder");
  }
  return KappaPoly(std::move(q));
}

BigRational KappaPoly::evaluate(const BigRational& x) const {
  BigRational acc = 0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

double KappaPoly::evaluate(double x) const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].get_d();
  return acc;
}

std::string KappaPoly::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const BigInt& c = c_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (c < 0) {
      os << "-";
    } else if (!first) {
      os << "+";
    }
    first = false;
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str() << "*";
    os << "k";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

KappaPoly primitive_gcd(const KappaPoly& a, const KappaPoly& b) {
  if (a.is_zero()) return normalized_primitive(b);
  if (b.is_zero()) return normalized_primitive(a);
  if (a.is_constant() || b.is_constant()) return KappaPoly(1);

  // Linear operand: test its root directly.
  for (const KappaPoly* lin : {&a, &b}) {
    if (lin->degree() != 1) continue;
    const KappaPoly& other = (lin == &a) ? b : a;
    BigRational root(-lin->coeff(0), lin->coeff(1));
    root.canonicalize();
    return other.evaluate(root) == 0 ? normalized_primitive(*lin) : KappaPoly(1);
  }

  {
    auto am = reduce_mod(a);
    auto bm = reduce_mod(b);
    if (am.size() == a.coeffs().size() && bm.size() == b.coeffs().size() &&
        modular_gcd_degree(std::move(am), std::move(bm)) == 0) {
      return KappaPoly(1);
    }
  }

  KappaPoly x = a.primitive_part();
  KappaPoly y = b.primitive_part();
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    KappaPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = r.primitive_part();
  }
  return normalized_primitive(x);
}

KappaRational::KappaRational(const BigRational& c) : num_(c.get_num()), den_(c.get_den()) {}

KappaRational KappaRational::make(KappaPoly num, KappaPoly den) {
  if (den.is_zero()) throw std::domain_error("KappaRational: zero denominator");
  if (num.is_zero()) return KappaRational();
  KappaPoly g = primitive_gcd(num, den);
  if (g.degree() > 0) {
    num = num.divexact(g);
    den = den.divexact(g);
  }
  KappaRational r(std::move(num), std::move(den), true);
  r.normalize_content();
  return r;
}

void KappaRational::normalize_content() {
  if (num_.is_zero()) {
    den_ = KappaPoly(1);
    return;
  }
  BigInt g = gcd(num_.content(), den_.content());
  if (g != 1) {
    num_ = num_.divexact(g);
    den_ = den_.divexact(g);
  }
  if (den_.leading() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

BigRational KappaRational::constant_value() const {
  if (!is_constant()) throw std::logic_error("KappaRational " + to_string() + " depends on kappa");
  BigRational q(num_.coeff(0), den_.coeff(0));
  q.canonicalize();
  return q;
}

KappaRational KappaRational::operator-() const { return KappaRational(-num_, den_, true); }

KappaRational& KappaRational::operator+=(const KappaRational& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    KappaPoly t = num_ + o.num_;
    return *this = make(std::move(t), den_);
  }
  KappaPoly g = primitive_gcd(den_, o.den_);
  if (g.degree() <= 0) {
    KappaPoly n = num_ * o.den_ + o.num_ * den_;
    KappaPoly d = den_ * o.den_;
    *this = KappaRational(std::move(n), std::move(d), true);
    normalize_content();
    return *this;
  }
  KappaPoly b1 = den_.divexact(g);
  KappaPoly d1 = o.den_.divexact(g);
  KappaPoly t = num_ * d1 + o.num_ * b1;
  if (t.is_zero()) return *this = KappaRational();
  KappaPoly h = primitive_gcd(t, g);
  KappaPoly n = h.degree() > 0 ? t.divexact(h) : t;
  KappaPoly gh = h.degree() > 0 ? g.divexact(h) : g;
  *this = KappaRational(std::move(n), b1 * d1 * gh, true);
  normalize_content();
  return *this;
}

KappaRational& KappaRational::operator-=(const KappaRational& o) { return *this += -o; }

KappaRational& KappaRational::operator*=(const KappaRational& o) {
  if (is_zero() || o.is_zero()) return *this = KappaRational();
  KappaPoly g1 = primitive_gcd(num_, o.den_);
  KappaPoly g2 = primitive_gcd(o.num_, den_);
  KappaPoly n1 = g1.degree() > 0 ? num_.divexact(g1) : num_;
  KappaPoly d2 = g1.degree() > 0 ? o.den_.divexact(g1) : o.den_;
  KappaPoly n2 = g2.degree() > 0 ? o.num_.divexact(g2) : o.num_;
  KappaPoly d1 = g2.degree() > 0 ? den_.divexact(g2) : den_;
  *this = KappaRational(n1 * n2, d1 * d2, true);
  normalize_content();
  return *this;
}

KappaRational& KappaRational::operator/=(const KappaRational& o) {
  if (o.is_zero()) throw std::domain_error("KappaRational: division by zero");
  KappaRational inv(o.den_, o.num_, true);
  inv.normalize_content();
  return *this *= inv;
}

BigRational KappaRational::substitute(const BigRational& k0) const {
  BigRational d = den_.evaluate(k0);
  if (d == 0) {
    throw PoleAtKappa("pole of " + to_string() + " at kappa=" + d4cs::to_string(k0),
                      d4cs::to_string(k0));
  }
  BigRational r = num_.evaluate(k0) / d;
  r.canonicalize();
  return r;
}

double KappaRational::evaluate(double k0) const {
  double d = den_.evaluate(k0);
  if (d == 0.0) {
    throw PoleAtKappa("pole of " + to_string() + " at kappa=" + std::to_string(k0),
                      std::to_string(k0));
  }
  return num_.evaluate(k0) / d;
}

std::string KappaRational::to_string() const {
  if (den_ == KappaPoly(1)) return num_.to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string to_string(const BigRational& q) { return q.get_str(); }

}  // namespace d4cs
