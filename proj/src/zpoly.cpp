#include "d4cs/zpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace d4cs {

int rho_level(const Monomial& e) { return 3 * e[0] + 5 * e[1] + 3 * e[2] + 3 * e[3]; }

std::string monomial_to_string(const Monomial& e) {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < 4; ++j) {
    if (e[j] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << "z" << (j + 1);
    if (e[j] != 1) os << "^" << e[j];
  }
  return first ? "1" : os.str();
}

ZPolynomial::ZPolynomial(const KappaRational& c) {
  if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

ZPolynomial ZPolynomial::variable(int j) {
  if (j < 1 || j > 4) throw std::invalid_argument("variable index must be in 1..4");
  Monomial e{};
  e[j - 1] = 1;
  return monomial(e);
}

ZPolynomial ZPolynomial::monomial(const Monomial& e, const KappaRational& c) {
  for (int x : e) {
    if (x < 0) throw std::invalid_argument("negative exponent in " + monomial_to_string(e));
  }
  ZPolynomial p;
  if (!c.is_zero()) p.terms_.emplace(e, c);
  return p;
}

KappaRational ZPolynomial::coefficient(const Monomial& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? KappaRational() : it->second;
}

bool ZPolynomial::kappa_free() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second.is_constant(); });
}

KappaRational ZPolynomial::as_constant() const {
  if (terms_.empty()) return KappaRational();
  if (terms_.size() != 1 || terms_.begin()->first != Monomial{}) {
    throw std::invalid_argument("expression depends on z: " + to_string());
  }
  return terms_.begin()->second;
}

void ZPolynomial::add_term(const Monomial& e, const KappaRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

ZPolynomial ZPolynomial::operator-() const {
  ZPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

ZPolynomial& ZPolynomial::operator+=(const ZPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

ZPolynomial& ZPolynomial::operator-=(const ZPolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

ZPolynomial& ZPolynomial::operator*=(const KappaRational& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (s == KappaRational(1)) return *this;
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

ZPolynomial operator*(const ZPolynomial& a, const ZPolynomial& b) {
  ZPolynomial r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      Monomial e;
      for (int j = 0; j < 4; ++j) e[j] = ea[j] + eb[j];
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

ZPolynomial ZPolynomial::shifted(const Monomial& e) const {
  ZPolynomial r;
  for (const auto& [ea, c] : terms_) {
    Monomial s;
    for (int j = 0; j < 4; ++j) s[j] = ea[j] + e[j];
    r.terms_.emplace_hint(r.terms_.end(), s, c);
  }
  return r;
}

ZPolynomial ZPolynomial::derivative(int j) const {
  if (j < 1 || j > 4) throw std::invalid_argument("variable index must be in 1..4");
  const int k = j - 1;
  ZPolynomial r;
  for (const auto& [e, c] : terms_) {
    if (e[k] == 0) continue;
    Monomial d = e;
    d[k] -= 1;
    r.add_term(d, c * KappaRational(static_cast<long>(e[k])));
  }
  return r;
}

ZPolynomial ZPolynomial::substitute(const BigRational& k0) const {
  ZPolynomial r;
  for (const auto& [e, c] : terms_) r.add_term(e, KappaRational(c.substitute(k0)));
  return r;
}

std::complex<double> ZPolynomial::evaluate(const std::array<std::complex<double>, 4>& z,
                                           double k0) const {
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = c.evaluate(k0);
    for (int j = 0; j < 4; ++j) {
      for (int p = 0; p < e[j]; ++p) t *= z[j];
    }
    acc += t;
  }
  return acc;
}

ZPolynomial ZPolynomial::permute_variables(const std::array<int, 4>& perm) const {
  ZPolynomial r;
  for (const auto& [e, c] : terms_) {
    Monomial p{};
    for (int i = 0; i < 4; ++i) p[perm[i]] = e[i];
    r.terms_.emplace(p, c);
  }
  return r;
}

std::string ZPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const TermMap::value_type*> order;
  for (const auto& t : terms_) order.push_back(&t);
  std::stable_sort(order.begin(), order.end(), [](const auto* a, const auto* b) {
    int la = rho_level(a->first), lb = rho_level(b->first);
    if (la != lb) return la > lb;
    return a->first > b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto* t : order) {
    // Pull a constant negative numerator's sign out into the join.
    const bool neg = t->second.num().is_constant() && t->second.num().leading() < 0;
    const KappaRational a = neg ? -t->second : t->second;
    const bool unit = t->first == Monomial{};
    std::string body;
    if (a.is_constant()) {
      body = a.constant_value().get_str();
    } else if (a.is_polynomial()) {
      body = "(" + a.num().to_string() + ")/" + a.den().to_string();
      if (a.den() == KappaPoly(1)) body = "(" + a.num().to_string() + ")";
    } else if (a.num().is_constant()) {
      body = a.num().to_string() + "/(" + a.den().to_string() + ")";
    } else {
      body = "(" + a.num().to_string() + ")/(" + a.den().to_string() + ")";
    }
    if (!unit) body = (a == KappaRational(1)) ? monomial_to_string(t->first)
                                              : body + "*" + monomial_to_string(t->first);
    if (first) {
      os << (neg ? "-" : "") << body;
    } else {
      os << (neg ? " - " : " + ") << body;
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Expression parser

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : s_(text) {}

  ZPolynomial parse() {
    ZPolynomial v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected character");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw std::invalid_argument("parse error at offset " + std::to_string(pos_) + " (" + why +
                                ") in '" + s_ + "'");
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ZPolynomial expr() {
    ZPolynomial v = term();
    for (;;) {
      if (accept('+')) {
        v += term();
      } else if (accept('-')) {
        v -= term();
      } else {
        return v;
      }
    }
  }

  ZPolynomial term() {
    ZPolynomial v = unary();
    for (;;) {
      if (accept('*')) {
        v = v * unary();
      } else if (accept('/')) {
        KappaRational d = unary().as_constant();
        if (d.is_zero()) fail("division by zero");
        v *= KappaRational(1) / d;
      } else {
        return v;
      }
    }
  }

  ZPolynomial unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  ZPolynomial power() {
    ZPolynomial base = primary();
    if (!accept('^')) return base;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected exponent");
    int n = std::stoi(s_.substr(start, pos_ - start));
    ZPolynomial r(1);
    for (int i = 0; i < n; ++i) r = r * base;
    return r;
  }

  ZPolynomial primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      ZPolynomial v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return ZPolynomial(KappaRational(BigInt(s_.substr(start, pos_ - start))));
    }
    if (s_.compare(pos_, 5, "kappa") == 0) {
      pos_ += 5;
      return ZPolynomial(KappaRational::kappa());
    }
    if (c == 'k') {
      ++pos_;
      return ZPolynomial(KappaRational::kappa());
    }
    if (c == 'z' && pos_ + 1 < s_.size() && s_[pos_ + 1] >= '1' && s_[pos_ + 1] <= '4') {
      int j = s_[pos_ + 1] - '0';
      pos_ += 2;
      return ZPolynomial::variable(j);
    }
    fail("unexpected token");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

ZPolynomial parse_zpolynomial(const std::string& text) { return Parser(text).parse(); }

KappaRational parse_kappa_rational(const std::string& text) {
  return parse_zpolynomial(text).as_constant();
}

KappaPoly parse_kappa_poly(const std::string& text) {
  KappaRational r = parse_kappa_rational(text);
  if (!r.is_polynomial() || r.den() != KappaPoly(1)) {
    throw std::invalid_argument("not an integer kappa-polynomial: '" + text + "'");
  }
  return r.num();
}

}  // namespace d4cs
