#include "d4cs/solver.hpp"

#include <algorithm>

#include "d4cs/errors.hpp"
#include "d4cs/operator.hpp"

namespace d4cs {

namespace {

bool height_less(const RootVector& a, const RootVector& b) {
  if (a.height() != b.height()) return a.height() < b.height();
  return a.coords < b.coords;
}

}  // namespace

SupportCone support_cone(const WeightVector& m) {
  if (!m.dominant()) throw NotDominant("support_cone: " + m.to_string() + " is not dominant");
  // (m - mu, rho) >= 0 for dominant m - mu, and (mu, rho) = height(mu), so
  // the height is bounded by (m, rho). Each root coordinate is bounded the
  // same way since A^{-1} has nonnegative entries.
  const RootVector bound_root = [&] {
    const auto& inv = d4().inverse_cartan;
    RootVector b;
    for (int i = 0; i < 4; ++i) {
      mpq_class s = 0;
      for (int j = 0; j < 4; ++j) s += inv[i][j] * m[j];
      b[i] = static_cast<int>(mpz_class(s.get_num() / s.get_den()).get_si());
    }
    return b;
  }();
  const int max_height = 3 * m[0] + 5 * m[1] + 3 * m[2] + 3 * m[3];

  SupportCone cone;
  cone.m = m;
  RootVector mu;
  for (mu[0] = 0; mu[0] <= bound_root[0]; ++mu[0]) {
    for (mu[1] = 0; mu[1] <= bound_root[1]; ++mu[1]) {
      for (mu[2] = 0; mu[2] <= bound_root[2]; ++mu[2]) {
        for (mu[3] = 0; mu[3] <= bound_root[3]; ++mu[3]) {
          if (mu.height() > max_height) break;
          WeightVector w = root_to_weight(mu);
          WeightVector e = m - w;
          if (!e.dominant()) continue;
          cone.elements.push_back({mu, w, e.coords});
        }
      }
    }
  }
  std::sort(cone.elements.begin(), cone.elements.end(),
            [](const ConeElement& a, const ConeElement& b) { return height_less(a.mu, b.mu); });
  return cone;
}

KappaRational CSPolynomial::coefficient(const RootVector& mu) const {
  auto it = std::lower_bound(
      coefficients.begin(), coefficients.end(), mu,
      [](const auto& entry, const RootVector& key) { return height_less(entry.first, key); });
  if (it != coefficients.end() && it->first == mu) return it->second;
  return KappaRational();
}

CSPolynomial solve(const WeightVector& m) {
  SupportCone cone = support_cone(m);
  const auto [eps0, eps1] = epsilon_coefficients(m.coords);
  const auto& shifts = lowering_shifts();

  std::map<RootVector, std::size_t> index;
  for (std::size_t i = 0; i < cone.elements.size(); ++i) index.emplace(cone.elements[i].mu, i);

  std::vector<KappaRational> c(cone.elements.size());
  std::vector<bool> done(cone.elements.size(), false);
  c[0] = KappaRational(1);
  done[0] = true;

  for (std::size_t i = 1; i < cone.elements.size(); ++i) {
    const ConeElement& el = cone.elements[i];
    KappaRational numer;
    for (std::size_t s = 0; s < kLoweringCount; ++s) {
      RootVector nu = el.mu - shifts[s];
      if (!nu.nonnegative()) continue;
      auto it = index.find(nu);
      if (it == index.end()) continue;
      if (!done[it->second]) {
        throw InternalInconsistency("coefficient at mu=" + nu.to_string() +
                                    " referenced before it was computed");
      }
      if (c[it->second].is_zero()) continue;
      // Exponent of the term that lowers onto z^{m - mu}.
      const Monomial& upper = cone.elements[it->second].exponent;
      KappaRational coef = lowering_coefficient(s, upper);
      if (coef.is_zero()) continue;
      numer += coef * c[it->second];
    }
    if (!numer.is_zero()) {
      const auto [e0, e1] = epsilon_coefficients(el.exponent);
      KappaPoly diff = KappaPoly::linear(e0 - eps0, e1 - eps1);
      if (diff.is_zero()) throw InternalInconsistency("vanishing eigenvalue difference");
      c[i] = numer / KappaRational(diff);
    }
    done[i] = true;
  }

  CSPolynomial out;
  out.m = m;
  out.eigenvalue = KappaRational(KappaPoly::linear(eps0, eps1));
  out.coefficients.reserve(cone.elements.size());
  for (std::size_t i = 0; i < cone.elements.size(); ++i) {
    out.polynomial.add_term(cone.elements[i].exponent, c[i]);
    out.coefficients.emplace_back(cone.elements[i].mu, std::move(c[i]));
  }
  return out;
}

CSPolynomial from_polynomial(const WeightVector& m, const ZPolynomial& p) {
  SupportCone cone = support_cone(m);
  CSPolynomial out;
  out.m = m;
  out.eigenvalue = epsilon(m);
  std::size_t matched = 0;
  for (const auto& el : cone.elements) {
    KappaRational c = p.coefficient(el.exponent);
    if (!c.is_zero()) ++matched;
    out.coefficients.emplace_back(el.mu, c);
  }
  if (matched != p.size()) {
    throw std::invalid_argument("polynomial has terms outside the support cone of " +
                                m.to_string());
  }
  out.polynomial = p;
  return out;
}

ZPolynomial specialize(const CSPolynomial& p, const BigRational& k0) {
  ZPolynomial out;
  for (const auto& [mu, c] : p.coefficients) {
    if (c.is_zero()) continue;
    try {
      out.add_term((p.m - root_to_weight(mu)).coords, KappaRational(c.substitute(k0)));
    } catch (const PoleAtKappa& e) {
      throw PoleAtKappa("c_mu for mu=" + mu.to_string() + " of P_" + p.m.to_string() +
                            " has a pole at kappa=" + e.kappa(),
                        e.kappa(), mu.coords);
    }
  }
  return out;
}

bool verify_eigen(const CSPolynomial& p) {
  ZPolynomial residual = apply_L(p.polynomial) - p.polynomial * p.eigenvalue;
  return residual.is_zero();
}

std::shared_ptr<const CSPolynomial> PolynomialCache::get(const WeightVector& m) {
  {
    std::lock_guard lock(mu_);
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
  }
  auto solved = std::make_shared<const CSPolynomial>(solve(m));
  std::lock_guard lock(mu_);
  return cache_.emplace(m, std::move(solved)).first->second;
}

std::size_t PolynomialCache::size() const {
  std::lock_guard lock(mu_);
  return cache_.size();
}

}  // namespace d4cs
