#include "d4cs/serialize.hpp"

#include <stdexcept>

namespace d4cs {

namespace {

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw std::invalid_argument(std::string("missing JSON field '") + key + "'");
  }
  return j.at(key);
}

std::array<int, 4> quad_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("expected an array of 4 integers");
  std::array<int, 4> out{};
  for (int i = 0; i < 4; ++i) out[i] = j.at(i).get<int>();
  return out;
}

void put_kappa(Json& j, const KappaRational& c) {
  j["num"] = c.num().to_string();
  j["den"] = c.den().to_string();
}

}  // namespace

Json kappa_to_json(const KappaRational& c) {
  Json j = Json::object();
  put_kappa(j, c);
  return j;
}

KappaRational kappa_from_json(const Json& j) {
  KappaPoly num = parse_kappa_poly(field(j, "num").get<std::string>());
  KappaPoly den = parse_kappa_poly(field(j, "den").get<std::string>());
  return KappaRational::make(std::move(num), std::move(den));
}

Json weight_to_json(const WeightVector& w) { return Json(w.coords); }

WeightVector weight_from_json(const Json& j) { return WeightVector{quad_from_json(j)}; }

Json zpolynomial_to_json(const ZPolynomial& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json t = {{"exponents", e}};
    put_kappa(t, c);
    terms.push_back(std::move(t));
  }
  return Json{{"terms", std::move(terms)}};
}

ZPolynomial zpolynomial_from_json(const Json& j) {
  ZPolynomial p;
  for (const auto& t : field(j, "terms")) {
    Monomial e = quad_from_json(field(t, "exponents"));
    for (int x : e) {
      if (x < 0) throw std::invalid_argument("negative exponent in polynomial JSON");
    }
    p.add_term(e, kappa_from_json(t));
  }
  return p;
}

Json cspolynomial_to_json(const CSPolynomial& p) {
  Json coeffs = Json::array();
  for (const auto& [mu, c] : p.coefficients) {
    if (c.is_zero()) continue;
    Json t = {{"mu", mu.coords}};
    put_kappa(t, c);
    coeffs.push_back(std::move(t));
  }
  return Json{{"m", weight_to_json(p.m)},
              {"epsilon", kappa_to_json(p.eigenvalue)},
              {"coeffs", std::move(coeffs)}};
}

CSPolynomial cspolynomial_from_json(const Json& j) {
  WeightVector m = weight_from_json(field(j, "m"));
  ZPolynomial poly;
  for (const auto& t : field(j, "coeffs")) {
    RootVector mu{quad_from_json(field(t, "mu"))};
    WeightVector e = m - root_to_weight(mu);
    if (!e.dominant()) throw std::invalid_argument("mu " + mu.to_string() + " outside the cone");
    poly.add_term(e.coords, kappa_from_json(t));
  }
  CSPolynomial out = from_polynomial(m, poly);
  if (j.contains("epsilon") && kappa_from_json(j.at("epsilon")) != out.eigenvalue) {
    throw std::invalid_argument("stored eigenvalue disagrees with epsilon(m)");
  }
  return out;
}

Json expansion_to_json(const RecurrenceExpansion& x) {
  Json terms = Json::array();
  for (const auto& [mp, c] : x.terms) {
    Json t = {{"mp", mp.coords}};
    put_kappa(t, c);
    terms.push_back(std::move(t));
  }
  return Json{{"v", x.variable}, {"m", weight_to_json(x.m)}, {"terms", std::move(terms)}};
}

}  // namespace d4cs
