#include "d4cs/operator.hpp"

#include <string>
#include <vector>

#include "d4cs/errors.hpp"

namespace d4cs {

namespace {

struct SecondOrderTerm {
  int j;
  int k;
  ZPolynomial coeff;
};

struct OperatorTable {
  std::vector<SecondOrderTerm> second;     // coefficient of d_j d_k (j <= k) in L/2
  std::array<ZPolynomial, 4> first;        // coefficient of d_j in L/2
};

const OperatorTable& table() {
  static const OperatorTable t = [] {
    OperatorTable out;
    auto add = [&](int j, int k, const char* c) {
      out.second.push_back({j, k, parse_zpolynomial(c)});
    };
    add(1, 1, "z1^2 - 2*z2 - 8");
    add(2, 2, "2*z2^2 - 4*(z1^2 + z3^2 + z4^2) - 2*z1*z3*z4 + 8*z2");
    add(3, 3, "z3^2 - 2*z2 - 8");
    add(4, 4, "z4^2 - 2*z2 - 8");
    add(1, 2, "2*z1*z2 - 6*z3*z4 - 8*z1");
    add(1, 3, "z1*z3 - 8*z4");
    add(1, 4, "z1*z4 - 8*z3");
    add(2, 3, "2*z2*z3 - 6*z1*z4 - 8*z3");
    add(2, 4, "2*z2*z4 - 6*z1*z3 - 8*z4");
    add(3, 4, "z3*z4 - 8*z1");
    out.first[0] = parse_zpolynomial("(6*k + 1)*z1");
    out.first[1] = parse_zpolynomial("2*(5*k + 1)*z2 + 8*(k - 1)");
    out.first[2] = parse_zpolynomial("(6*k + 1)*z3");
    out.first[3] = parse_zpolynomial("(6*k + 1)*z4");
    return out;
  }();
  return t;
}

std::array<WeightVector, kLoweringCount> lowering_weights() {
  std::array<WeightVector, kLoweringCount> w;
  for (std::size_t i = 0; i < kLoweringCount; ++i) w[i] = root_to_weight(lowering_shifts()[i]);
  return w;
}

}  // namespace

std::array<long, 2> epsilon_coefficients(const Monomial& e) {
  const long m1 = e[0], m2 = e[1], m3 = e[2], m4 = e[3];
  const long c0 = 2 * (m1 * m1 + m3 * m3 + m4 * m4) + 4 * m2 * m2 +
                  2 * (m1 * m3 + m1 * m4 + m3 * m4) + 4 * m2 * (m1 + m3 + m4);
  const long c1 = 12 * (m1 + m3 + m4) + 20 * m2;
  return {c0, c1};
}

KappaRational epsilon(const WeightVector& m) {
  if (!m.dominant()) throw NotDominant("epsilon: " + m.to_string() + " is not dominant");
  auto [c0, c1] = epsilon_coefficients(m.coords);
  return KappaRational(KappaPoly::linear(c0, c1));
}

ZPolynomial apply_L(const ZPolynomial& p) {
  const OperatorTable& t = table();
  std::array<ZPolynomial, 4> d1;
  for (int j = 1; j <= 4; ++j) d1[j - 1] = p.derivative(j);
  ZPolynomial half;
  for (const auto& term : t.second) {
    ZPolynomial djk = d1[term.j - 1].derivative(term.k);
    if (djk.is_zero()) continue;
    half += term.coeff * djk;
  }
  for (int j = 0; j < 4; ++j) {
    if (d1[j].is_zero()) continue;
    half += t.first[j] * d1[j];
  }
  return half * KappaRational(2);
}

ZPolynomial apply_L_at(const ZPolynomial& p, const BigRational& k0) {
  return apply_L(p).substitute(k0);
}

const std::array<RootVector, kLoweringCount>& lowering_shifts() {
  static const std::array<RootVector, kLoweringCount> shifts = {{
      {{1, 0, 0, 0}}, {{0, 1, 0, 0}}, {{0, 0, 1, 0}}, {{0, 0, 0, 1}},  // alpha_i
      {{1, 1, 0, 0}}, {{0, 1, 1, 0}}, {{0, 1, 0, 1}},                  // alpha_2 + alpha_j
      {{1, 1, 1, 0}}, {{1, 1, 0, 1}}, {{0, 1, 1, 1}},                  // alpha_2 + alpha_i + alpha_j
      {{1, 2, 1, 0}}, {{1, 2, 0, 1}}, {{0, 2, 1, 1}},                  // 2 alpha_2 + alpha_i + alpha_j
      {{1, 2, 1, 1}},                                                  // highest root
      {{2, 2, 1, 1}}, {{1, 2, 2, 1}}, {{1, 2, 1, 2}},                  // highest root + alpha_j
  }};
  return shifts;
}

KappaRational lowering_coefficient(std::size_t i, const Monomial& e) {
  static constexpr int kOuter[3] = {0, 2, 3};                       // I = {1,3,4}
  static constexpr int kPairs[3][2] = {{0, 2}, {0, 3}, {2, 3}};     // T = {13,14,34}
  auto a = [&](int idx) { return 4L * e[idx] * (e[idx] - 1); };
  if (i < 4) return KappaRational(a(static_cast<int>(i)));
  if (i < 7) return KappaRational(12L * e[1] * e[kOuter[i - 4]]);
  if (i < 10) return KappaRational(16L * e[kPairs[i - 7][0]] * e[kPairs[i - 7][1]]);
  if (i < 13) return KappaRational(2 * a(1));
  if (i == 13) {
    // 16 m2 (2 - m2 - kappa + m1 + m3 + m4)
    const long m2 = e[1];
    const long rest = 2 - m2 + e[0] + e[2] + e[3];
    return KappaRational(KappaPoly::linear(16 * m2 * rest, -16 * m2));
  }
  if (i < kLoweringCount) return KappaRational(4 * a(kOuter[i - 14]));
  throw std::out_of_range("lowering index");
}

ZPolynomial apply_L_monomial(const Monomial& e) {
  static const std::array<WeightVector, kLoweringCount> weights = lowering_weights();
  auto [c0, c1] = epsilon_coefficients(e);
  ZPolynomial out = ZPolynomial::monomial(e, KappaRational(KappaPoly::linear(c0, c1)));
  for (std::size_t i = 0; i < kLoweringCount; ++i) {
    KappaRational c = lowering_coefficient(i, e);
    if (c.is_zero()) continue;
    Monomial lower;
    for (int j = 0; j < 4; ++j) lower[j] = e[j] - weights[i][j];
    for (int x : lower) {
      if (x < 0) {
        throw InternalInconsistency("lowering term " + std::to_string(i) + " of " +
                                    monomial_to_string(e) + " leaves the monomial cone");
      }
    }
    out.add_term(lower, -c);
  }
  return out;
}

ZPolynomial commutator_with(int v, const ZPolynomial& p) {
  const ZPolynomial zv = ZPolynomial::variable(v);
  return apply_L(zv * p) - zv * apply_L(p);
}

}  // namespace d4cs
