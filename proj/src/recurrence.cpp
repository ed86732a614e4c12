#include "d4cs/recurrence.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>
#include <stdexcept>

#include "d4cs/errors.hpp"
#include "d4cs/operator.hpp"

namespace d4cs {

namespace {

WeightVector W(int a, int b, int c, int d) { return WeightVector{{a, b, c, d}}; }

WeightVector unit(int v) {
  WeightVector w;
  w[v - 1] = 1;
  return w;
}

WeightVector scaled(int v, int k) {
  WeightVector w;
  w[v - 1] = k;
  return w;
}

std::vector<WeightVector> with_negatives(std::initializer_list<WeightVector> ws) {
  std::vector<WeightVector> out;
  for (const auto& w : ws) {
    out.push_back(w);
    out.push_back(-w);
  }
  return out;
}

// m0 + m1 * kappa
KappaRational lin(long c0, long c1) { return KappaRational(KappaPoly::linear(c0, c1)); }

KappaRational ratio(std::initializer_list<KappaRational> num,
                    std::initializer_list<KappaRational> den) {
  KappaRational n(1), d(1);
  for (const auto& x : num) n *= x;
  if (n.is_zero()) return n;
  for (const auto& x : den) d *= x;
  return n / d;
}

// The two members of I = {1,3,4} other than v.
std::pair<int, int> others(int v) {
  switch (v) {
    case 1: return {3, 4};
    case 3: return {1, 4};
    case 4: return {1, 3};
    default: throw std::invalid_argument("others(): v must be 1, 3 or 4");
  }
}

struct Relation {
  std::string family;
  std::string relation;
  int v;
  WeightVector base;
  std::vector<std::pair<WeightVector, KappaRational>> expected;
};

std::string format_relation(int v, const WeightVector& m) {
  return "z" + std::to_string(v) + "*P" + m.to_string();
}

std::vector<Relation> printed_relations(int m) {
  std::vector<Relation> rel;
  const KappaRational one(1);
  // z_v P_{m e_v} = P_{(m+1)e_v} + a_m P_{(m-1)e_v} + c_m P_{(m-1)e_v + e2}
  for (int v : {1, 3, 4}) {
    rel.push_back({"a/c", "", v, scaled(v, m),
                   {{scaled(v, m + 1), one},
                    {scaled(v, m - 1), closed_form(ClosedForm::a, m)},
                    {scaled(v, m - 1) + unit(2), closed_form(ClosedForm::c, m)}}});
  }
  // z_v P_{m e_u} = P_{m e_u + e_v} + b_m P_{(m-1) e_u + e_w}
  for (int v : {1, 3, 4}) {
    auto [u1, u2] = others(v);
    for (int u : {u1, u2}) {
      const int w = (u == u1) ? u2 : u1;
      rel.push_back({"b", "", v, scaled(u, m),
                     {{scaled(u, m) + unit(v), one},
                      {scaled(u, m - 1) + unit(w), closed_form(ClosedForm::b, m)}}});
    }
  }
  // z_v P_{m e2} = P_{e_v + m e2} + d_m P_{e_v + (m-1) e2} + e_m P_{(m-1) e2 + e_u + e_w}
  for (int v : {1, 3, 4}) {
    auto [u, w] = others(v);
    rel.push_back({"d/e", "", v, scaled(2, m),
                   {{unit(v) + scaled(2, m), one},
                    {unit(v) + scaled(2, m - 1), closed_form(ClosedForm::d, m)},
                    {scaled(2, m - 1) + unit(u) + unit(w), closed_form(ClosedForm::e, m)}}});
  }
  // z2 P_{m e_v} = P_{m e_v + e2} + f_m P_{(m-2) e_v + e2} + g_m P_{(m-1) e_v + e_u + e_w}
  //              + h_m P_{m e_v}
  for (int v : {1, 3, 4}) {
    auto [u, w] = others(v);
    rel.push_back({"f/g/h", "", 2, scaled(v, m),
                   {{scaled(v, m) + unit(2), one},
                    {scaled(v, m - 2) + unit(2), closed_form(ClosedForm::f, m)},
                    {scaled(v, m - 1) + unit(u) + unit(w), closed_form(ClosedForm::g, m)},
                    {scaled(v, m), closed_form(ClosedForm::h, m)}}});
  }
  {
    const KappaRational r = closed_form(ClosedForm::r, m);
    rel.push_back({"k..s", "", 2, scaled(2, m),
                   {{scaled(2, m + 1), one},
                    {scaled(2, m - 1), closed_form(ClosedForm::k, m)},
                    {W(1, m - 1, 1, 1), closed_form(ClosedForm::p, m)},
                    {W(1, m - 2, 1, 1), closed_form(ClosedForm::q, m)},
                    {W(2, m - 1, 0, 0), r},
                    {W(0, m - 1, 2, 0), r},
                    {W(0, m - 1, 0, 2), r},
                    {scaled(2, m), closed_form(ClosedForm::s, m)}}});
  }
  for (auto& r : rel) r.relation = format_relation(r.v, r.base);
  return rel;
}

RelationCheck check_relation(const Relation& rel, int m, PolynomialCache& cache) {
  RelationCheck out{rel.family, rel.relation, m, true, {}};
  std::map<WeightVector, KappaRational> expected;
  for (const auto& [mp, c] : rel.expected) {
    if (!mp.dominant() || c.is_zero()) continue;
    expected[mp] += c;
  }
  RecurrenceExpansion x;
  try {
    x = expand_product(rel.v, rel.base, cache);
  } catch (const std::exception& e) {
    out.pass = false;
    out.mismatches.push_back(std::string("expansion failed: ") + e.what());
    return out;
  }
  std::set<WeightVector> keys;
  for (const auto& [mp, c] : expected) keys.insert(mp);
  for (const auto& [mp, c] : x.terms) keys.insert(mp);
  for (const auto& mp : keys) {
    KappaRational want = expected.count(mp) ? expected.at(mp) : KappaRational();
    KappaRational got = x.coefficient(mp);
    if (want != got) {
      out.pass = false;
      out.mismatches.push_back("P" + mp.to_string() + ": printed " + want.to_string() +
                               ", extracted " + got.to_string());
    }
  }
  return out;
}

}  // namespace

const ShiftTable& shift_table(int v) {
  static const std::array<ShiftTable, 4> tables = {{
      {1, with_negatives({W(1, 0, 0, 0), W(1, -1, 0, 0), W(0, 1, -1, -1), W(0, 0, 1, -1)})},
      {2,
       [] {
         auto s = with_negatives({W(0, 1, 0, 0),                                    // lambda_2
                                  W(-2, 1, 0, 0), W(0, 1, -2, 0), W(0, 1, 0, -2),   // lambda_2 - 2 lambda_j
                                  W(-1, 2, -1, -1),                                 // 2 lambda_2 - lambda_1 - lambda_3 - lambda_4
                                  W(1, 1, -1, -1), W(-1, 1, 1, -1), W(-1, 1, -1, 1),
                                  W(1, 0, 1, -1), W(1, 0, -1, 1), W(-1, 0, 1, 1),
                                  W(-1, 1, -1, -1)});
         s.push_back(W(0, 0, 0, 0));
         return s;
       }()},
      {3, with_negatives({W(0, 0, 1, 0), W(0, -1, 1, 0), W(-1, 1, 0, -1), W(1, 0, 0, -1)})},
      {4, with_negatives({W(0, 0, 0, 1), W(0, -1, 0, 1), W(-1, 1, -1, 0), W(1, 0, -1, 0)})},
  }};
  if (v < 1 || v > 4) throw std::invalid_argument("variable index must be in 1..4");
  return tables[v - 1];
}

KappaRational RecurrenceExpansion::coefficient(const WeightVector& mp) const {
  auto it = terms.find(mp);
  return it == terms.end() ? KappaRational() : it->second;
}

RecurrenceExpansion expand_product(int v, const WeightVector& m, PolynomialCache& cache) {
  if (!m.dominant()) throw NotDominant("expand_product: " + m.to_string() + " is not dominant");
  const ShiftTable& table = shift_table(v);
  std::vector<WeightVector> candidates;
  for (const auto& s : table.shifts) {
    WeightVector mp = m + s;
    if (mp.dominant()) candidates.push_back(mp);
  }
  std::stable_sort(candidates.begin(), candidates.end(),
                   [](const WeightVector& a, const WeightVector& b) {
                     return rho_level(a.coords) > rho_level(b.coords);
                   });

  RecurrenceExpansion x;
  x.variable = v;
  x.m = m;
  ZPolynomial rem = ZPolynomial::variable(v) * cache.get(m)->polynomial;
  for (const auto& mp : candidates) {
    KappaRational c = rem.coefficient(mp.coords);
    if (c.is_zero()) continue;
    rem -= cache.get(mp)->polynomial * c;
    x.terms.emplace(mp, std::move(c));
  }
  if (!rem.is_zero()) {
    throw ResidualNonzero("z" + std::to_string(v) + "*P" + m.to_string() +
                          " leaves a remainder with " + std::to_string(rem.size()) +
                          " terms, leading " + rem.to_string().substr(0, 120));
  }
  return x;
}

ZPolynomial reconstruction_residual(const RecurrenceExpansion& x, PolynomialCache& cache) {
  ZPolynomial acc = -(ZPolynomial::variable(x.variable) * cache.get(x.m)->polynomial);
  for (const auto& [mp, c] : x.terms) acc += cache.get(mp)->polynomial * c;
  return acc;
}

RecurrenceExpansion permute_expansion(const RecurrenceExpansion& x, const TrialityPerm& perm) {
  RecurrenceExpansion out;
  out.variable = perm[x.variable - 1] + 1;
  out.m = triality_permute(x.m, perm);
  for (const auto& [mp, c] : x.terms) out.terms.emplace(triality_permute(mp, perm), c);
  return out;
}

const std::vector<ClosedForm>& all_closed_forms() {
  static const std::vector<ClosedForm> ids = {
      ClosedForm::a, ClosedForm::b, ClosedForm::c, ClosedForm::d, ClosedForm::e,
      ClosedForm::f, ClosedForm::g, ClosedForm::h, ClosedForm::k, ClosedForm::p,
      ClosedForm::q, ClosedForm::r, ClosedForm::s};
  return ids;
}

std::string closed_form_name(ClosedForm id) {
  static const char* names[] = {"a", "b", "c", "d", "e", "f", "g", "h", "k", "p", "q", "r", "s"};
  return names[static_cast<int>(id)];
}

ClosedForm closed_form_from_name(const std::string& name) {
  for (ClosedForm id : all_closed_forms()) {
    if (closed_form_name(id) == name) return id;
  }
  throw std::invalid_argument("unknown closed form '" + name + "'");
}

KappaPoly t_polynomial(int m) {
  const long M = m;
  return KappaPoly(std::vector<BigInt>{
      -1 + 5 * M * M - 4 * M * M * M * M,
      2 + 25 * M - 7 * M * M - 40 * M * M * M + 2 * M * M * M * M,
      20 - 35 * M - 123 * M * M + 20 * M * M * M,
      -22 - 115 * M + 63 * M * M,
      -19 + 65 * M,
      20,
  });
}

KappaRational closed_form(ClosedForm id, int m) {
  if (m < 1) throw std::invalid_argument("closed forms are defined for m >= 1");
  const long M = m;
  const KappaRational mm(M);
  switch (id) {
    case ClosedForm::a:
      return ratio({mm, lin(M, 2), lin(M - 1, 4), lin(M - 1, 6)},
                   {lin(M - 1, 1), lin(M - 1, 3), lin(M, 3), lin(M, 5)});
    case ClosedForm::c:
      return ratio({mm, lin(M - 1, 2)}, {lin(M, 1), lin(M - 1, 1)});
    case ClosedForm::b:
      return ratio({mm, lin(M - 1, 4)}, {lin(M - 1, 1), lin(M, 3)});
    case ClosedForm::d:
      return ratio({KappaRational(2 * M), lin(M, 1), lin(M - 1, 3), lin(M - 1, 4), lin(2 * M - 1, 6)},
                   {lin(M - 1, 1), lin(M - 1, 2), lin(M, 3), lin(2 * M - 1, 5), lin(2 * M, 5)});
    case ClosedForm::e:
    case ClosedForm::g:
      return ratio({mm, lin(M - 1, 3)}, {lin(M - 1, 1), lin(M, 2)});
    case ClosedForm::f:
      return ratio({mm, KappaRational(M - 1), lin(M - 2, 2), lin(M, 2), lin(M - 1, 4), lin(M - 1, 5)},
                   {lin(M - 2, 1), lin(M - 1, 1), lin(M - 1, 1), lin(M - 1, 3), lin(M, 3), lin(M, 4)});
    case ClosedForm::h: {
      KappaRational poly(KappaPoly(std::vector<BigInt>{M * M - 1, 6 * M - 1, 5, -3}));
      return ratio({KappaRational(4), poly}, {lin(M - 1, 1), lin(1, 3), lin(M + 1, 5)});
    }
    case ClosedForm::k:
      return ratio({KappaRational(4 * M), lin(M, 1), lin(M, 1), lin(M, 2), lin(M - 1, 3),
                    lin(M - 1, 4), lin(M - 1, 4), lin(2 * M - 1, 4), lin(M - 1, 5), lin(2 * M - 1, 6)},
                   {lin(M - 1, 1), lin(M - 1, 2), lin(M - 1, 2), lin(M, 3), lin(M, 3), lin(M, 4),
                    lin(2 * M - 2, 5), lin(2 * M - 1, 5), lin(2 * M - 1, 5), lin(2 * M, 5)});
    case ClosedForm::p:
      return ratio({mm, lin(M - 1, 2)}, {lin(M - 1, 1), lin(M, 1)});
    case ClosedForm::q:
      return ratio({KappaRational(2 * M), KappaRational(M - 1), lin(M, 1), lin(M, 1), lin(M - 2, 2),
                    lin(M - 1, 3), lin(M - 1, 3), lin(M - 1, 3), lin(2 * M - 1, 6)},
                   {lin(M - 2, 1), lin(M - 1, 1), lin(M - 1, 1), lin(M - 1, 2), lin(M - 1, 2),
                    lin(M, 2), lin(M, 2), lin(2 * M - 1, 5), lin(2 * M, 5)});
    case ClosedForm::r:
      return ratio({mm, lin(M, 1), lin(M - 1, 3), lin(M - 1, 4)},
                   {lin(M - 1, 1), lin(M - 1, 2), lin(M, 2), lin(M, 3)});
    case ClosedForm::s:
      return ratio({KappaRational(-4), KappaRational(t_polynomial(m))},
                   {lin(1, 1), lin(M - 1, 1), lin(M + 1, 4), lin(2 * M - 1, 5), lin(2 * M + 1, 5)});
  }
  throw std::invalid_argument("unknown closed form");
}

bool VerificationReport::all_pass() const { return failures() == 0; }

std::size_t VerificationReport::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const RelationCheck& c) { return !c.pass; }));
}

VerificationReport verify_closed_forms(int max_m, PolynomialCache& cache, int triality_max_sum) {
  if (max_m < 1) throw std::invalid_argument("max_m must be >= 1");
  VerificationReport report;
  for (int m = 1; m <= max_m; ++m) {
    for (const auto& rel : printed_relations(m)) report.checks.push_back(check_relation(rel, m, cache));
  }

  // Clebsch-Gordan limit. f_1 and q_1 multiply polynomials with a negative
  // quantum number and are absent from the relations, so they start at 2.
  for (ClosedForm id : all_closed_forms()) {
    const int first = (id == ClosedForm::f || id == ClosedForm::q) ? 2 : 1;
    for (int m = first; m <= max_m; ++m) {
      RelationCheck c{"kappa=1", closed_form_name(id) + "_m at kappa=1", m, true, {}};
      BigRational v = closed_form(id, m).substitute(1);
      if (v != 1) {
        c.pass = false;
        c.mismatches.push_back("value " + v.get_str());
      }
      report.checks.push_back(std::move(c));
    }
  }

  for (const auto& m : dominant_weights_up_to(triality_max_sum)) {
    for (int v : {1, 2}) {
      RecurrenceExpansion base = expand_product(v, m, cache);
      for (const auto& perm : triality_group()) {
        RecurrenceExpansion mapped = permute_expansion(base, perm);
        RecurrenceExpansion direct = expand_product(mapped.variable, mapped.m, cache);
        RelationCheck c{"triality", format_relation(v, m) + " -> " +
                                        format_relation(mapped.variable, mapped.m),
                        0, mapped.terms == direct.terms, {}};
        if (!c.pass) c.mismatches.push_back("permuted coefficients differ");
        report.checks.push_back(std::move(c));
      }
    }
  }
  return report;
}

CSPolynomial ladder_next(int m, const ZPolynomial& p_m, const ZPolynomial& p_prev) {
  if (m < 0) throw std::invalid_argument("ladder_next: m must be >= 0");
  const long M = m;
  const KappaRational mk = lin(M, 1);
  ZPolynomial next = commutator_with(1, p_m) * (KappaRational(1) / (KappaRational(4) * mk));
  next -= (ZPolynomial::variable(1) * p_m) * (lin(1, 4) / (KappaRational(2) * mk));
  if (m > 0) {
    next += p_prev * ratio({KappaRational(M), lin(M, 2), lin(M - 1, 4), lin(M - 1, 6)},
                           {lin(M - 1, 1), lin(M - 1, 3), lin(M, 1), lin(M, 3)});
  }
  return from_polynomial(W(m + 1, 0, 0, 0), next);
}

std::vector<ZPolynomial> ladder_sequence(int max_m) {
  std::vector<ZPolynomial> seq;
  seq.push_back(ZPolynomial(1));
  if (max_m >= 1) seq.push_back(ZPolynomial::variable(1));
  for (int m = 1; m + 1 <= max_m; ++m) {
    seq.push_back(ladder_next(m, seq[m], seq[m - 1]).polynomial);
  }
  return seq;
}

ZPolynomial recover_m1(int m, const ZPolynomial& p_m, const ZPolynomial& p_m1,
                       const ZPolynomial& p_m2) {
  ZPolynomial rhs = ZPolynomial::variable(1) * p_m1 - p_m2 - p_m * closed_form(ClosedForm::a, m + 1);
  return rhs * (KappaRational(1) / closed_form(ClosedForm::c, m + 1));
}

}  // namespace d4cs
