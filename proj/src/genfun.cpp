#include "d4cs/genfun.hpp"

#include <stdexcept>

#include "d4cs/operator.hpp"

namespace d4cs {

namespace {

std::vector<ZPolynomial> parse_all(std::initializer_list<const char*> texts) {
  std::vector<ZPolynomial> out;
  for (const char* t : texts) out.push_back(parse_zpolynomial(t));
  return out;
}

TauSeries as_series(const std::vector<ZPolynomial>& c, int order) {
  return TauSeries(order, c);
}

}  // namespace

std::string gf_name(GFLabel label) {
  switch (label) {
    case GFLabel::F0: return "F0";
    case GFLabel::G0: return "G0";
    case GFLabel::F1: return "F1";
    case GFLabel::G1: return "G1";
  }
  return "?";
}

GFLabel gf_from_name(const std::string& name) {
  for (GFLabel l : {GFLabel::F0, GFLabel::G0, GFLabel::F1, GFLabel::G1}) {
    if (gf_name(l) == name) return l;
  }
  throw std::invalid_argument("unknown generating function '" + name + "'");
}

int gf_kappa(GFLabel label) {
  return (label == GFLabel::F0 || label == GFLabel::G0) ? 0 : 1;
}

WeightVector gf_weight(GFLabel label, int m) {
  const bool g = (label == GFLabel::G0 || label == GFLabel::G1);
  return WeightVector{{m, g ? 1 : 0, 0, 0}};
}

const std::vector<ZPolynomial>& gf_denominator() {
  static const std::vector<ZPolynomial> d = parse_all({
      "1",
      "-z1",
      "z2",
      "-(z3*z4 - z1)",
      "z3^2 + z4^2 - 2*z2 - 2",
      "-(z3*z4 - z1)",
      "z2",
      "-z1",
      "1",
  });
  return d;
}

RationalGF build(GFLabel label) {
  RationalGF gf{label, {}, gf_denominator()};
  switch (label) {
    case GFLabel::F0:
      gf.numerator = parse_all({
          "8",
          "-7*z1",
          "6*z2",
          "-5*(z3*z4 - z1)",
          "4*(z3^2 + z4^2 - 2*z2 - 2)",
          "-3*(z3*z4 - z1)",
          "2*z2",
          "-z1",
      });
      break;
    case GFLabel::G0:
      gf.numerator = parse_all({
          "z2 - 4",
          "6*z1 - 3*z3*z4",
          "-8 - 2*z1^2 - 10*z2 - z2^2 + 4*z3^2 + 2*z1*z3*z4 + 4*z4^2",
          "10*z1 + 5*z1*z2 - 3*z1*z3^2 - 4*z3*z4 + z2*z3*z4 - 3*z1*z4^2",
          "8*z2 - 4*z1^2 + 2*z2^2 - z2*z3^2 + 4*z1*z3*z4 - z2*z4^2",
          "-6*z1 - 6*z1*z2 - z3*z4 + z2*z3*z4",
          "8 + 6*z1^2 + 2*z2 - z2^2",
          "-10*z1 + z1*z2",
          "4 - z2",
      });
      break;
    case GFLabel::F1:
      gf.numerator = parse_all({"1", "0", "-1"});
      break;
    case GFLabel::G1:
      gf.numerator = parse_all({
          "z2",
          "-z3*z4",
          "z3^2 + z4^2 - 2*z2 - 1",
          "-(z3*z4 - z1)",
          "z2",
          "-z1",
          "1",
      });
      break;
  }
  return gf;
}

TauSeries expand(const RationalGF& gf, int order) {
  if (order < 0) throw std::invalid_argument("order must be >= 0");
  return series_div(as_series(gf.numerator, order), as_series(gf.denominator, order));
}

ZPolynomial expected_coefficient(GFLabel label, int m, PolynomialCache& cache) {
  if (m == 0 && label == GFLabel::F0) return ZPolynomial(8);
  return specialize(*cache.get(gf_weight(label, m)), BigRational(gf_kappa(label)));
}

std::vector<SeriesCheck> check_series(GFLabel label, int order, PolynomialCache& cache) {
  TauSeries s = expand(build(label), order);
  std::vector<SeriesCheck> out;
  for (int m = 0; m <= order; ++m) {
    SeriesCheck c;
    c.m = m;
    c.expected = expected_coefficient(label, m, cache);
    c.got = s[m];
    c.pass = (c.expected == c.got);
    out.push_back(std::move(c));
  }
  return out;
}

TauSeries pde_residual(GFLabel label, int order) {
  if (label != GFLabel::F0 && label != GFLabel::F1) {
    throw std::invalid_argument("pde_residual is defined for F0 and F1 only");
  }
  const BigRational k0(gf_kappa(label));
  const long linear = (label == GFLabel::F1) ? 6 : 0;
  TauSeries s = expand(build(label), order);
  TauSeries r(order);
  const KappaRational half = KappaRational(1) / KappaRational(2);
  for (int k = 0; k <= order; ++k) {
    r[k] = apply_L_at(s[k], k0) * half - s[k] * KappaRational(long(k) * k + linear * k);
  }
  return r;
}

std::vector<ZPolynomial> kappa0_three_term_residuals(int max_m) {
  TauSeries f = expand(build(GFLabel::F0), max_m + 1);
  TauSeries g = expand(build(GFLabel::G0), max_m);
  std::vector<ZPolynomial> out;
  for (int m = 1; m <= max_m; ++m) {
    out.push_back(ZPolynomial::variable(1) * f[m] - f[m + 1] - f[m - 1] - g[m - 1]);
  }
  return out;
}

}  // namespace d4cs
