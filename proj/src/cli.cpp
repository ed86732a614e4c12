#include "d4cs/cli.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "d4cs/errors.hpp"
#include "d4cs/genfun.hpp"
#include "d4cs/golden.hpp"
#include "d4cs/qspace.hpp"
#include "d4cs/recurrence.hpp"
#include "d4cs/serialize.hpp"

namespace d4cs {

namespace {

struct SuiteBuilder {
  Json checks = Json::array();
  int passed = 0;
  int failed = 0;

  void add(const std::string& name, bool pass, const std::string& detail = "") {
    checks.push_back({{"name", name}, {"pass", pass}, {"detail", detail}});
    (pass ? passed : failed) += 1;
  }

  Json finish(const std::string& suite) {
    return {{"suite", suite}, {"checks", std::move(checks)}, {"passed", passed}, {"failed", failed}};
  }
};

std::string describe(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) {
    if (!out.empty()) out += "; ";
    out += l;
  }
  return out;
}

std::string format_double(double x) {
  std::ostringstream s;
  s.precision(3);
  s << std::scientific << x;
  return s.str();
}

Json suite_golden(PolynomialCache& cache) {
  SuiteBuilder b;
  for (const auto& e : load_golden(fixtures_dir() / "golden_corpus.json")) {
    GoldenResult r = check_golden(e, cache);
    b.add(e.kind + " P" + e.m.to_string() + " kappa=" + e.kappa, r.pass, r.difference);
  }
  return b.finish("golden");
}

std::vector<WeightVector> random_weights(std::size_t count, int max_sum, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(0, max_sum);
  std::vector<WeightVector> out;
  while (out.size() < count) {
    WeightVector w{{coord(rng), coord(rng), coord(rng), coord(rng)}};
    if (w.sum() <= max_sum) out.push_back(w);
  }
  return out;
}

Json suite_eigen(const SuiteOptions& opt, PolynomialCache& cache) {
  SuiteBuilder b;
  std::vector<WeightVector> ms = dominant_weights_up_to(3);
  for (const auto& w : random_weights(10, 5, opt.seed)) ms.push_back(w);
  for (const auto& m : ms) b.add("L P" + m.to_string() + " = eps P", verify_eigen(*cache.get(m)));
  return b.finish("eigen");
}

Json suite_recur(const SuiteOptions& opt, PolynomialCache& cache) {
  SuiteBuilder b;
  VerificationReport rep = verify_closed_forms(opt.max_m, cache);
  for (const auto& c : rep.checks) {
    std::string name = c.family + " " + c.relation;
    if (c.m > 0) name += " m=" + std::to_string(c.m);
    b.add(name, c.pass, describe(c.mismatches));
  }
  return b.finish("recur");
}

int default_order(GFLabel l, int requested) {
  if (requested >= 0) return requested;
  return (l == GFLabel::F0 || l == GFLabel::F1) ? 8 : 6;
}

Json suite_genfun(const SuiteOptions& opt, PolynomialCache& cache) {
  SuiteBuilder b;
  for (GFLabel l : {GFLabel::F0, GFLabel::G0, GFLabel::F1, GFLabel::G1}) {
    for (const auto& c : check_series(l, default_order(l, opt.order), cache)) {
      b.add(gf_name(l) + " series t^" + std::to_string(c.m), c.pass,
            c.pass ? "" : "solver minus series: " + (c.expected - c.got).to_string());
    }
  }
  const int pde_order = opt.order >= 0 ? opt.order : 6;
  for (GFLabel l : {GFLabel::F0, GFLabel::F1}) {
    TauSeries r = pde_residual(l, pde_order);
    b.add(gf_name(l) + " pde to t^" + std::to_string(pde_order), r.is_zero());
  }
  return b.finish("genfun");
}

Json suite_qspace(const SuiteOptions& opt, PolynomialCache& cache) {
  SuiteBuilder b;
  CharacterValues z0 = characters_from_q(TorusPoint::real(0, 0, 0, 0));
  const double dims[4] = {8, 28, 8, 8};
  double worst = 0;
  for (int j = 0; j < 4; ++j) worst = std::max(worst, std::abs(z0[j] - dims[j]));
  b.add("characters at identity = (8,28,8,8)", worst < 1e-12, format_double(worst));

  auto points = random_torus_points(static_cast<std::size_t>(opt.samples), opt.seed);
  int sign = 0;
  bool consistent = true;
  for (const auto& m : {WeightVector{{1, 0, 0, 0}}, WeightVector{{0, 1, 0, 0}},
                        WeightVector{{1, 1, 0, 0}}}) {
    for (double kappa : {0.7, 1.3}) {
      double max_res = 0;
      for (const auto& p : points) {
        ResidualReport r = hamiltonian_residual(*cache.get(m), kappa, p, opt.step);
        max_res = std::max(max_res, r.residual);
        if (sign == 0) sign = r.sign;
        consistent = consistent && (r.sign == sign);
      }
      std::ostringstream name;
      name << "residual P" << m.to_string() << " kappa=" << kappa;
      b.add(name.str(), max_res < opt.tolerance, "max " + format_double(max_res));
    }
  }
  b.add("one sign convention", consistent, "sign " + std::to_string(sign));

  for (int n : {1, 2}) {
    const double tol = n == 1 ? 1e-10 : 1e-8;
    double max_err = 0;
    for (const auto& p : points) max_err = std::max(max_err, special_kappa_identity(n, p, cache).relative_error);
    b.add("special kappa identity n=" + std::to_string(n), max_err < tol, "max " + format_double(max_err));
  }
  return b.finish("qspace");
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

WeightVector parse_m(const std::string& text) {
  WeightVector m = parse_weight(text);
  if (!m.dominant()) throw NotDominant("quantum numbers must be nonnegative: " + text);
  return m;
}

int cmd_compute(const std::string& m_text, const std::string& kappa, const std::string& format,
                std::ostream& out) {
  WeightVector m = parse_m(m_text);
  PolynomialCache cache;
  if (kappa == "symbolic") {
    auto p = cache.get(m);
    if (format == "text") {
      out << p->polynomial.to_string() << "\n";
    } else {
      print_json(out, cspolynomial_to_json(*p));
    }
    return kExitOk;
  }
  ZPolynomial p = solver_polynomial(m, kappa, cache);
  if (format == "text") {
    out << p.to_string() << "\n";
  } else {
    BigRational k0(kappa);
    k0.canonicalize();
    print_json(out, {{"m", weight_to_json(m)}, {"kappa", to_string(k0)},
                     {"polynomial", zpolynomial_to_json(p)}});
  }
  return kExitOk;
}

int cmd_genfun(const std::string& label_text, int order, const std::string& check,
               std::ostream& out) {
  GFLabel label = gf_from_name(label_text);
  order = default_order(label, order);
  PolynomialCache cache;
  TauSeries s = expand(build(label), order);
  Json coeffs = Json::array();
  for (int k = 0; k <= order; ++k) {
    coeffs.push_back({{"t", k}, {"text", s[k].to_string()}, {"polynomial", zpolynomial_to_json(s[k])}});
  }
  SuiteBuilder b;
  if (check == "series") {
    for (const auto& c : check_series(label, order, cache)) {
      b.add("t^" + std::to_string(c.m), c.pass,
            c.pass ? "" : "solver minus series: " + (c.expected - c.got).to_string());
    }
  } else {
    TauSeries r = pde_residual(label, order);
    for (int k = 0; k <= order; ++k) b.add("t^" + std::to_string(k), r[k].is_zero(), r[k].to_string());
  }
  const bool pass = b.failed == 0;
  print_json(out, {{"label", gf_name(label)},
                   {"order", order},
                   {"check", check},
                   {"coefficients", std::move(coeffs)},
                   {"results", b.checks},
                   {"pass", pass}});
  return pass ? kExitOk : kExitVerificationFailed;
}

int cmd_qcheck(const std::string& m_text, double kappa, const SuiteOptions& opt, std::ostream& out) {
  WeightVector m = parse_m(m_text);
  PolynomialCache cache;
  auto poly = cache.get(m);
  Json points = Json::array();
  double max_res = 0;
  int sign = 0;
  bool consistent = true;
  for (const auto& p : random_torus_points(static_cast<std::size_t>(opt.samples), opt.seed)) {
    ResidualReport r = hamiltonian_residual(*poly, kappa, p, opt.step);
    Json q = Json::array();
    for (const auto& c : p.q) q.push_back(c.real());
    points.push_back({{"q", std::move(q)}, {"residual", r.residual}, {"sign", r.sign}});
    max_res = std::max(max_res, r.residual);
    if (sign == 0) sign = r.sign;
    consistent = consistent && r.sign == sign;
  }
  const bool pass = max_res < opt.tolerance && consistent;
  print_json(out, {{"m", weight_to_json(m)},
                   {"kappa", kappa},
                   {"step", opt.step},
                   {"seed", opt.seed},
                   {"points", std::move(points)},
                   {"max_residual", max_res},
                   {"sign", sign},
                   {"sign_consistent", consistent},
                   {"tolerance", opt.tolerance},
                   {"pass", pass}});
  return pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace

Json run_suite(const std::string& suite, const SuiteOptions& opt) {
  PolynomialCache cache;
  if (suite == "golden") return suite_golden(cache);
  if (suite == "eigen") return suite_eigen(opt, cache);
  if (suite == "recur") return suite_recur(opt, cache);
  if (suite == "genfun") return suite_genfun(opt, cache);
  if (suite == "qspace") return suite_qspace(opt, cache);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Eigenpolynomials of the D4 Calogero-Sutherland model", "d4cs"};
  app.require_subcommand(1);

  std::string m_text, kappa_text = "symbolic", format = "json", suite = "all", label, check = "series";
  int v = 1;
  double kappa_value = 1.0;
  SuiteOptions opt;

  auto* compute = app.add_subcommand("compute", "Solve for P_m and print it");
  compute->add_option("--m", m_text, "Quantum numbers, e.g. 2,0,0,0")->required();
  compute->add_option("--kappa", kappa_text, "'symbolic' or a rational value such as 1/2")
      ->capture_default_str();
  compute->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}))
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", suite, "golden, eigen, recur, genfun, qspace or all")
      ->check(CLI::IsMember({"golden", "eigen", "recur", "genfun", "qspace", "all"}))
      ->capture_default_str();
  verify->add_option("--max-m", opt.max_m, "Largest m for the recurrence families")
      ->check(CLI::Range(1, 20))
      ->capture_default_str();
  verify->add_option("--order", opt.order, "Series order (default 8 for F, 6 for G)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--seed", opt.seed, "Seed for random weights and torus points")
      ->capture_default_str();
  verify->add_option("--samples", opt.samples, "Torus points for the q-space checks")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* genfun = app.add_subcommand("genfun", "Expand a generating function");
  genfun->add_option("--label", label, "F0, G0, F1 or G1")
      ->required()
      ->check(CLI::IsMember({"F0", "G0", "F1", "G1"}));
  genfun->add_option("--order", opt.order, "Series order (default 8 for F, 6 for G)")
      ->check(CLI::NonNegativeNumber);
  genfun->add_option("--check", check, "series or pde")
      ->check(CLI::IsMember({"series", "pde"}))
      ->capture_default_str();

  auto* qcheck = app.add_subcommand("qcheck", "Finite-difference residual on the torus");
  qcheck->add_option("--m", m_text, "Quantum numbers")->required();
  qcheck->add_option("--kappa", kappa_value, "Coupling (real)")->capture_default_str();
  qcheck->add_option("--samples", opt.samples, "Number of torus points")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  qcheck->add_option("--step", opt.step, "Finite-difference step")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  qcheck->add_option("--seed", opt.seed, "Seed for torus points")->capture_default_str();
  qcheck->add_option("--tolerance", opt.tolerance, "Pass threshold on the relative residual")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* dims = app.add_subcommand("dims", "Weyl dimension of the representation m");
  dims->add_option("--m", m_text, "Quantum numbers")->required();

  auto* recur = app.add_subcommand("recur", "Expand z_v P_m in the P basis");
  recur->add_option("--v", v, "Character index 1..4")->required()->check(CLI::Range(1, 4));
  recur->add_option("--m", m_text, "Quantum numbers")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*compute) return cmd_compute(m_text, kappa_text, format, out);
    if (*verify) {
      const std::vector<std::string> names =
          suite == "all" ? std::vector<std::string>{"golden", "eigen", "recur", "genfun", "qspace"}
                         : std::vector<std::string>{suite};
      Json suites = Json::array();
      int failed = 0, passed = 0;
      for (const auto& name : names) {
        Json r = run_suite(name, opt);
        failed += r.at("failed").get<int>();
        passed += r.at("passed").get<int>();
        suites.push_back(std::move(r));
      }
      print_json(out, {{"suites", std::move(suites)}, {"passed", passed}, {"failed", failed}});
      return failed == 0 ? kExitOk : kExitVerificationFailed;
    }
    if (*genfun) return cmd_genfun(label, opt.order, check, out);
    if (*qcheck) return cmd_qcheck(m_text, kappa_value, opt, out);
    if (*dims) {
      WeightVector m = parse_m(m_text);
      print_json(out, {{"m", weight_to_json(m)}, {"dimension", weyl_dimension(m).get_str()}});
      return kExitOk;
    }
    if (*recur) {
      PolynomialCache cache;
      print_json(out, expansion_to_json(expand_product(v, parse_m(m_text), cache)));
      return kExitOk;
    }
  } catch (const PoleAtKappa& e) {
    err << "error: " << e.what() << "\n";
    if (e.mu()) err << "mu: " << RootVector{*e.mu()}.to_string() << "\n";
    return kExitPole;
  } catch (const NearSingularity& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitVerificationFailed;
  }
  return kExitUsage;
}

}  // namespace d4cs
