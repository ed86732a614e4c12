#include "d4cs/golden.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "d4cs/serialize.hpp"

#ifndef D4CS_FIXTURES_DIR
#define D4CS_FIXTURES_DIR "fixtures"
#endif

namespace d4cs {

std::filesystem::path fixtures_dir() {
  if (const char* env = std::getenv("CS_D4_FIXTURES"); env != nullptr && *env != '\0') return env;
  return D4CS_FIXTURES_DIR;
}

std::vector<GoldenEntry> load_golden(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw std::runtime_error("cannot open " + file.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw std::runtime_error(file.string() + ": " + e.what());
  }
  std::vector<GoldenEntry> out;
  for (const auto& e : j.at("entries")) {
    out.push_back({e.at("kind").get<std::string>(), e.at("kappa").get<std::string>(),
                   weight_from_json(e.at("m")), e.at("expression").get<std::string>()});
  }
  return out;
}

ZPolynomial solver_polynomial(const WeightVector& m, const std::string& kappa,
                              PolynomialCache& cache) {
  auto p = cache.get(m);
  if (kappa == "symbolic") return p->polynomial;
  BigRational k0(kappa);
  k0.canonicalize();
  return specialize(*p, k0);
}

GoldenResult check_golden(const GoldenEntry& e, PolynomialCache& cache) {
  GoldenResult r{e, false, {}};
  ZPolynomial diff = solver_polynomial(e.m, e.kappa, cache) - parse_zpolynomial(e.expression);
  r.pass = diff.is_zero();
  if (!r.pass) r.difference = diff.to_string();
  return r;
}

}  // namespace d4cs
