#pragma once

// Hand-transcribed reference polynomials (fixtures/golden_corpus.json) and
// their comparison against the solver.

#include <filesystem>
#include <string>
#include <vector>

#include "d4cs/solver.hpp"

namespace d4cs {

struct GoldenEntry {
  std::string kind;   // "polynomial", "character" or "monomial"
  std::string kappa;  // "symbolic" or a rational such as "0", "1"
  WeightVector m;
  std::string expression;
};

/// $CS_D4_FIXTURES when set, otherwise the source-tree fixtures directory.
std::filesystem::path fixtures_dir();

/// Throws std::runtime_error if the file is missing or malformed.
std::vector<GoldenEntry> load_golden(const std::filesystem::path& file);

struct GoldenResult {
  GoldenEntry entry;
  bool pass = false;
  /// Solver minus transcription, empty on a pass.
  std::string difference;
};

GoldenResult check_golden(const GoldenEntry& e, PolynomialCache& cache);

/// P_m symbolic, or specialized when `kappa` is a rational literal.
ZPolynomial solver_polynomial(const WeightVector& m, const std::string& kappa,
                              PolynomialCache& cache);

}  // namespace d4cs
