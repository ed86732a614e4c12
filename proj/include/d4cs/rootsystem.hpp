#pragma once

// Root and weight data of the Lie algebra D4.
//
// Weights are written in the fundamental-weight basis (lambda_1..lambda_4),
// root-lattice elements in the simple-root basis (alpha_1..alpha_4). Node 2
// is the central node of the Dynkin diagram; nodes 1, 3 and 4 are permuted
// by triality.

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace d4cs {

using IntMatrix4 = std::array<std::array<int, 4>, 4>;
using RationalMatrix4 = std::array<std::array<mpq_class, 4>, 4>;

struct WeightVector {
  std::array<int, 4> coords{};

  int operator[](std::size_t i) const { return coords[i]; }
  int& operator[](std::size_t i) { return coords[i]; }

  bool dominant() const;
  int sum() const { return coords[0] + coords[1] + coords[2] + coords[3]; }
  std::string to_string() const;

  WeightVector operator+(const WeightVector& o) const;
  WeightVector operator-(const WeightVector& o) const;
  WeightVector operator-() const;
  auto operator<=>(const WeightVector&) const = default;
};

struct RootVector {
  std::array<int, 4> coords{};

  int operator[](std::size_t i) const { return coords[i]; }
  int& operator[](std::size_t i) { return coords[i]; }

  int height() const { return coords[0] + coords[1] + coords[2] + coords[3]; }
  bool is_zero() const { return coords == std::array<int, 4>{}; }
  bool nonnegative() const;
  std::string to_string() const;

  RootVector operator+(const RootVector& o) const;
  RootVector operator-(const RootVector& o) const;
  auto operator<=>(const RootVector&) const = default;
};

struct CartanData {
  IntMatrix4 cartan;
  RationalMatrix4 inverse_cartan;  // entry (j,k) is (lambda_j, lambda_k)
  WeightVector weyl_vector;
};

/// Immutable D4 data, built once.
const CartanData& d4();

/// The 12 positive roots, sorted by (height, coordinates).
const std::vector<RootVector>& positive_roots();

/// alpha_i = sum_j A_{ji} lambda_j, extended linearly.
WeightVector root_to_weight(const RootVector& r);

/// Inverse of root_to_weight. Throws std::invalid_argument if `w` is not in
/// the root lattice.
RootVector weight_to_root(const WeightVector& w);

/// (w1, w2) computed through the inverse Cartan matrix.
mpq_class inner_product(const WeightVector& w1, const WeightVector& w2);

/// (alpha, lambda) for a root-lattice element and a weight. D4 is simply
/// laced, so simple roots and fundamental weights are dual bases.
int pairing(const RootVector& r, const WeightVector& w);

/// Dimension of the irreducible representation with highest weight m,
/// as the product over positive roots of (m + rho, alpha) / (rho, alpha).
mpz_class weyl_dimension(const WeightVector& m);

/// A permutation of the nodes {1,3,4} (0-based image array; entry 1 must
/// be 1). Coordinates move as new[perm[i]] = old[i].
using TrialityPerm = std::array<int, 4>;

/// The six elements of Sym{1,3,4}, identity first.
const std::array<TrialityPerm, 6>& triality_group();

/// Throws std::invalid_argument if `perm` is not a permutation fixing 2.
void check_triality(const TrialityPerm& perm);

WeightVector triality_permute(const WeightVector& m, const TrialityPerm& perm);

/// Parses "a,b,c,d" into a weight.
WeightVector parse_weight(const std::string& text);

/// Every dominant weight with coordinate sum <= max_sum, in
/// lexicographic order.
std::vector<WeightVector> dominant_weights_up_to(int max_sum);

}  // namespace d4cs
