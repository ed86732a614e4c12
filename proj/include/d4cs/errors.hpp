#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>

namespace d4cs {

/// Quantum numbers or weights that must be dominant were not.
class NotDominant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rational function of kappa was evaluated at one of its poles.
///
/// `mu` is filled in by the solver when the pole comes from a specific
/// coefficient c_mu of an eigenpolynomial.
class PoleAtKappa : public std::domain_error {
 public:
  PoleAtKappa(const std::string& what, std::string kappa,
              std::optional<std::array<int, 4>> mu = std::nullopt)
      : std::domain_error(what), kappa_(std::move(kappa)), mu_(mu) {}

  const std::string& kappa() const { return kappa_; }
  const std::optional<std::array<int, 4>>& mu() const { return mu_; }

 private:
  std::string kappa_;
  std::optional<std::array<int, 4>> mu_;
};

/// An algorithm reached a state its ordering guarantees rule out.
class InternalInconsistency : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A product z_v * P_m did not decompose over the expected shifts.
class ResidualNonzero : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A torus point is too close to a node of the ground state.
class NearSingularity : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace d4cs
