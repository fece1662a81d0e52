#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "objectify/matrix.hpp"

namespace objectify {

struct Violation {
  std::string invariant;
  double magnitude = 0.0;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string describe() const;
};

// Density operator on a labeled dimension.
struct State {
  std::size_t dim = 0;
  ComplexMatrix matrix;

  State() = default;
  State(std::size_t d, ComplexMatrix m) : dim(d), matrix(std::move(m)) {}
  static State pure(const std::vector<cplx>& amplitudes);
  static State basis(std::size_t dim, std::size_t index);
  static State maximally_mixed(std::size_t dim);
};

// Finite observable: effects summing to identity, one per outcome label.
struct Povm {
  std::size_t dim = 0;
  std::vector<std::string> outcomes;
  std::vector<ComplexMatrix> effects;

  std::size_t n_outcomes() const { return effects.size(); }
  std::string label(std::size_t x) const {
    return x < outcomes.size() ? outcomes[x] : std::to_string(x);
  }
  static Povm sharp_basis(std::size_t dim,
                          std::vector<std::string> labels = {});
  bool is_sharp(double tol = 1e-9) const;
};

struct Hamiltonian {
  std::size_t dim = 0;
  ComplexMatrix matrix;

  Hamiltonian() = default;
  Hamiltonian(std::size_t d, ComplexMatrix m) : dim(d), matrix(std::move(m)) {}
  static Hamiltonian diagonal(std::span<const double> energies);
  static Hamiltonian zero(std::size_t dim);
};

ValidationReport validate_state(const State& s, double tol = 1e-9);
ValidationReport validate_povm(const Povm& p, double tol = 1e-9);
ValidationReport validate_hamiltonian(const Hamiltonian& h, double tol = 1e-9);

// Born rule p(x) = tr[E_x rho]. Round-off negatives in (-1e-12, 0) clamp to
// zero; anything more negative is reported as a violation.
std::vector<double> born_probabilities(const Povm& e, const State& rho);

// Orthogonal projector onto the eigenvalue-1 eigenspace of an effect; the
// zero matrix when no eigenvalue lies in [1 - tol, 1 + tol].
ComplexMatrix eigenvalue_one_projector(const ComplexMatrix& effect,
                                       double tol = 1e-8);

struct ObjectificationSupport {
  bool admits = false;
  std::vector<std::size_t> ranks;  // unit-eigenspace rank per effect
};

// An observable admits objective values iff every effect has a nonzero
// eigenvalue-1 eigenspace.
ObjectificationSupport admits_objectification(const Povm& p, double tol = 1e-8);

}  // namespace objectify
