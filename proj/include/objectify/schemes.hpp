#pragma once

#include <optional>
#include <span>

#include "objectify/instruments.hpp"

namespace objectify {

// Apparatus model for a measurement: initial probe state, coupling unitary
// on system (x) apparatus, and pointer observable on the apparatus.
struct MeasurementScheme {
  std::size_t dim_s = 0;
  std::size_t dim_a = 0;
  State xi;              // apparatus preparation
  ComplexMatrix u;       // coupling unitary on dim_s * dim_a
  Povm z;                // pointer observable

  std::size_t joint_dim() const { return dim_s * dim_a; }
};

ValidationReport validate_scheme(const MeasurementScheme& m, double tol = 1e-9);

struct Premeasured {
  State joint;      // U (rho (x) xi) U^dagger
  State apparatus;  // its apparatus marginal
};

Premeasured premeasure(const MeasurementScheme& m, const State& rho);

// The system instrument realized by the scheme,
// op_x(T) = tr_A[(1 (x) Z_x) U (T (x) xi) U^dagger],
// with Kraus operators extracted from each operation's Choi matrix.
Instrument induced_instrument(const MeasurementScheme& m);

// Outcome-indexed objectified joint states and their mixture.
struct ObjectificationEnsemble {
  std::size_t dim_s = 0;
  std::size_t dim_a = 0;
  std::vector<std::string> outcomes;
  std::vector<double> probs;
  // Empty optional marks an outcome with (sub-threshold) zero probability.
  std::vector<std::optional<State>> sigmas;
  State sigma_bar;
};

// Applies the pointer instrument to the premeasured state. The instrument
// must be compatible with the scheme's pointer observable and repeatable,
// otherwise objectification is not defined.
ObjectificationEnsemble objectify_pointer(const MeasurementScheme& m,
                                  const Instrument& pointer_instrument,
                                  const State& rho, double tol = 1e-8);

struct AgreementCheck {
  bool ok = false;
  double max_deviation = 0.0;
};

// System marginals after objectification agree for every pair of compatible
// pointer instruments; checks that claim for j1 vs j2 on the given input.
AgreementCheck implementation_independence_check(const MeasurementScheme& m,
                                                 const Instrument& j1,
                                                 const Instrument& j2,
                                                 const State& rho,
                                                 double tol = 1e-10);

struct NormalLudersScheme {
  MeasurementScheme scheme;
  Hamiltonian pointer_hamiltonian;  // diagonal, commutes with Z by construction
};

// Synthesizes the canonical normal scheme implementing the Lueders
// instrument of e: apparatus dimension = #outcomes, xi = |e_0><e_0|, sharp
// basis pointer, and U the unitary completion of
//   |psi> (x) |e_0>  ->  sum_x sqrt(E_x)|psi> (x) |e_x>.
// An empty energy list defaults to 0, 1, 2, ...
NormalLudersScheme normal_scheme_for_luders(
    const Povm& e, std::span<const double> pointer_energies = {});

struct YanaseCheck {
  bool ok = false;
  double max_commutator_norm = 0.0;
};

// [Z_x, H_A] = 0 for every effect of the pointer observable.
YanaseCheck check_yanase(const Povm& z, const Hamiltonian& h_a,
                         double tol = 1e-9);

// Probability that reading the pointer a time g after objectification still
// yields outcome x: tr[(1 (x) Z_x(g)) sigma_x].
double stability_probability(const MeasurementScheme& m, const Instrument& j,
                             const State& rho, std::size_t outcome,
                             const Hamiltonian& h_a, double g);

}  // namespace objectify
