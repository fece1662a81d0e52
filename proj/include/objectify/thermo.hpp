#pragma once

#include "objectify/schemes.hpp"

namespace objectify {

// Work done on system + apparatus by the coupling unitary, computed from the
// joint form tr[(U^dagger H U - H)(rho (x) xi)] and cross-checked against the
// marginal form tr[H_S(I_X(rho) - rho)] + tr[H_A(eta - xi)].
struct WorkReport {
  double value = 0.0;
  double marginal_form = 0.0;
  double residual = 0.0;  // |value - marginal_form|
};

WorkReport premeasurement_work(const MeasurementScheme& m,
                               const Hamiltonian& h_s, const Hamiltonian& h_a,
                               const State& rho);

struct OutcomeEnergetics {
  std::string outcome;
  double probability = 0.0;
  double delta_e = 0.0;            // tr[H(sigma_x - rho (x) xi)]
  double delta_e_system = 0.0;     // tr[H_S(rho_x - rho)]
  double delta_e_apparatus = 0.0;  // tr[H_A(xi_x - xi)]
  double heat = 0.0;               // tr[H(sigma_x - premeasured)]
};

struct EnergeticsReport {
  std::vector<OutcomeEnergetics> per_outcome;
  WorkReport work;
  double avg_delta_e = 0.0;
  double avg_heat = 0.0;
  double first_law_residual = 0.0;  // <dE> - W - <Q>, reported, never hidden
  // Cross-check of <Q> against the apparatus-only form tr[H_A(J_X(eta)-eta)].
  double avg_heat_apparatus_residual = 0.0;
};

EnergeticsReport measurement_energetics(const MeasurementScheme& m,
                                        const Instrument& j,
                                        const Hamiltonian& h_s,
                                        const Hamiltonian& h_a,
                                        const State& rho);

// Split of Var(A, rho) into the skew-information part and the rest:
//   quantum   = tr[A^2 rho] - tr[A rho^alpha A rho^(1-alpha)]
//   classical = variance - quantum
struct VarianceDecomposition {
  double variance = 0.0;
  double quantum = 0.0;
  double classical = 0.0;
};

VarianceDecomposition variance_decomposition(const Hamiltonian& a,
                                             const State& rho, double alpha);

struct StateVariance {
  std::string outcome;
  double variance = 0.0;
  double quantum = 0.0;
  double classical = 0.0;
};

struct VarianceReport {
  double alpha = 0.5;
  double var_q = 0.0;          // direct: sum p Q^2 - (sum p Q)^2
  double var_q_formula = 0.0;  // V(H, sigma_bar) - sum p V(H, sigma_x)
  double residual = 0.0;
  double delta_v_qu = 0.0;  // sum p Vqu(H, sigma_x) - Vqu(H, sigma_bar)
  double delta_v_cl = 0.0;  // Vcl(H, sigma_bar) - sum p Vcl(H, sigma_x)
  StateVariance mixture;
  std::vector<StateVariance> per_state;
};

VarianceReport heat_variance(const ObjectificationEnsemble& ensemble,
                             const Hamiltonian& h_joint, double alpha);

struct FixedPointCheck {
  bool fixed = false;
  double deviation = 0.0;  // |J*_X(H_A) - H_A|, max norm
};

// H_A fixed by the dual pointer channel guarantees <Q> = 0 for every input.
FixedPointCheck fixed_point_check(const Instrument& j, const Hamiltonian& h_a,
                                  double tol = 1e-9);

// Fully outcome-conditioned energetics. The initial energies are conditioned
// on the outcome through the symmetrized weak value, the work is referred to
// the Lueders-objectified branch, and the heat becomes the counterfactual
// difference between the actual and Lueders apparatus states. Requires a
// sharp pointer observable satisfying the Yanase condition.
struct ConditionalOutcome {
  std::string outcome;
  double probability = 0.0;
  double delta_e_system = 0.0;  // weak-value-conditioned system energy change
  double delta_e_total = 0.0;
  double work = 0.0;
  double heat = 0.0;  // tr[H(sigma_x - sigma'_x)]
};

std::vector<ConditionalOutcome> conditional_energetics(
    const MeasurementScheme& m, const Instrument& j, const Hamiltonian& h_s,
    const Hamiltonian& h_a, const State& rho);

}  // namespace objectify
