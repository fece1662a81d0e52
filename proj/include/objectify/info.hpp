#pragma once

#include "objectify/schemes.hpp"

namespace objectify {

// -tr[rho ln rho] in nats; eigenvalues below 1e-12 contribute nothing.
double von_neumann_entropy(const State& rho);

// -sum p ln p in nats with 0 ln 0 = 0.
double shannon_entropy(std::span<const double> p);

// chi = S(sum p_x rho_x) - sum p_x S(rho_x).
double holevo_information(std::span<const double> probs,
                          std::span<const State> states);

// Half trace norm of the difference of two states.
double trace_distance(const State& a, const State& b);

// Objectified ensemble handed to an agent that applies an outcome-dependent
// time evolution exp(-i g_x H) before releasing the marginal to the observer.
struct DaimonScenario {
  ObjectificationEnsemble ensemble;
  std::vector<double> times;  // g_x, pairwise distinct
  Hamiltonian h_joint;        // additive system+apparatus Hamiltonian
  Hamiltonian h_memory;       // diagonal with distinct eigenvalues
  double alpha = 0.5;
};

Hamiltonian default_memory_hamiltonian(std::size_t n_outcomes);

struct InfoReport {
  double entropy_sigma_bar_g = 0.0;  // S of the released mixture
  double sum_p_entropy = 0.0;        // sum p_x S(sigma_x)
  double shannon = 0.0;              // H of the outcome distribution
  double holevo = 0.0;               // chi of the released ensemble
  double entropy_gap = 0.0;          // chi - H  (<= 0)
  double skew_total = 0.0;     // skew information held with the memory
  double skew_marginal = 0.0;  // skew information of the released mixture
  double skew_gap = 0.0;       // marginal - total  (<= 0)
  double kappa = 0.0;          // max pairwise trace distance, diagnostic
};

InfoReport daimon_report(const DaimonScenario& sc);

// V_qu(H1 (x) 1 + 1 (x) H2, sum_i p_i |i><i| (x) sigma_i) computed directly
// on the joint space (lhs) versus the block form sum_i p_i V_qu(H2, sigma_i)
// (rhs). The identity requires h1 diagonal in the block basis.
struct BlockSkewIdentity {
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
};

BlockSkewIdentity block_skew_identity_check(std::span<const double> probs,
                                            std::span<const State> sigmas,
                                            const Hamiltonian& h1,
                                            const Hamiltonian& h2,
                                            double alpha);

}  // namespace objectify
