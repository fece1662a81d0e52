#pragma once

#include <optional>
#include <string>
#include <vector>

#include "objectify/quantum.hpp"

namespace objectify {

// Completely positive trace-non-increasing map in Kraus form.
struct KrausOperation {
  std::size_t dim_in = 0;
  std::size_t dim_out = 0;
  std::vector<ComplexMatrix> kraus;

  KrausOperation() = default;
  KrausOperation(std::size_t din, std::size_t dout,
                 std::vector<ComplexMatrix> ks)
      : dim_in(din), dim_out(dout), kraus(std::move(ks)) {}
  static KrausOperation identity_channel(std::size_t dim);
  bool is_trace_preserving(double tol = 1e-9) const;
};

// Outcome-indexed operations whose total is trace preserving.
struct Instrument {
  std::vector<std::string> outcomes;
  std::vector<KrausOperation> ops;

  std::size_t n_outcomes() const { return ops.size(); }
  std::size_t dim() const { return ops.empty() ? 0 : ops.front().dim_in; }
  std::string label(std::size_t x) const {
    return x < outcomes.size() ? outcomes[x] : std::to_string(x);
  }
};

ValidationReport validate_kraus_operation(const KrausOperation& op,
                                          double tol = 1e-9);
ValidationReport validate_instrument(const Instrument& ins, double tol = 1e-9);

// Schroedinger picture: sum_k K t K^dagger.
ComplexMatrix apply(const KrausOperation& op, const ComplexMatrix& t);
// Heisenberg picture: sum_k K^dagger b K.
ComplexMatrix apply_dual(const KrausOperation& op, const ComplexMatrix& b);

// Nonselective channel of the instrument and its dual.
ComplexMatrix apply_total(const Instrument& ins, const ComplexMatrix& t);
ComplexMatrix apply_total_dual(const Instrument& ins, const ComplexMatrix& b);

// The unique observable measured by the instrument: E_x = op_x^*(1).
Povm induced_observable(const Instrument& ins);

// T -> sqrt(E_x) T sqrt(E_x) for every outcome.
Instrument luders_instrument(const Povm& e);

struct Conditional {
  double probability = 0.0;
  // Empty at (sub-threshold) zero probability; the conditional state is then
  // the null operator by convention.
  std::optional<State> state;
};

Conditional conditional_state(const Instrument& ins, const State& rho,
                              std::size_t outcome,
                              double p_threshold = 1e-12);

struct RepeatabilityCheck {
  bool repeatable = false;
  double max_violation = 0.0;  // max |op_x^*(E_y) - delta_xy E_x|
};

RepeatabilityCheck is_repeatable(const Instrument& ins, double tol = 1e-9);

// J_x(T) = Phi(Z_x T Z_x) for a sharp observable Z and a channel Phi.
Instrument sequential_sharp_instrument(const Povm& z,
                                       const KrausOperation& phi);

// The repeatable instrument whose dual channel depolarises each rank-2
// eigenspace: Phi^*(B) = sum_x tr[B Z_x]/2 Z_x. Requires every effect of the
// sharp observable z to be a rank-2 projection.
Instrument depolarising_objectification(const Povm& z);

// Choi matrix with index convention C[(i,a),(j,b)] = <a| op(|i><j|) |b>.
ComplexMatrix choi_matrix(const KrausOperation& op);
// Kraus operators from a Choi eigendecomposition; eigenvalues below cutoff
// are discarded.
KrausOperation kraus_from_choi(const ComplexMatrix& choi, std::size_t dim_in,
                               std::size_t dim_out, double cutoff = 1e-12);

}  // namespace objectify
