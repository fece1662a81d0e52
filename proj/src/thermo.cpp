#include "objectify/thermo.hpp"

#include <cmath>

namespace objectify {

namespace {

constexpr double kProbThreshold = 1e-12;

ComplexMatrix joint_hamiltonian(const Hamiltonian& h_s, const Hamiltonian& h_a) {
  return lift_first(h_s.matrix, h_a.dim) + lift_second(h_s.dim, h_a.matrix);
}

void check_dims(const MeasurementScheme& m, const Hamiltonian& h_s,
                const Hamiltonian& h_a, const State& rho) {
  if (h_s.dim != m.dim_s || h_a.dim != m.dim_a || rho.dim != m.dim_s)
    throw DimensionError(
        "energetics: dims (H_S " + std::to_string(h_s.dim) + ", H_A " +
        std::to_string(h_a.dim) + ", rho " + std::to_string(rho.dim) +
        ") do not match scheme (" + std::to_string(m.dim_s) + ", " +
        std::to_string(m.dim_a) + ")");
}

double expectation(const ComplexMatrix& observable, const ComplexMatrix& op) {
  return trace_product(observable, op).real();
}

}  // namespace

WorkReport premeasurement_work(const MeasurementScheme& m,
                               const Hamiltonian& h_s, const Hamiltonian& h_a,
                               const State& rho) {
  check_dims(m, h_s, h_a, rho);
  ComplexMatrix h = joint_hamiltonian(h_s, h_a);
  ComplexMatrix initial = tensor(rho.matrix, m.xi.matrix);
  ComplexMatrix heisenberg = (m.u.adjoint_mul(h)) * m.u - h;
  WorkReport report;
  report.value = expectation(heisenberg, initial);

  Premeasured pre = premeasure(m, rho);
  ComplexMatrix rho_out =
      partial_trace(pre.joint.matrix, m.dim_s, m.dim_a, Keep::First);
  report.marginal_form =
      expectation(h_s.matrix, rho_out - rho.matrix) +
      expectation(h_a.matrix, pre.apparatus.matrix - m.xi.matrix);
  report.residual = std::abs(report.value - report.marginal_form);
  return report;
}

EnergeticsReport measurement_energetics(const MeasurementScheme& m,
                                        const Instrument& j,
                                        const Hamiltonian& h_s,
                                        const Hamiltonian& h_a,
                                        const State& rho) {
  check_dims(m, h_s, h_a, rho);
  EnergeticsReport report;
  report.work = premeasurement_work(m, h_s, h_a, rho);

  ObjectificationEnsemble ens = objectify_pointer(m, j, rho);
  Premeasured pre = premeasure(m, rho);
  ComplexMatrix h = joint_hamiltonian(h_s, h_a);
  ComplexMatrix initial = tensor(rho.matrix, m.xi.matrix);
  const double e_initial = expectation(h, initial);
  const double e_premeasured = expectation(h, pre.joint.matrix);

  for (std::size_t x = 0; x < ens.probs.size(); ++x) {
    OutcomeEnergetics row;
    row.outcome = x < ens.outcomes.size() ? ens.outcomes[x] : std::to_string(x);
    row.probability = ens.probs[x];
    if (ens.sigmas[x]) {
      const ComplexMatrix& sigma = ens.sigmas[x]->matrix;
      ComplexMatrix rho_x = partial_trace(sigma, m.dim_s, m.dim_a, Keep::First);
      ComplexMatrix xi_x = partial_trace(sigma, m.dim_s, m.dim_a, Keep::Second);
      row.delta_e = expectation(h, sigma) - e_initial;
      row.delta_e_system = expectation(h_s.matrix, rho_x - rho.matrix);
      row.delta_e_apparatus = expectation(h_a.matrix, xi_x - m.xi.matrix);
      row.heat = expectation(h, sigma) - e_premeasured;
    }
    // Zero-probability outcomes keep all energy fields at 0 by convention.
    report.avg_delta_e += row.probability * row.delta_e;
    report.avg_heat += row.probability * row.heat;
    report.per_outcome.push_back(std::move(row));
  }
  report.first_law_residual =
      report.avg_delta_e - report.work.value - report.avg_heat;

  // <Q> depends only on apparatus degrees of freedom.
  ComplexMatrix j_eta = apply_total(j, pre.apparatus.matrix);
  double apparatus_form =
      expectation(h_a.matrix, j_eta - pre.apparatus.matrix);
  report.avg_heat_apparatus_residual =
      std::abs(report.avg_heat - apparatus_form);
  return report;
}

VarianceDecomposition variance_decomposition(const Hamiltonian& a,
                                             const State& rho, double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0))
    throw PreconditionError("variance_decomposition: alpha = " +
                            std::to_string(alpha) + " outside (0, 1)");
  if (a.dim != rho.dim)
    throw DimensionError("variance_decomposition: observable dim " +
                         std::to_string(a.dim) + " vs state dim " +
                         std::to_string(rho.dim));
  const ComplexMatrix& obs = a.matrix;
  const double mean = expectation(obs, rho.matrix);
  const double second_moment = expectation(obs * obs, rho.matrix);
  ComplexMatrix pow_alpha = fractional_power(rho.matrix, alpha);
  ComplexMatrix pow_rest = fractional_power(rho.matrix, 1.0 - alpha);
  const double cross =
      trace_product(obs * pow_alpha, obs * pow_rest).real();
  VarianceDecomposition out;
  out.variance = second_moment - mean * mean;
  out.quantum = second_moment - cross;
  out.classical = out.variance - out.quantum;
  return out;
}

VarianceReport heat_variance(const ObjectificationEnsemble& ensemble,
                             const Hamiltonian& h_joint, double alpha) {
  const std::size_t dim = ensemble.dim_s * ensemble.dim_a;
  if (h_joint.dim != dim)
    throw DimensionError("heat_variance: hamiltonian dim " +
                         std::to_string(h_joint.dim) + " vs ensemble dim " +
                         std::to_string(dim));
  VarianceReport report;
  report.alpha = alpha;

  // The premeasured-state energy shifts every Q(x) equally and cancels in
  // the variance, so the direct route only needs tr[H sigma_x].
  double mean_e = 0.0, mean_e2 = 0.0;
  double sum_v = 0.0, sum_vqu = 0.0, sum_vcl = 0.0;
  for (std::size_t x = 0; x < ensemble.probs.size(); ++x) {
    const double p = ensemble.probs[x];
    if (p <= kProbThreshold || !ensemble.sigmas[x]) continue;
    const State& sigma = *ensemble.sigmas[x];
    const double e = expectation(h_joint.matrix, sigma.matrix);
    mean_e += p * e;
    mean_e2 += p * e * e;
    VarianceDecomposition dec = variance_decomposition(h_joint, sigma, alpha);
    StateVariance row{ensemble.outcomes[x], dec.variance, dec.quantum,
                      dec.classical};
    report.per_state.push_back(row);
    sum_v += p * dec.variance;
    sum_vqu += p * dec.quantum;
    sum_vcl += p * dec.classical;
  }
  VarianceDecomposition mix =
      variance_decomposition(h_joint, ensemble.sigma_bar, alpha);
  report.mixture = StateVariance{"mixture", mix.variance, mix.quantum,
                                 mix.classical};
  report.var_q = mean_e2 - mean_e * mean_e;
  report.var_q_formula = mix.variance - sum_v;
  report.residual = std::abs(report.var_q - report.var_q_formula);
  report.delta_v_qu = sum_vqu - mix.quantum;
  report.delta_v_cl = mix.classical - sum_vcl;
  return report;
}

FixedPointCheck fixed_point_check(const Instrument& j, const Hamiltonian& h_a,
                                  double tol) {
  if (j.dim() != h_a.dim)
    throw DimensionError("fixed_point_check: instrument dim " +
                         std::to_string(j.dim()) + " vs hamiltonian dim " +
                         std::to_string(h_a.dim));
  ComplexMatrix mapped = apply_total_dual(j, h_a.matrix);
  double dev = (mapped - h_a.matrix).max_abs();
  return FixedPointCheck{dev <= tol, dev};
}

std::vector<ConditionalOutcome> conditional_energetics(
    const MeasurementScheme& m, const Instrument& j, const Hamiltonian& h_s,
    const Hamiltonian& h_a, const State& rho) {
  check_dims(m, h_s, h_a, rho);
  if (!m.z.is_sharp())
    throw PreconditionError(
        "conditional_energetics: pointer observable must be sharp");
  YanaseCheck yanase = check_yanase(m.z, h_a);
  if (!yanase.ok)
    throw PreconditionError(
        "conditional_energetics: Yanase condition violated, max commutator "
        "norm = " +
        std::to_string(yanase.max_commutator_norm));

  ObjectificationEnsemble actual = objectify_pointer(m, j, rho);
  Instrument luders = luders_instrument(m.z);
  ObjectificationEnsemble counterfactual = objectify_pointer(m, luders, rho);

  ComplexMatrix h = joint_hamiltonian(h_s, h_a);
  ComplexMatrix initial = tensor(rho.matrix, m.xi.matrix);
  ComplexMatrix anti_joint = h * initial + initial * h;  // H rho(x)xi + h.c.
  ComplexMatrix anti_sys = h_s.matrix * rho.matrix + rho.matrix * h_s.matrix;
  Povm e = induced_observable(induced_instrument(m));

  std::vector<ConditionalOutcome> rows;
  for (std::size_t x = 0; x < actual.probs.size(); ++x) {
    ConditionalOutcome row;
    row.outcome =
        x < actual.outcomes.size() ? actual.outcomes[x] : std::to_string(x);
    row.probability = actual.probs[x];
    if (row.probability > kProbThreshold && actual.sigmas[x] &&
        counterfactual.sigmas[x]) {
      const double p = row.probability;
      // Heisenberg-evolved pointer effect U^dagger (1 (x) Z_x) U.
      ComplexMatrix z_heis =
          (m.u.adjoint_mul(lift_second(m.dim_s, m.z.effects[x]))) * m.u;
      const double weak_joint =
          0.5 * trace_product(z_heis, anti_joint).real() / p;
      const double weak_sys =
          0.5 * trace_product(e.effects[x], anti_sys).real() / p;

      const ComplexMatrix& sigma = actual.sigmas[x]->matrix;
      const ComplexMatrix& sigma_l = counterfactual.sigmas[x]->matrix;
      ComplexMatrix rho_x = partial_trace(sigma, m.dim_s, m.dim_a, Keep::First);

      row.delta_e_total = expectation(h, sigma) - weak_joint;
      row.delta_e_system = expectation(h_s.matrix, rho_x) - weak_sys;
      row.work = expectation(h, sigma_l) - weak_joint;
      row.heat = expectation(h, sigma - sigma_l);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace objectify
