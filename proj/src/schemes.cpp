#include "objectify/schemes.hpp"

#include <cmath>
#include <limits>
#include <numeric>

namespace objectify {

namespace {

constexpr double kProbThreshold = 1e-12;

// Pointwise check that an instrument measures the scheme's pointer
// observable; outcomes are aligned by index.
double compatibility_deviation(const Instrument& j, const Povm& z) {
  if (j.n_outcomes() != z.n_outcomes() || j.dim() != z.dim)
    return std::numeric_limits<double>::infinity();
  Povm induced = induced_observable(j);
  double worst = 0.0;
  for (std::size_t x = 0; x < z.effects.size(); ++x)
    worst = std::max(worst,
                     (induced.effects[x] - z.effects[x]).max_abs());
  return worst;
}

}  // namespace

ValidationReport validate_scheme(const MeasurementScheme& m, double tol) {
  ValidationReport report;
  if (m.xi.dim != m.dim_a)
    report.violations.push_back(
        {"scheme apparatus state dimension", double(m.xi.dim)});
  ValidationReport xi_report = validate_state(m.xi, tol);
  for (Violation& v : xi_report.violations) {
    v.invariant = "scheme xi: " + v.invariant;
    report.violations.push_back(v);
  }
  if (m.u.rows() != m.joint_dim() || !m.u.is_square())
    report.violations.push_back(
        {"scheme coupling dimension", double(m.u.rows())});
  else {
    double udev =
        (m.u.adjoint_mul(m.u) - ComplexMatrix::identity(m.joint_dim()))
            .max_abs();
    if (udev > tol)
      report.violations.push_back({"scheme coupling unitarity", udev});
  }
  if (m.z.dim != m.dim_a)
    report.violations.push_back(
        {"scheme pointer observable dimension", double(m.z.dim)});
  ValidationReport z_report = validate_povm(m.z, tol);
  for (Violation& v : z_report.violations) {
    v.invariant = "scheme pointer: " + v.invariant;
    report.violations.push_back(v);
  }
  return report;
}

Premeasured premeasure(const MeasurementScheme& m, const State& rho) {
  if (rho.dim != m.dim_s)
    throw DimensionError("premeasure: state dim " + std::to_string(rho.dim) +
                         " vs scheme system dim " + std::to_string(m.dim_s));
  ComplexMatrix joint = tensor(rho.matrix, m.xi.matrix);
  ComplexMatrix evolved = (m.u * joint).mul_adjoint(m.u);
  State joint_state(m.joint_dim(), evolved);
  State eta(m.dim_a, partial_trace(evolved, m.dim_s, m.dim_a, Keep::Second));
  return Premeasured{std::move(joint_state), std::move(eta)};
}

Instrument induced_instrument(const MeasurementScheme& m) {
  const std::size_t ds = m.dim_s, da = m.dim_a;
  Instrument ins;
  ins.outcomes = m.z.outcomes;
  for (const ComplexMatrix& zx : m.z.effects) {
    ComplexMatrix lifted = lift_second(ds, zx);
    ComplexMatrix choi(ds * ds, ds * ds);
    for (std::size_t i = 0; i < ds; ++i)
      for (std::size_t j = 0; j < ds; ++j) {
        ComplexMatrix t = tensor(ComplexMatrix::basis_op(ds, i, j),
                                 m.xi.matrix);
        ComplexMatrix evolved = (m.u * t).mul_adjoint(m.u);
        ComplexMatrix mapped =
            partial_trace(lifted * evolved, ds, da, Keep::First);
        for (std::size_t a = 0; a < ds; ++a)
          for (std::size_t b = 0; b < ds; ++b)
            choi(i * ds + a, j * ds + b) = mapped(a, b);
      }
    // CP maps have Hermitian Choi matrices; enforce against round-off.
    choi = (choi + choi.adjoint()) * cplx(0.5);
    ins.ops.push_back(kraus_from_choi(choi, ds, ds));
  }
  return ins;
}

ObjectificationEnsemble objectify_pointer(const MeasurementScheme& m,
                                  const Instrument& pointer_instrument,
                                  const State& rho, double tol) {
  double dev = compatibility_deviation(pointer_instrument, m.z);
  if (dev > tol)
    throw PreconditionError(
        "objectify: pointer instrument incompatible with Z, max effect "
        "deviation = " +
        std::to_string(dev));
  RepeatabilityCheck rep = is_repeatable(pointer_instrument, tol);
  if (!rep.repeatable)
    throw PreconditionError(
        "objectify: pointer instrument is not repeatable (max violation = " +
        std::to_string(rep.max_violation) +
        "), objectification is undefined");
  Premeasured pre = premeasure(m, rho);

  ObjectificationEnsemble ens;
  ens.dim_s = m.dim_s;
  ens.dim_a = m.dim_a;
  ens.outcomes = pointer_instrument.outcomes;
  ComplexMatrix bar = ComplexMatrix::zero(m.joint_dim(), m.joint_dim());
  for (const KrausOperation& op : pointer_instrument.ops) {
    ComplexMatrix tau = ComplexMatrix::zero(m.joint_dim(), m.joint_dim());
    for (const ComplexMatrix& k : op.kraus) {
      ComplexMatrix lifted = lift_second(m.dim_s, k);
      tau += (lifted * pre.joint.matrix).mul_adjoint(lifted);
    }
    bar += tau;
    double p = tau.trace().real();
    if (p <= kProbThreshold) {
      ens.probs.push_back(0.0);
      ens.sigmas.push_back(std::nullopt);
    } else {
      ens.probs.push_back(p);
      ens.sigmas.push_back(State(m.joint_dim(), tau * cplx(1.0 / p)));
    }
  }
  ens.sigma_bar = State(m.joint_dim(), std::move(bar));
  return ens;
}

AgreementCheck implementation_independence_check(const MeasurementScheme& m,
                                                 const Instrument& j1,
                                                 const Instrument& j2,
                                                 const State& rho,
                                                 double tol) {
  for (const Instrument* j : {&j1, &j2}) {
    double dev = compatibility_deviation(*j, m.z);
    if (dev > 1e-8)
      throw PreconditionError(
          "implementation_independence_check: pointer instrument "
          "incompatible with Z, max effect deviation = " +
          std::to_string(dev));
  }
  Premeasured pre = premeasure(m, rho);
  double worst = 0.0;
  for (std::size_t x = 0; x < j1.n_outcomes(); ++x) {
    ComplexMatrix m1 = ComplexMatrix::zero(m.joint_dim(), m.joint_dim());
    ComplexMatrix m2 = m1;
    for (const ComplexMatrix& k : j1.ops[x].kraus) {
      ComplexMatrix lifted = lift_second(m.dim_s, k);
      m1 += (lifted * pre.joint.matrix).mul_adjoint(lifted);
    }
    for (const ComplexMatrix& k : j2.ops[x].kraus) {
      ComplexMatrix lifted = lift_second(m.dim_s, k);
      m2 += (lifted * pre.joint.matrix).mul_adjoint(lifted);
    }
    ComplexMatrix r1 = partial_trace(m1, m.dim_s, m.dim_a, Keep::First);
    ComplexMatrix r2 = partial_trace(m2, m.dim_s, m.dim_a, Keep::First);
    worst = std::max(worst, (r1 - r2).max_abs());
  }
  return AgreementCheck{worst <= tol, worst};
}

NormalLudersScheme normal_scheme_for_luders(
    const Povm& e, std::span<const double> pointer_energies) {
  ValidationReport report = validate_povm(e);
  if (!report.ok())
    throw ValidationError("normal_scheme_for_luders: invalid povm: " +
                          report.describe());
  const std::size_t ds = e.dim;
  const std::size_t da = e.n_outcomes();
  std::vector<double> energies(pointer_energies.begin(),
                               pointer_energies.end());
  if (energies.empty()) {
    energies.resize(da);
    std::iota(energies.begin(), energies.end(), 0.0);
  }
  if (energies.size() != da)
    throw PreconditionError("normal_scheme_for_luders: " +
                            std::to_string(energies.size()) +
                            " pointer energies for " + std::to_string(da) +
                            " outcomes");

  // Isometry column i: sum_x sqrt(E_x)|i> (x) |e_x>.
  ComplexMatrix v(ds * da, ds);
  for (std::size_t x = 0; x < da; ++x) {
    ComplexMatrix root = fractional_power(e.effects[x], 0.5);
    for (std::size_t s = 0; s < ds; ++s)
      for (std::size_t i = 0; i < ds; ++i) v(s * da + x, i) = root(s, i);
  }
  ComplexMatrix w = complete_isometry(v);
  // Route column i of the completed matrix to joint input |i> (x) |e_0>; the
  // remaining columns fill the |i> (x) |e_a>, a >= 1, slots in order.
  ComplexMatrix u(ds * da, ds * da);
  for (std::size_t i = 0; i < ds; ++i)
    for (std::size_t a = 0; a < da; ++a) {
      const std::size_t src = (a == 0) ? i : ds + i * (da - 1) + (a - 1);
      for (std::size_t r = 0; r < ds * da; ++r) u(r, i * da + a) = w(r, src);
    }

  MeasurementScheme scheme;
  scheme.dim_s = ds;
  scheme.dim_a = da;
  scheme.xi = State::basis(da, 0);
  scheme.u = std::move(u);
  scheme.z = Povm::sharp_basis(da, e.outcomes);
  return NormalLudersScheme{std::move(scheme),
                            Hamiltonian::diagonal(energies)};
}

YanaseCheck check_yanase(const Povm& z, const Hamiltonian& h_a, double tol) {
  if (z.dim != h_a.dim)
    throw DimensionError("check_yanase: observable dim " +
                         std::to_string(z.dim) + " vs hamiltonian dim " +
                         std::to_string(h_a.dim));
  double worst = 0.0;
  for (const ComplexMatrix& zx : z.effects) {
    ComplexMatrix comm = zx * h_a.matrix - h_a.matrix * zx;
    worst = std::max(worst, comm.max_abs());
  }
  return YanaseCheck{worst <= tol, worst};
}

double stability_probability(const MeasurementScheme& m, const Instrument& j,
                             const State& rho, std::size_t outcome,
                             const Hamiltonian& h_a, double g) {
  ObjectificationEnsemble ens = objectify_pointer(m, j, rho);
  if (outcome >= ens.sigmas.size() || !ens.sigmas[outcome])
    throw PreconditionError(
        "stability_probability: outcome '" +
        (outcome < ens.outcomes.size() ? ens.outcomes[outcome]
                                       : std::to_string(outcome)) +
        "' has vanishing probability");
  ComplexMatrix va = unitary_from_hamiltonian(h_a.matrix, g);
  ComplexMatrix z_evolved = va.adjoint_mul(m.z.effects[outcome] * va);
  ComplexMatrix lifted = lift_second(m.dim_s, z_evolved);
  return trace_product(lifted, ens.sigmas[outcome]->matrix).real();
}

}  // namespace objectify
