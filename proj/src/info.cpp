#include "objectify/info.hpp"

#include <cmath>

#include "objectify/thermo.hpp"

namespace objectify {

namespace {

constexpr double kEigThreshold = 1e-12;
constexpr double kProbThreshold = 1e-12;

double entropy_of_matrix(const ComplexMatrix& rho) {
  HermitianEig eig = herm_eig(rho);
  double s = 0.0;
  for (double lambda : eig.values)
    if (lambda > kEigThreshold) s -= lambda * std::log(lambda);
  return s;
}

}  // namespace

double von_neumann_entropy(const State& rho) {
  ValidationReport report = validate_state(rho);
  if (!report.ok())
    throw ValidationError("von_neumann_entropy: invalid state: " +
                          report.describe());
  return entropy_of_matrix(rho.matrix);
}

double shannon_entropy(std::span<const double> p) {
  double sum = 0.0;
  for (double v : p) {
    if (v < -kProbThreshold)
      throw ValidationError(
          "shannon_entropy: probability positivity violated, p = " +
          std::to_string(v));
    sum += std::max(v, 0.0);
  }
  if (std::abs(sum - 1.0) > 1e-8)
    throw ValidationError(
        "shannon_entropy: normalisation violated, sum p = " +
        std::to_string(sum));
  double h = 0.0;
  for (double v : p)
    if (v > kProbThreshold) h -= v * std::log(v);
  return h;
}

double holevo_information(std::span<const double> probs,
                          std::span<const State> states) {
  if (probs.size() != states.size())
    throw DimensionError("holevo_information: " + std::to_string(probs.size()) +
                         " probabilities for " + std::to_string(states.size()) +
                         " states");
  if (states.empty()) throw PreconditionError("holevo_information: empty ensemble");
  const std::size_t dim = states.front().dim;
  ComplexMatrix bar = ComplexMatrix::zero(dim, dim);
  double conditional = 0.0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= kProbThreshold) continue;
    if (states[i].dim != dim)
      throw DimensionError("holevo_information: mixed state dimensions");
    bar.add_scaled(probs[i], states[i].matrix);
    conditional += probs[i] * entropy_of_matrix(states[i].matrix);
  }
  return entropy_of_matrix(bar) - conditional;
}

double trace_distance(const State& a, const State& b) {
  if (a.dim != b.dim)
    throw DimensionError("trace_distance: dims " + std::to_string(a.dim) +
                         " vs " + std::to_string(b.dim));
  HermitianEig eig = herm_eig(a.matrix - b.matrix);
  double sum = 0.0;
  for (double v : eig.values) sum += std::abs(v);
  return 0.5 * sum;
}

Hamiltonian default_memory_hamiltonian(std::size_t n_outcomes) {
  std::vector<double> e(n_outcomes);
  for (std::size_t i = 0; i < n_outcomes; ++i) e[i] = double(i);
  return Hamiltonian::diagonal(e);
}

InfoReport daimon_report(const DaimonScenario& sc) {
  const ObjectificationEnsemble& ens = sc.ensemble;
  const std::size_t n = ens.probs.size();
  const std::size_t dim = ens.dim_s * ens.dim_a;
  if (sc.times.size() != n)
    throw PreconditionError("daimon_report: " + std::to_string(sc.times.size()) +
                            " times for " + std::to_string(n) + " outcomes");
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (sc.times[x] == sc.times[y])
        throw PreconditionError(
            "daimon_report: evolution times must be pairwise distinct, g_" +
            std::to_string(x) + " = g_" + std::to_string(y) + " = " +
            std::to_string(sc.times[x]));
  if (sc.h_joint.dim != dim)
    throw DimensionError("daimon_report: hamiltonian dim " +
                         std::to_string(sc.h_joint.dim) + " vs ensemble dim " +
                         std::to_string(dim));
  if (sc.h_memory.dim != n)
    throw DimensionError("daimon_report: memory hamiltonian dim " +
                         std::to_string(sc.h_memory.dim) + " vs " +
                         std::to_string(n) + " outcomes");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && std::abs(sc.h_memory.matrix(i, j)) > 1e-12)
        throw PreconditionError(
            "daimon_report: memory hamiltonian must be diagonal in the "
            "record basis");
      if (i < j &&
          std::abs(sc.h_memory.matrix(i, i) - sc.h_memory.matrix(j, j)) < 1e-12)
        throw PreconditionError(
            "daimon_report: memory hamiltonian eigenvalues must be distinct");
    }

  // Outcome-conditioned evolution sigma_x -> e^{-i g_x H} sigma_x e^{i g_x H}.
  std::vector<std::optional<State>> evolved(n);
  ComplexMatrix released = ComplexMatrix::zero(dim, dim);
  for (std::size_t x = 0; x < n; ++x) {
    if (!ens.sigmas[x] || ens.probs[x] <= kProbThreshold) continue;
    ComplexMatrix v = unitary_from_hamiltonian(sc.h_joint.matrix, sc.times[x]);
    ComplexMatrix moved = (v * ens.sigmas[x]->matrix).mul_adjoint(v);
    released.add_scaled(ens.probs[x], moved);
    evolved[x] = State(dim, std::move(moved));
  }
  State released_state(dim, released);

  InfoReport report;
  report.entropy_sigma_bar_g = entropy_of_matrix(released);
  double sum_p_entropy = 0.0;
  double skew_total = 0.0;
  std::vector<double> probs;
  for (std::size_t x = 0; x < n; ++x) {
    probs.push_back(std::max(ens.probs[x], 0.0));
    if (!evolved[x]) continue;
    sum_p_entropy += ens.probs[x] * entropy_of_matrix(evolved[x]->matrix);
    skew_total +=
        ens.probs[x] *
        variance_decomposition(sc.h_joint, *evolved[x], sc.alpha).quantum;
  }
  report.sum_p_entropy = sum_p_entropy;
  report.shannon = shannon_entropy(probs);
  report.holevo = report.entropy_sigma_bar_g - sum_p_entropy;
  report.entropy_gap = report.holevo - report.shannon;
  // Orthogonal memory records make the joint skew information additive over
  // blocks, so the retained quantity reduces to the block average.
  report.skew_total = skew_total;
  report.skew_marginal =
      variance_decomposition(sc.h_joint, released_state, sc.alpha).quantum;
  report.skew_gap = report.skew_marginal - report.skew_total;

  double kappa = 0.0;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (evolved[x] && evolved[y])
        kappa = std::max(kappa, trace_distance(*evolved[x], *evolved[y]));
  report.kappa = kappa;
  return report;
}

BlockSkewIdentity block_skew_identity_check(std::span<const double> probs,
                                            std::span<const State> sigmas,
                                            const Hamiltonian& h1,
                                            const Hamiltonian& h2,
                                            double alpha) {
  const std::size_t n = probs.size();
  if (sigmas.size() != n)
    throw DimensionError("block_skew_identity_check: " + std::to_string(n) +
                         " probabilities for " + std::to_string(sigmas.size()) +
                         " states");
  if (h1.dim != n)
    throw DimensionError("block_skew_identity_check: h1 dim " +
                         std::to_string(h1.dim) + " vs " + std::to_string(n) +
                         " blocks");
  double offdiag = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) offdiag = std::max(offdiag, std::abs(h1.matrix(i, j)));
  if (offdiag > 1e-12)
    throw PreconditionError(
        "block_skew_identity_check: h1 not diagonal in the block basis, max "
        "off-diagonal = " +
        std::to_string(offdiag));
  double psum = 0.0;
  for (double p : probs) psum += p;
  if (std::abs(psum - 1.0) > 1e-9)
    throw ValidationError(
        "block_skew_identity_check: probabilities sum to " +
        std::to_string(psum));

  const std::size_t d2 = h2.dim;
  ComplexMatrix block_state = ComplexMatrix::zero(n * d2, n * d2);
  double rhs = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (sigmas[i].dim != d2)
      throw DimensionError("block_skew_identity_check: block " +
                           std::to_string(i) + " has dim " +
                           std::to_string(sigmas[i].dim) + " vs h2 dim " +
                           std::to_string(d2));
    for (std::size_t a = 0; a < d2; ++a)
      for (std::size_t b = 0; b < d2; ++b)
        block_state(i * d2 + a, i * d2 + b) =
            probs[i] * sigmas[i].matrix(a, b);
    if (probs[i] > kProbThreshold)
      rhs += probs[i] *
             variance_decomposition(h2, sigmas[i], alpha).quantum;
  }
  Hamiltonian joint(n * d2,
                    lift_first(h1.matrix, d2) + lift_second(n, h2.matrix));
  double lhs =
      variance_decomposition(joint, State(n * d2, block_state), alpha).quantum;
  return BlockSkewIdentity{lhs, rhs, std::abs(lhs - rhs)};
}

}  // namespace objectify
