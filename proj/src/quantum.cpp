#include "objectify/quantum.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace objectify {

std::string ValidationReport::describe() const {
  if (ok()) return "valid";
  std::ostringstream os;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    if (i) os << "; ";
    os << violations[i].invariant << " (magnitude " << violations[i].magnitude
       << ")";
  }
  return os.str();
}

State State::pure(const std::vector<cplx>& amplitudes) {
  const std::size_t d = amplitudes.size();
  double norm = 0.0;
  for (const cplx& a : amplitudes) norm += std::norm(a);
  if (norm <= 0.0) throw PreconditionError("pure state from zero vector");
  ComplexMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      m(i, j) = amplitudes[i] * std::conj(amplitudes[j]) / norm;
  return State(d, std::move(m));
}

State State::basis(std::size_t dim, std::size_t index) {
  ComplexMatrix m(dim, dim);
  m(index, index) = 1.0;
  return State(dim, std::move(m));
}

State State::maximally_mixed(std::size_t dim) {
  ComplexMatrix m(dim, dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0 / double(dim);
  return State(dim, std::move(m));
}

Povm Povm::sharp_basis(std::size_t dim, std::vector<std::string> labels) {
  Povm p;
  p.dim = dim;
  for (std::size_t i = 0; i < dim; ++i) {
    p.effects.push_back(ComplexMatrix::basis_op(dim, i, i));
    p.outcomes.push_back(labels.empty() ? std::to_string(i) : labels[i]);
  }
  return p;
}

bool Povm::is_sharp(double tol) const {
  for (std::size_t x = 0; x < effects.size(); ++x)
    for (std::size_t y = 0; y < effects.size(); ++y) {
      ComplexMatrix prod = effects[x] * effects[y];
      const ComplexMatrix& expect =
          (x == y) ? effects[x] : ComplexMatrix::zero(dim, dim);
      if (!prod.approx_equal(expect, tol)) return false;
    }
  return true;
}

Hamiltonian Hamiltonian::diagonal(std::span<const double> energies) {
  return Hamiltonian(energies.size(), ComplexMatrix::diagonal(energies));
}

Hamiltonian Hamiltonian::zero(std::size_t dim) {
  return Hamiltonian(dim, ComplexMatrix::zero(dim, dim));
}

ValidationReport validate_state(const State& s, double tol) {
  ValidationReport report;
  if (!s.matrix.is_square() || s.matrix.rows() != s.dim) {
    report.violations.push_back(
        {"state dimension mismatch", double(s.matrix.rows())});
    return report;
  }
  double herm_dev = (s.matrix - s.matrix.adjoint()).max_abs();
  if (herm_dev > tol)
    report.violations.push_back({"state hermiticity", herm_dev});
  else {
    HermitianEig eig = herm_eig(s.matrix, std::max(tol, herm_dev * 2));
    if (!eig.values.empty() && eig.values.front() < -tol)
      report.violations.push_back({"state positivity", -eig.values.front()});
  }
  double trace_dev = std::abs(s.matrix.trace() - cplx(1.0));
  if (trace_dev > tol)
    report.violations.push_back({"state unit trace", trace_dev});
  return report;
}

ValidationReport validate_povm(const Povm& p, double tol) {
  ValidationReport report;
  if (p.effects.empty()) {
    report.violations.push_back({"povm has no effects", 0.0});
    return report;
  }
  if (p.outcomes.size() != p.effects.size())
    report.violations.push_back(
        {"povm outcome labels count", double(p.outcomes.size())});
  ComplexMatrix sum = ComplexMatrix::zero(p.dim, p.dim);
  for (std::size_t x = 0; x < p.effects.size(); ++x) {
    const ComplexMatrix& e = p.effects[x];
    if (!e.is_square() || e.rows() != p.dim) {
      report.violations.push_back({"effect dimension mismatch", double(x)});
      return report;
    }
    double herm_dev = (e - e.adjoint()).max_abs();
    if (herm_dev > tol) {
      report.violations.push_back({"effect hermiticity [" + p.label(x) + "]",
                                   herm_dev});
      continue;
    }
    HermitianEig eig = herm_eig(e, std::max(tol, herm_dev * 2));
    if (eig.values.front() < -tol)
      report.violations.push_back(
          {"effect positivity [" + p.label(x) + "]", -eig.values.front()});
    if (eig.values.back() > 1.0 + tol)
      report.violations.push_back(
          {"effect bounded by identity [" + p.label(x) + "]",
           eig.values.back() - 1.0});
    sum += e;
  }
  double comp_dev = (sum - ComplexMatrix::identity(p.dim)).max_abs();
  if (comp_dev > tol)
    report.violations.push_back({"povm completeness", comp_dev});
  return report;
}

ValidationReport validate_hamiltonian(const Hamiltonian& h, double tol) {
  ValidationReport report;
  if (!h.matrix.is_square() || h.matrix.rows() != h.dim) {
    report.violations.push_back(
        {"hamiltonian dimension mismatch", double(h.matrix.rows())});
    return report;
  }
  double herm_dev = (h.matrix - h.matrix.adjoint()).max_abs();
  if (herm_dev > tol)
    report.violations.push_back({"hamiltonian hermiticity", herm_dev});
  return report;
}

std::vector<double> born_probabilities(const Povm& e, const State& rho) {
  if (e.dim != rho.dim)
    throw DimensionError("born_probabilities: povm dim " +
                         std::to_string(e.dim) + " vs state dim " +
                         std::to_string(rho.dim));
  constexpr double kClamp = 1e-12;
  std::vector<double> probs;
  probs.reserve(e.effects.size());
  for (std::size_t x = 0; x < e.effects.size(); ++x) {
    double p = trace_product(e.effects[x], rho.matrix).real();
    if (p < 0.0) {
      if (p <= -kClamp)
        throw ValidationError(
            "born probability positivity violated for outcome '" +
            e.label(x) + "': p = " + std::to_string(p));
      p = 0.0;
    }
    probs.push_back(p);
  }
  return probs;
}

ComplexMatrix eigenvalue_one_projector(const ComplexMatrix& effect,
                                       double tol) {
  HermitianEig eig = herm_eig(effect);
  const std::size_t n = effect.rows();
  ComplexMatrix proj = ComplexMatrix::zero(n, n);
  for (std::size_t i = 0; i < eig.values.size(); ++i) {
    if (eig.values[i] < 1.0 - tol || eig.values[i] > 1.0 + tol) continue;
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c)
        proj(r, c) += eig.vectors(r, i) * std::conj(eig.vectors(c, i));
  }
  return proj;
}

ObjectificationSupport admits_objectification(const Povm& p, double tol) {
  ObjectificationSupport out;
  out.admits = true;
  for (const ComplexMatrix& e : p.effects) {
    HermitianEig eig = herm_eig(e);
    std::size_t rank = 0;
    for (double v : eig.values)
      if (v >= 1.0 - tol && v <= 1.0 + tol) ++rank;
    out.ranks.push_back(rank);
    if (rank == 0) out.admits = false;
  }
  return out;
}

}  // namespace objectify
