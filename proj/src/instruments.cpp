#include "objectify/instruments.hpp"

#include <cmath>

namespace objectify {

KrausOperation KrausOperation::identity_channel(std::size_t dim) {
  return KrausOperation(dim, dim, {ComplexMatrix::identity(dim)});
}

bool KrausOperation::is_trace_preserving(double tol) const {
  ComplexMatrix sum = ComplexMatrix::zero(dim_in, dim_in);
  for (const ComplexMatrix& k : kraus) sum += k.adjoint_mul(k);
  return sum.approx_equal(ComplexMatrix::identity(dim_in), tol);
}

ValidationReport validate_kraus_operation(const KrausOperation& op,
                                          double tol) {
  ValidationReport report;
  if (op.kraus.empty()) {
    report.violations.push_back({"operation has no kraus operators", 0.0});
    return report;
  }
  ComplexMatrix sum = ComplexMatrix::zero(op.dim_in, op.dim_in);
  for (const ComplexMatrix& k : op.kraus) {
    if (k.rows() != op.dim_out || k.cols() != op.dim_in) {
      report.violations.push_back(
          {"kraus operator shape mismatch", double(k.rows())});
      return report;
    }
    sum += k.adjoint_mul(k);
  }
  HermitianEig eig = herm_eig(sum, 1e-8);
  if (eig.values.back() > 1.0 + tol)
    report.violations.push_back(
        {"operation trace non-increasing", eig.values.back() - 1.0});
  return report;
}

ValidationReport validate_instrument(const Instrument& ins, double tol) {
  ValidationReport report;
  if (ins.ops.empty()) {
    report.violations.push_back({"instrument has no operations", 0.0});
    return report;
  }
  const std::size_t d = ins.dim();
  ComplexMatrix total = ComplexMatrix::zero(d, d);
  for (std::size_t x = 0; x < ins.ops.size(); ++x) {
    const KrausOperation& op = ins.ops[x];
    if (op.dim_in != d || op.dim_out != d) {
      report.violations.push_back(
          {"instrument operation dims mismatch", double(x)});
      return report;
    }
    ValidationReport sub = validate_kraus_operation(op, tol);
    for (Violation& v : sub.violations) {
      v.invariant += " [" + ins.label(x) + "]";
      report.violations.push_back(v);
    }
    for (const ComplexMatrix& k : op.kraus) total += k.adjoint_mul(k);
  }
  double dev = (total - ComplexMatrix::identity(d)).max_abs();
  if (dev > tol)
    report.violations.push_back({"instrument trace preservation", dev});
  return report;
}

ComplexMatrix apply(const KrausOperation& op, const ComplexMatrix& t) {
  if (t.rows() != op.dim_in || t.cols() != op.dim_in)
    throw DimensionError("apply: operator dim " + std::to_string(t.rows()) +
                         " vs operation input dim " +
                         std::to_string(op.dim_in));
  ComplexMatrix out = ComplexMatrix::zero(op.dim_out, op.dim_out);
  for (const ComplexMatrix& k : op.kraus) out += (k * t).mul_adjoint(k);
  return out;
}

ComplexMatrix apply_dual(const KrausOperation& op, const ComplexMatrix& b) {
  if (b.rows() != op.dim_out || b.cols() != op.dim_out)
    throw DimensionError("apply_dual: operator dim " + std::to_string(b.rows()) +
                         " vs operation output dim " +
                         std::to_string(op.dim_out));
  ComplexMatrix out = ComplexMatrix::zero(op.dim_in, op.dim_in);
  for (const ComplexMatrix& k : op.kraus) out += k.adjoint_mul(b) * k;
  return out;
}

ComplexMatrix apply_total(const Instrument& ins, const ComplexMatrix& t) {
  ComplexMatrix out = ComplexMatrix::zero(ins.dim(), ins.dim());
  for (const KrausOperation& op : ins.ops) out += apply(op, t);
  return out;
}

ComplexMatrix apply_total_dual(const Instrument& ins, const ComplexMatrix& b) {
  ComplexMatrix out = ComplexMatrix::zero(ins.dim(), ins.dim());
  for (const KrausOperation& op : ins.ops) out += apply_dual(op, b);
  return out;
}

Povm induced_observable(const Instrument& ins) {
  Povm e;
  e.dim = ins.dim();
  e.outcomes = ins.outcomes;
  const ComplexMatrix one = ComplexMatrix::identity(e.dim);
  for (const KrausOperation& op : ins.ops)
    e.effects.push_back(apply_dual(op, one));
  return e;
}

Instrument luders_instrument(const Povm& e) {
  ValidationReport report = validate_povm(e);
  if (!report.ok())
    throw ValidationError("luders_instrument: invalid povm: " +
                          report.describe());
  Instrument ins;
  ins.outcomes = e.outcomes;
  for (const ComplexMatrix& effect : e.effects)
    ins.ops.push_back(
        KrausOperation(e.dim, e.dim, {fractional_power(effect, 0.5)}));
  return ins;
}

Conditional conditional_state(const Instrument& ins, const State& rho,
                              std::size_t outcome, double p_threshold) {
  if (outcome >= ins.ops.size())
    throw PreconditionError("conditional_state: outcome index " +
                            std::to_string(outcome) + " out of range");
  ComplexMatrix mapped = apply(ins.ops[outcome], rho.matrix);
  double p = mapped.trace().real();
  if (p <= p_threshold) return Conditional{0.0, std::nullopt};
  return Conditional{p, State(ins.dim(), mapped * cplx(1.0 / p))};
}

RepeatabilityCheck is_repeatable(const Instrument& ins, double tol) {
  Povm e = induced_observable(ins);
  double worst = 0.0;
  for (std::size_t x = 0; x < ins.ops.size(); ++x) {
    for (std::size_t y = 0; y < e.effects.size(); ++y) {
      ComplexMatrix lhs = apply_dual(ins.ops[x], e.effects[y]);
      if (x == y) lhs = lhs - e.effects[x];
      worst = std::max(worst, lhs.max_abs());
    }
  }
  return RepeatabilityCheck{worst <= tol, worst};
}

Instrument sequential_sharp_instrument(const Povm& z,
                                       const KrausOperation& phi) {
  if (!z.is_sharp())
    throw PreconditionError(
        "sequential_sharp_instrument: observable is not sharp");
  if (phi.dim_in != z.dim || phi.dim_out != z.dim)
    throw DimensionError("sequential_sharp_instrument: channel dim " +
                         std::to_string(phi.dim_in) + " vs observable dim " +
                         std::to_string(z.dim));
  if (!phi.is_trace_preserving())
    throw PreconditionError(
        "sequential_sharp_instrument: post-processing map is not trace "
        "preserving");
  Instrument ins;
  ins.outcomes = z.outcomes;
  for (const ComplexMatrix& zx : z.effects) {
    std::vector<ComplexMatrix> ks;
    ks.reserve(phi.kraus.size());
    for (const ComplexMatrix& k : phi.kraus) ks.push_back(k * zx);
    ins.ops.push_back(KrausOperation(z.dim, z.dim, std::move(ks)));
  }
  return ins;
}

Instrument depolarising_objectification(const Povm& z) {
  if (!z.is_sharp())
    throw PreconditionError(
        "depolarising_objectification: observable is not sharp");
  const std::size_t d = z.dim;
  for (std::size_t x = 0; x < z.effects.size(); ++x) {
    double rank = z.effects[x].trace().real();
    if (std::abs(rank - 2.0) > 1e-9)
      throw PreconditionError(
          "depolarising_objectification: effect '" + z.label(x) +
          "' has rank " + std::to_string(rank) + ", expected exactly 2");
  }
  // Choi of Phi(T) = sum_x tr[Z_x T] Z_x / 2, then its Kraus form.
  ComplexMatrix choi(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      ComplexMatrix mapped = ComplexMatrix::zero(d, d);
      for (const ComplexMatrix& zx : z.effects)
        mapped.add_scaled(0.5 * zx(j, i), zx);  // tr[Z_x |i><j|] = <j|Z_x|i>
      for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
          choi(i * d + a, j * d + b) = mapped(a, b);
    }
  KrausOperation phi = kraus_from_choi(choi, d, d);
  return sequential_sharp_instrument(z, phi);
}

ComplexMatrix choi_matrix(const KrausOperation& op) {
  const std::size_t di = op.dim_in, dout = op.dim_out;
  ComplexMatrix choi(di * dout, di * dout);
  for (const ComplexMatrix& k : op.kraus) {
    // rank-1 update with w[(i,a)] = K[a,i]
    for (std::size_t i = 0; i < di; ++i)
      for (std::size_t a = 0; a < dout; ++a) {
        const cplx w = k(a, i);
        if (w == cplx{}) continue;
        for (std::size_t j = 0; j < di; ++j)
          for (std::size_t b = 0; b < dout; ++b)
            choi(i * dout + a, j * dout + b) += w * std::conj(k(b, j));
      }
  }
  return choi;
}

KrausOperation kraus_from_choi(const ComplexMatrix& choi, std::size_t dim_in,
                               std::size_t dim_out, double cutoff) {
  if (choi.rows() != dim_in * dim_out)
    throw DimensionError("kraus_from_choi: choi dim " +
                         std::to_string(choi.rows()) + " vs " +
                         std::to_string(dim_in * dim_out));
  HermitianEig eig = herm_eig(choi, 1e-8);
  KrausOperation op(dim_in, dim_out, {});
  // Descending order so the dominant Kraus operator comes first.
  for (std::size_t idx = eig.values.size(); idx-- > 0;) {
    const double lambda = eig.values[idx];
    if (lambda < cutoff) continue;
    const double scale = std::sqrt(lambda);
    ComplexMatrix k(dim_out, dim_in);
    for (std::size_t i = 0; i < dim_in; ++i)
      for (std::size_t a = 0; a < dim_out; ++a)
        k(a, i) = scale * eig.vectors(i * dim_out + a, idx);
    op.kraus.push_back(std::move(k));
  }
  if (op.kraus.empty())
    op.kraus.push_back(ComplexMatrix::zero(dim_out, dim_in));
  return op;
}

}  // namespace objectify
