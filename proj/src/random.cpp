#include "objectify/random.hpp"

#include <cmath>

namespace objectify::rnd {

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

ComplexMatrix ginibre(Rng& rng, std::size_t rows, std::size_t cols) {
  ComplexMatrix g(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      g(i, j) = cplx(rng.normal(), rng.normal());
  return g;
}

ComplexMatrix unitary(Rng& rng, std::size_t dim) {
  // Gram-Schmidt on a Ginibre matrix; retry on (measure-zero) degeneracy.
  for (int attempt = 0; attempt < 8; ++attempt) {
    ComplexMatrix g = ginibre(rng, dim, dim);
    std::vector<std::vector<cplx>> cols;
    bool ok = true;
    for (std::size_t j = 0; j < dim && ok; ++j) {
      std::vector<cplx> w(dim);
      for (std::size_t i = 0; i < dim; ++i) w[i] = g(i, j);
      for (int pass = 0; pass < 2; ++pass) {
        for (const auto& c : cols) {
          cplx ov = 0.0;
          for (std::size_t i = 0; i < dim; ++i) ov += std::conj(c[i]) * w[i];
          for (std::size_t i = 0; i < dim; ++i) w[i] -= ov * c[i];
        }
      }
      double norm = 0.0;
      for (const cplx& x : w) norm += std::norm(x);
      norm = std::sqrt(norm);
      if (norm < 1e-8) {
        ok = false;
        break;
      }
      for (cplx& x : w) x /= norm;
      cols.push_back(std::move(w));
    }
    if (!ok) continue;
    ComplexMatrix u(dim, dim);
    for (std::size_t j = 0; j < dim; ++j)
      for (std::size_t i = 0; i < dim; ++i) u(i, j) = cols[j][i];
    return u;
  }
  throw Error("random unitary generation failed");
}

State pure_state(Rng& rng, std::size_t dim) {
  std::vector<cplx> amp(dim);
  for (cplx& a : amp) a = cplx(rng.normal(), rng.normal());
  return State::pure(amp);
}

State state(Rng& rng, std::size_t dim, std::size_t rank) {
  if (rank == 0) rank = dim;
  ComplexMatrix g = ginibre(rng, dim, rank);
  ComplexMatrix rho = g.mul_adjoint(g);
  double tr = rho.trace().real();
  return State(dim, rho * cplx(1.0 / tr));
}

Hamiltonian hamiltonian(Rng& rng, std::size_t dim, double scale) {
  ComplexMatrix g = ginibre(rng, dim, dim);
  ComplexMatrix h = (g + g.adjoint()) * cplx(0.5 * scale);
  return Hamiltonian(dim, std::move(h));
}

std::vector<double> probability_vector(Rng& rng, std::size_t n) {
  std::vector<double> p(n);
  double sum = 0.0;
  for (double& v : p) {
    v = -std::log(std::max(rng.uniform(), 1e-300));
    sum += v;
  }
  for (double& v : p) v /= sum;
  return p;
}

namespace {

// Random split of dim into n nonempty group sizes.
std::vector<std::size_t> random_split(Rng& rng, std::size_t dim,
                                      std::size_t n) {
  if (n == 0 || n > dim)
    throw PreconditionError("random_split: cannot split dim " +
                            std::to_string(dim) + " into " +
                            std::to_string(n) + " nonempty groups");
  std::vector<std::size_t> sizes(n, 1);
  for (std::size_t extra = dim - n; extra > 0; --extra)
    ++sizes[rng.integer(n)];
  return sizes;
}

Povm sharp_from_basis(const ComplexMatrix& basis,
                      const std::vector<std::size_t>& sizes) {
  const std::size_t dim = basis.rows();
  Povm z;
  z.dim = dim;
  std::size_t offset = 0;
  for (std::size_t x = 0; x < sizes.size(); ++x) {
    ComplexMatrix e = ComplexMatrix::zero(dim, dim);
    for (std::size_t k = 0; k < sizes[x]; ++k) {
      const std::size_t col = offset + k;
      for (std::size_t i = 0; i < dim; ++i)
        for (std::size_t j = 0; j < dim; ++j)
          e(i, j) += basis(i, col) * std::conj(basis(j, col));
    }
    offset += sizes[x];
    z.effects.push_back(std::move(e));
    z.outcomes.push_back(std::to_string(x));
  }
  return z;
}

}  // namespace

Povm sharp_povm(Rng& rng, std::size_t dim, std::size_t n_outcomes) {
  return sharp_from_basis(unitary(rng, dim),
                          random_split(rng, dim, n_outcomes));
}

Povm sharp_povm_rank2(Rng& rng, std::size_t n_outcomes) {
  return sharp_from_basis(unitary(rng, 2 * n_outcomes),
                          std::vector<std::size_t>(n_outcomes, 2));
}

Povm unsharp_povm(Rng& rng, std::size_t dim, std::size_t n_outcomes) {
  std::vector<ComplexMatrix> raw;
  ComplexMatrix sum = ComplexMatrix::zero(dim, dim);
  for (std::size_t x = 0; x < n_outcomes; ++x) {
    ComplexMatrix g = ginibre(rng, dim, dim);
    ComplexMatrix a = g.mul_adjoint(g);
    sum += a;
    raw.push_back(std::move(a));
  }
  // S^{-1/2} A_x S^{-1/2} normalizes the family to a POVM.
  HermitianEig eig = herm_eig(sum);
  std::vector<cplx> inv_root(eig.values.size());
  for (std::size_t i = 0; i < eig.values.size(); ++i)
    inv_root[i] = 1.0 / std::sqrt(eig.values[i]);
  ComplexMatrix scaled(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      scaled(i, j) = eig.vectors(i, j) * inv_root[j];
  ComplexMatrix s_inv_root = scaled.mul_adjoint(eig.vectors);
  Povm e;
  e.dim = dim;
  for (std::size_t x = 0; x < n_outcomes; ++x) {
    e.effects.push_back(s_inv_root * raw[x] * s_inv_root);
    e.outcomes.push_back(std::to_string(x));
  }
  return e;
}

KrausOperation channel(Rng& rng, std::size_t dim, std::size_t n_kraus) {
  if (n_kraus == 0) n_kraus = 1;
  // Columns 0..dim-1 of a random unitary on dim*n_kraus form an isometry;
  // its row blocks are the Kraus operators.
  ComplexMatrix big = unitary(rng, dim * n_kraus);
  KrausOperation op(dim, dim, {});
  for (std::size_t k = 0; k < n_kraus; ++k) {
    ComplexMatrix m(dim, dim);
    for (std::size_t a = 0; a < dim; ++a)
      for (std::size_t b = 0; b < dim; ++b) m(a, b) = big(k * dim + a, b);
    op.kraus.push_back(std::move(m));
  }
  return op;
}

Instrument repeatable_instrument(Rng& rng, const Povm& sharp_z) {
  if (!sharp_z.is_sharp())
    throw PreconditionError("repeatable_instrument: observable is not sharp");
  const std::size_t dim = sharp_z.dim;
  Instrument ins;
  ins.outcomes = sharp_z.outcomes;
  for (const ComplexMatrix& zx : sharp_z.effects) {
    // Orthonormal eigenspace basis of the projection.
    HermitianEig eig = herm_eig(zx);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < eig.values.size(); ++i)
      if (eig.values[i] > 0.5) keep.push_back(i);
    const std::size_t r = keep.size();
    ComplexMatrix iso(dim, r);  // eigenspace -> full space
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t i = 0; i < dim; ++i) iso(i, k) = eig.vectors(i, keep[k]);

    const std::uint64_t flavor = rng.integer(3);
    std::vector<ComplexMatrix> small;
    if (flavor == 0 || r == 0) {
      small.push_back(ComplexMatrix::identity(r));  // Lueders branch
    } else if (flavor == 1) {
      small.push_back(unitary(rng, r));
    } else {
      small = channel(rng, r, 1 + rng.integer(2)).kraus;
    }
    std::vector<ComplexMatrix> ks;
    for (const ComplexMatrix& s : small)
      ks.push_back((iso * s).mul_adjoint(iso));  // embed, then project input
    ins.ops.push_back(KrausOperation(dim, dim, std::move(ks)));
  }
  return ins;
}

Hamiltonian commuting_hamiltonian(Rng& rng, const Povm& sharp_z,
                                  double scale) {
  const std::size_t dim = sharp_z.dim;
  ComplexMatrix h = ComplexMatrix::zero(dim, dim);
  for (const ComplexMatrix& zx : sharp_z.effects) {
    HermitianEig eig = herm_eig(zx);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < eig.values.size(); ++i)
      if (eig.values[i] > 0.5) keep.push_back(i);
    const std::size_t r = keep.size();
    ComplexMatrix iso(dim, r);
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t i = 0; i < dim; ++i) iso(i, k) = eig.vectors(i, keep[k]);
    ComplexMatrix block = hamiltonian(rng, r, scale).matrix;
    h += (iso * block).mul_adjoint(iso);
  }
  return Hamiltonian(dim, std::move(h));
}

MeasurementScheme scheme(Rng& rng, std::size_t dim_s, std::size_t dim_a,
                         std::size_t n_outcomes) {
  MeasurementScheme m;
  m.dim_s = dim_s;
  m.dim_a = dim_a;
  m.xi = state(rng, dim_a);
  m.u = unitary(rng, dim_s * dim_a);
  m.z = sharp_povm(rng, dim_a, n_outcomes);
  return m;
}

}  // namespace objectify::rnd
