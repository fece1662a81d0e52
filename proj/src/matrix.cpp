#include "objectify/matrix.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <sstream>

#include "objectify/kernels.hpp"

namespace objectify {

namespace {

void require(bool ok, const std::string& msg) {
  if (!ok) throw DimensionError(msg);
}

std::string dims_str(const ComplexMatrix& m) {
  std::ostringstream os;
  os << m.rows() << "x" << m.cols();
  return os.str();
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols,
                             std::vector<cplx> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_)
    throw DimensionError("matrix entries count " + std::to_string(data_.size()) +
                         " does not equal rows*cols = " +
                         std::to_string(rows_ * cols_));
}

ComplexMatrix::ComplexMatrix(
    std::initializer_list<std::initializer_list<cplx>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged initializer rows");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::zero(std::size_t rows, std::size_t cols) {
  return ComplexMatrix(rows, cols);
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> entries) {
  ComplexMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const cplx> entries) {
  ComplexMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

ComplexMatrix ComplexMatrix::basis_op(std::size_t n, std::size_t i,
                                      std::size_t j) {
  ComplexMatrix m(n, n);
  m(i, j) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_,
          "matrix add: shape " + dims_str(*this) + " vs " + dims_str(o));
  ComplexMatrix r = *this;
  kernels::axpy(1.0, o.data(), r.data(), r.data_.size());
  return r;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& o) const {
  require(rows_ == o.rows_ && cols_ == o.cols_,
          "matrix sub: shape " + dims_str(*this) + " vs " + dims_str(o));
  ComplexMatrix r = *this;
  kernels::axpy(-1.0, o.data(), r.data(), r.data_.size());
  return r;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& o) const {
  require(cols_ == o.rows_,
          "matrix product: shape " + dims_str(*this) + " vs " + dims_str(o));
  ComplexMatrix r(rows_, o.cols_);
  kernels::matmul_nn(data(), o.data(), r.data(), rows_, cols_, o.cols_);
  return r;
}

ComplexMatrix ComplexMatrix::operator*(cplx s) const {
  ComplexMatrix r(rows_, cols_);
  kernels::scal_copy(s, data(), r.data(), data_.size());
  return r;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_,
          "matrix add: shape " + dims_str(*this) + " vs " + dims_str(o));
  kernels::axpy(1.0, o.data(), data(), data_.size());
  return *this;
}

ComplexMatrix& ComplexMatrix::add_scaled(cplx s, const ComplexMatrix& o) {
  require(rows_ == o.rows_ && cols_ == o.cols_,
          "matrix add_scaled: shape " + dims_str(*this) + " vs " + dims_str(o));
  kernels::axpy(s, o.data(), data(), data_.size());
  return *this;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      r(j, i) = std::conj((*this)(i, j));
  return r;
}

ComplexMatrix ComplexMatrix::transpose() const {
  ComplexMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

ComplexMatrix ComplexMatrix::conjugate() const {
  ComplexMatrix r(rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = std::conj(data_[i]);
  return r;
}

ComplexMatrix ComplexMatrix::mul_adjoint(const ComplexMatrix& o) const {
  require(cols_ == o.cols_,
          "mul_adjoint: shape " + dims_str(*this) + " vs " + dims_str(o));
  ComplexMatrix r(rows_, o.rows_);
  kernels::matmul_nc(data(), o.data(), r.data(), rows_, cols_, o.rows_);
  return r;
}

ComplexMatrix ComplexMatrix::adjoint_mul(const ComplexMatrix& o) const {
  require(rows_ == o.rows_,
          "adjoint_mul: shape " + dims_str(*this) + " vs " + dims_str(o));
  ComplexMatrix r(cols_, o.cols_);
  kernels::matmul_cn(data(), o.data(), r.data(), cols_, rows_, o.cols_);
  return r;
}

cplx ComplexMatrix::trace() const {
  require(is_square(), "trace of non-square matrix " + dims_str(*this));
  cplx t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

double ComplexMatrix::max_abs() const {
  double m = 0.0;
  for (const cplx& v : data_) m = std::max(m, std::abs(v));
  return m;
}

double ComplexMatrix::frobenius_norm() const {
  double s = 0.0;
  for (const cplx& v : data_) s += std::norm(v);
  return std::sqrt(s);
}

bool ComplexMatrix::approx_equal(const ComplexMatrix& o, double tol) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) return false;
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i)
    m = std::max(m, std::abs(data_[i] - o.data_[i]));
  return m <= tol;
}

bool ComplexMatrix::is_hermitian(double tol) const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i; j < cols_; ++j)
      if (std::abs((*this)(i, j) - std::conj((*this)(j, i))) > tol) return false;
  return true;
}

bool ComplexMatrix::is_unitary(double tol) const {
  if (!is_square()) return false;
  return adjoint_mul(*this).approx_equal(identity(rows_), tol);
}

bool ComplexMatrix::is_psd(double tol) const {
  if (!is_hermitian(tol)) return false;
  HermitianEig eig = herm_eig(*this, tol);
  return eig.values.empty() || eig.values.front() >= -tol;
}

bool ComplexMatrix::is_projection(double tol) const {
  if (!is_hermitian(tol)) return false;
  return (*this * *this).approx_equal(*this, tol);
}

cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b) {
  require(a.cols() == b.rows() && a.rows() == b.cols(),
          "trace_product: shape " + dims_str(a) + " vs " + dims_str(b));
  cplx t = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
  return t;
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix r(a.rows() * b.rows(), a.cols() * b.cols());
  const std::size_t bc = b.cols();
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const cplx s = a(i1, j1);
      if (s == cplx{}) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
        cplx* dst = r.data() + (i1 * b.rows() + i2) * r.cols() + j1 * bc;
        kernels::scal_copy(s, b.data() + i2 * bc, dst, bc);
      }
    }
  }
  return r;
}

ComplexMatrix partial_trace(const ComplexMatrix& t, std::size_t d1,
                            std::size_t d2, Keep keep) {
  require(t.is_square() && t.rows() == d1 * d2,
          "partial_trace: operator " + dims_str(t) + " is not (" +
              std::to_string(d1) + "*" + std::to_string(d2) + ") square");
  if (keep == Keep::First) {
    ComplexMatrix r(d1, d1);
    for (std::size_t i = 0; i < d1; ++i)
      for (std::size_t j = 0; j < d1; ++j) {
        cplx s = 0.0;
        for (std::size_t a = 0; a < d2; ++a) s += t(i * d2 + a, j * d2 + a);
        r(i, j) = s;
      }
    return r;
  }
  ComplexMatrix r(d2, d2);
  for (std::size_t a = 0; a < d2; ++a)
    for (std::size_t b = 0; b < d2; ++b) {
      cplx s = 0.0;
      for (std::size_t i = 0; i < d1; ++i) s += t(i * d2 + a, i * d2 + b);
      r(a, b) = s;
    }
  return r;
}

HermitianEig herm_eig(const ComplexMatrix& h, double tol) {
  require(h.is_square(), "eigendecomposition of non-square matrix");
  if (!h.is_hermitian(tol)) {
    double dev = (h - h.adjoint()).max_abs();
    throw PreconditionError(
        "hermiticity violated: max |A - A^dagger| = " + std::to_string(dev) +
        " exceeds tol " + std::to_string(tol));
  }
  const std::size_t n = h.rows();
  // Symmetrize before decomposing to suppress round-off asymmetry.
  Eigen::MatrixXcd m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m);
  if (solver.info() != Eigen::Success)
    throw Error("hermitian eigendecomposition failed to converge");
  HermitianEig out;
  out.values.resize(n);
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    out.values[i] = solver.eigenvalues()(static_cast<Eigen::Index>(i));
    for (std::size_t r = 0; r < n; ++r)
      out.vectors(r, i) = solver.eigenvectors()(static_cast<Eigen::Index>(r),
                                                static_cast<Eigen::Index>(i));
  }
  return out;
}

namespace {

// V * diag(f(lambda)) * V^dagger
ComplexMatrix spectral_map(const HermitianEig& eig,
                           const std::vector<cplx>& mapped) {
  const std::size_t n = eig.values.size();
  ComplexMatrix scaled(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      scaled(i, j) = eig.vectors(i, j) * mapped[j];
  return scaled.mul_adjoint(eig.vectors);
}

}  // namespace

ComplexMatrix fractional_power(const ComplexMatrix& rho, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw PreconditionError("fractional_power: alpha = " +
                            std::to_string(alpha) + " outside (0, 1]");
  HermitianEig eig = herm_eig(rho);
  const double lambda_max =
      eig.values.empty() ? 0.0 : std::max(0.0, eig.values.back());
  const double neg_tol = 1e-9 * std::max(1.0, lambda_max);
  const double zero_threshold = 1e-12 * lambda_max;
  std::vector<cplx> mapped(eig.values.size());
  for (std::size_t i = 0; i < eig.values.size(); ++i) {
    const double lambda = eig.values[i];
    if (lambda < -neg_tol)
      throw PreconditionError(
          "positivity violated: eigenvalue " + std::to_string(lambda) +
          " below -" + std::to_string(neg_tol));
    mapped[i] = (lambda <= zero_threshold) ? 0.0 : std::pow(lambda, alpha);
  }
  return spectral_map(eig, mapped);
}

ComplexMatrix unitary_from_hamiltonian(const ComplexMatrix& h, double g) {
  HermitianEig eig = herm_eig(h);
  std::vector<cplx> mapped(eig.values.size());
  for (std::size_t i = 0; i < eig.values.size(); ++i)
    mapped[i] = std::exp(cplx(0.0, -g * eig.values[i]));
  return spectral_map(eig, mapped);
}

ComplexMatrix complete_isometry(const ComplexMatrix& v, double ortho_tol) {
  const std::size_t rows = v.rows(), cols = v.cols();
  require(rows >= cols, "complete_isometry: " + dims_str(v) + " has rows < cols");
  {
    ComplexMatrix gram = v.adjoint_mul(v);
    double dev = (gram - ComplexMatrix::identity(cols)).max_abs();
    if (dev > ortho_tol)
      throw PreconditionError(
          "isometry columns not orthonormal: max |V^dagger V - 1| = " +
          std::to_string(dev) + " exceeds tol " + std::to_string(ortho_tol));
  }
  // Column list, input columns first and reproduced exactly.
  std::vector<std::vector<cplx>> basis;
  basis.reserve(rows);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<cplx> c(rows);
    for (std::size_t i = 0; i < rows; ++i) c[i] = v(i, j);
    basis.push_back(std::move(c));
  }
  constexpr double kRejection = 1e-8;
  for (std::size_t cand = 0; cand < rows && basis.size() < rows; ++cand) {
    std::vector<cplx> w(rows, cplx{});
    w[cand] = 1.0;
    // Two Gram-Schmidt passes; the second removes residual components that
    // survive cancellation in the first.
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& c : basis) {
        cplx ov = 0.0;
        for (std::size_t i = 0; i < rows; ++i) ov += std::conj(c[i]) * w[i];
        for (std::size_t i = 0; i < rows; ++i) w[i] -= ov * c[i];
      }
    }
    double norm = 0.0;
    for (const cplx& x : w) norm += std::norm(x);
    norm = std::sqrt(norm);
    if (norm <= kRejection) continue;
    for (cplx& x : w) x /= norm;
    basis.push_back(std::move(w));
  }
  if (basis.size() != rows)
    throw Error("complete_isometry: canonical candidates exhausted before "
                "completing the basis");
  ComplexMatrix u(rows, rows);
  for (std::size_t j = 0; j < rows; ++j)
    for (std::size_t i = 0; i < rows; ++i) u(i, j) = basis[j][i];
  return u;
}

ComplexMatrix lift_second(std::size_t dim_s, const ComplexMatrix& op) {
  return tensor(ComplexMatrix::identity(dim_s), op);
}

ComplexMatrix lift_first(const ComplexMatrix& op, std::size_t dim_a) {
  return tensor(op, ComplexMatrix::identity(dim_a));
}

}  // namespace objectify
