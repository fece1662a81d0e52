#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "objectify/errors.hpp"

namespace objectify {

using cplx = std::complex<double>;

// Dense complex matrix, row-major, value semantics. Immutable by convention
// once built: all operations below return fresh matrices, so instances can be
// shared freely across threads.
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<cplx> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix zero(std::size_t rows, std::size_t cols);
  static ComplexMatrix diagonal(std::span<const double> entries);
  static ComplexMatrix diagonal(std::span<const cplx> entries);
  // |i><j| on an n-dimensional space
  static ComplexMatrix basis_op(std::size_t n, std::size_t i, std::size_t j);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  const cplx* data() const { return data_.data(); }
  cplx* data() { return data_.data(); }
  std::span<const cplx> entries() const { return data_; }

  ComplexMatrix operator+(const ComplexMatrix& o) const;
  ComplexMatrix operator-(const ComplexMatrix& o) const;
  ComplexMatrix operator*(const ComplexMatrix& o) const;  // matrix product
  ComplexMatrix operator*(cplx s) const;
  ComplexMatrix operator-() const { return *this * cplx(-1.0, 0.0); }
  ComplexMatrix& operator+=(const ComplexMatrix& o);
  ComplexMatrix& add_scaled(cplx s, const ComplexMatrix& o);  // this += s*o

  ComplexMatrix adjoint() const;
  ComplexMatrix transpose() const;
  ComplexMatrix conjugate() const;
  // this * o^dagger and this^dagger * o without materializing the adjoint
  ComplexMatrix mul_adjoint(const ComplexMatrix& o) const;
  ComplexMatrix adjoint_mul(const ComplexMatrix& o) const;

  cplx trace() const;
  double max_abs() const;        // entrywise max modulus
  double frobenius_norm() const;

  bool approx_equal(const ComplexMatrix& o, double tol = 1e-9) const;
  bool is_hermitian(double tol = 1e-9) const;
  bool is_unitary(double tol = 1e-9) const;
  bool is_psd(double tol = 1e-9) const;
  bool is_projection(double tol = 1e-9) const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

inline ComplexMatrix operator*(cplx s, const ComplexMatrix& m) { return m * s; }

// tr[a * b] without forming the product
cplx trace_product(const ComplexMatrix& a, const ComplexMatrix& b);

// Kronecker product; joint index (i1, i2) -> i1 * b.rows + i2, row-major.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

enum class Keep { First, Second };

// Partial trace of a (d1*d2)x(d1*d2) operator over the discarded factor.
ComplexMatrix partial_trace(const ComplexMatrix& t, std::size_t d1,
                            std::size_t d2, Keep keep);

struct HermitianEig {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // eigenvectors as columns, same order
};

// Eigendecomposition of (h + h^dagger)/2. Input must be Hermitian to tol.
HermitianEig herm_eig(const ComplexMatrix& h, double tol = 1e-9);

// rho^alpha for PSD Hermitian rho, alpha in (0, 1]. Eigenvalues below
// 1e-12 * lambda_max map to 0; negative eigenvalues beyond tolerance throw.
ComplexMatrix fractional_power(const ComplexMatrix& rho, double alpha);

// exp(-i g h) for Hermitian h, via spectral decomposition.
ComplexMatrix unitary_from_hamiltonian(const ComplexMatrix& h, double g);

// Completes an isometry (orthonormal columns, rows >= cols) to a square
// unitary. Input columns are reproduced exactly; the remaining columns come
// from Gram-Schmidt over canonical basis vectors in index order, rejecting
// candidates with residual norm below 1e-8.
ComplexMatrix complete_isometry(const ComplexMatrix& v, double ortho_tol = 1e-8);

// Lifts an apparatus-side operator to the joint space: 1_s (x) op.
ComplexMatrix lift_second(std::size_t dim_s, const ComplexMatrix& op);
// System-side lift: op (x) 1_a.
ComplexMatrix lift_first(const ComplexMatrix& op, std::size_t dim_a);

}  // namespace objectify
