#include "kernels_impl.hpp"

#include <algorithm>

namespace objectify::kernels::detail {

// Outer-product order (i, l, j): C rows are accumulated from scaled B rows,
// so the inner loop walks contiguous memory in both B and C.
void matmul_nn_scalar(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                      std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, cplx{});
  for (std::size_t i = 0; i < m; ++i) {
    cplx* crow = c + i * n;
    for (std::size_t l = 0; l < k; ++l) {
      const cplx s = a[i * k + l];
      if (s == cplx{}) continue;
      const cplx* brow = b + l * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += s * brow[j];
    }
  }
}

// C[i][j] = sum_l A[i][l] * conj(B[j][l]); rows of both operands are
// contiguous, so this is a plain conjugated dot product.
void matmul_nc_scalar(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                      std::size_t k, std::size_t n) {
  for (std::size_t i = 0; i < m; ++i) {
    const cplx* arow = a + i * k;
    for (std::size_t j = 0; j < n; ++j) {
      const cplx* brow = b + j * k;
      double re = 0.0, im = 0.0;
      for (std::size_t l = 0; l < k; ++l) {
        const cplx av = arow[l];
        const cplx bv = brow[l];
        re += av.real() * bv.real() + av.imag() * bv.imag();
        im += av.imag() * bv.real() - av.real() * bv.imag();
      }
      c[i * n + j] = cplx(re, im);
    }
  }
}

// C[i][j] = sum_l conj(A[l][i]) * B[l][j], accumulated row-by-row over l.
void matmul_cn_scalar(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                      std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, cplx{});
  for (std::size_t l = 0; l < k; ++l) {
    const cplx* arow = a + l * m;
    const cplx* brow = b + l * n;
    for (std::size_t i = 0; i < m; ++i) {
      const cplx s = std::conj(arow[i]);
      if (s == cplx{}) continue;
      cplx* crow = c + i * n;
      for (std::size_t j = 0; j < n; ++j) crow[j] += s * brow[j];
    }
  }
}

void axpy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] += alpha * x[i];
}

void scal_copy_scalar(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) y[i] = alpha * x[i];
}

}  // namespace objectify::kernels::detail
