#include "kernels_impl.hpp"

#if defined(OBJECTIFY_HAVE_AVX2)

#include <immintrin.h>

#include <algorithm>

namespace objectify::kernels::detail {

namespace {

// One __m256d holds two complex<double> values as [re0 im0 re1 im1].
inline const double* dptr(const cplx* p) {
  return reinterpret_cast<const double*>(p);
}
inline double* dptr(cplx* p) { return reinterpret_cast<double*>(p); }

}  // namespace

// C row accumulation with two separated accumulators per vector:
//   acc_r += s.re * b,  acc_i += s.im * swap(b)
// combined once per (i, l) step via addsub, giving the usual
//   re = s.re*b.re - s.im*b.im,  im = s.re*b.im + s.im*b.re.
void matmul_nn_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                    std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, cplx{});
  const std::size_t nv = (n / 2) * 2;
  for (std::size_t i = 0; i < m; ++i) {
    double* crow = dptr(c + i * n);
    for (std::size_t l = 0; l < k; ++l) {
      const cplx s = a[i * k + l];
      const __m256d sre = _mm256_set1_pd(s.real());
      const __m256d sim = _mm256_set1_pd(s.imag());
      const double* brow = dptr(b + l * n);
      std::size_t j = 0;
      for (; j < nv; j += 2) {
        const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        const __m256d bswap = _mm256_permute_pd(bv, 0x5);
        const __m256d prod =
            _mm256_fmaddsub_pd(sre, bv, _mm256_mul_pd(sim, bswap));
        const __m256d cv = _mm256_loadu_pd(crow + 2 * j);
        _mm256_storeu_pd(crow + 2 * j, _mm256_add_pd(cv, prod));
      }
      for (; j < n; ++j) {
        const cplx bv = b[l * n + j];
        cplx& cv = c[i * n + j];
        cv += s * bv;
      }
    }
  }
}

void matmul_nc_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                    std::size_t k, std::size_t n) {
  const std::size_t kv = (k / 2) * 2;
  for (std::size_t i = 0; i < m; ++i) {
    const double* arow = dptr(a + i * k);
    for (std::size_t j = 0; j < n; ++j) {
      const double* brow = dptr(b + j * k);
      // acc_p lanes: [ar*br, ai*bi, ...], acc_q lanes: [ar*bi, ai*br, ...]
      __m256d acc_p = _mm256_setzero_pd();
      __m256d acc_q = _mm256_setzero_pd();
      std::size_t l = 0;
      for (; l < kv; l += 2) {
        const __m256d av = _mm256_loadu_pd(arow + 2 * l);
        const __m256d bv = _mm256_loadu_pd(brow + 2 * l);
        const __m256d bswap = _mm256_permute_pd(bv, 0x5);
        acc_p = _mm256_fmadd_pd(av, bv, acc_p);
        acc_q = _mm256_fmadd_pd(av, bswap, acc_q);
      }
      alignas(32) double p[4], q[4];
      _mm256_store_pd(p, acc_p);
      _mm256_store_pd(q, acc_q);
      // a * conj(b): re = ar*br + ai*bi, im = ai*br - ar*bi
      double re = p[0] + p[1] + p[2] + p[3];
      double im = (q[1] - q[0]) + (q[3] - q[2]);
      for (; l < k; ++l) {
        const cplx av = a[i * k + l];
        const cplx bv = b[j * k + l];
        re += av.real() * bv.real() + av.imag() * bv.imag();
        im += av.imag() * bv.real() - av.real() * bv.imag();
      }
      c[i * n + j] = cplx(re, im);
    }
  }
}

void matmul_cn_avx2(const cplx* a, const cplx* b, cplx* c, std::size_t m,
                    std::size_t k, std::size_t n) {
  std::fill(c, c + m * n, cplx{});
  const std::size_t nv = (n / 2) * 2;
  for (std::size_t l = 0; l < k; ++l) {
    const cplx* arow = a + l * m;
    const double* brow = dptr(b + l * n);
    for (std::size_t i = 0; i < m; ++i) {
      const cplx s = std::conj(arow[i]);
      const __m256d sre = _mm256_set1_pd(s.real());
      const __m256d sim = _mm256_set1_pd(s.imag());
      double* crow = dptr(c + i * n);
      std::size_t j = 0;
      for (; j < nv; j += 2) {
        const __m256d bv = _mm256_loadu_pd(brow + 2 * j);
        const __m256d bswap = _mm256_permute_pd(bv, 0x5);
        const __m256d prod =
            _mm256_fmaddsub_pd(sre, bv, _mm256_mul_pd(sim, bswap));
        const __m256d cv = _mm256_loadu_pd(crow + 2 * j);
        _mm256_storeu_pd(crow + 2 * j, _mm256_add_pd(cv, prod));
      }
      for (; j < n; ++j) c[i * n + j] += s * b[l * n + j];
    }
  }
}

void axpy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d are = _mm256_set1_pd(alpha.real());
  const __m256d aim = _mm256_set1_pd(alpha.imag());
  const std::size_t nv = (n / 2) * 2;
  std::size_t i = 0;
  for (; i < nv; i += 2) {
    const __m256d xv = _mm256_loadu_pd(dptr(x) + 2 * i);
    const __m256d xswap = _mm256_permute_pd(xv, 0x5);
    const __m256d prod =
        _mm256_fmaddsub_pd(are, xv, _mm256_mul_pd(aim, xswap));
    const __m256d yv = _mm256_loadu_pd(dptr(y) + 2 * i);
    _mm256_storeu_pd(dptr(y) + 2 * i, _mm256_add_pd(yv, prod));
  }
  for (; i < n; ++i) y[i] += alpha * x[i];
}

void scal_copy_avx2(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  const __m256d are = _mm256_set1_pd(alpha.real());
  const __m256d aim = _mm256_set1_pd(alpha.imag());
  const std::size_t nv = (n / 2) * 2;
  std::size_t i = 0;
  for (; i < nv; i += 2) {
    const __m256d xv = _mm256_loadu_pd(dptr(x) + 2 * i);
    const __m256d xswap = _mm256_permute_pd(xv, 0x5);
    _mm256_storeu_pd(dptr(y) + 2 * i,
                     _mm256_fmaddsub_pd(are, xv, _mm256_mul_pd(aim, xswap)));
  }
  for (; i < n; ++i) y[i] = alpha * x[i];
}

}  // namespace objectify::kernels::detail

#endif  // OBJECTIFY_HAVE_AVX2
