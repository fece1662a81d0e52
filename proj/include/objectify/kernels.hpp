#pragma once

#include <complex>
#include <cstddef>

// Low-level dense complex kernels. All matrices are row-major
// std::complex<double> buffers. Each kernel has a scalar reference
// implementation and (on x86-64) an AVX2/FMA variant; the active variant is
// chosen once at startup from CPU capabilities. Tests pin the backend and
// compare variants against the scalar reference.
namespace objectify::kernels {

using cplx = std::complex<double>;

// c = a(m x k) * b(k x n)
void matmul_nn(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n);

// c = a(m x k) * b(n x k)^dagger
void matmul_nc(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n);

// c = a(k x m)^dagger * b(k x n)
void matmul_cn(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n);

// y += alpha * x
void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n);

// y = alpha * x
void scal_copy(cplx alpha, const cplx* x, cplx* y, std::size_t n);

enum class Backend { Scalar, Avx2 };

Backend active_backend();
bool backend_available(Backend b);
// Pins the backend for equivalence tests; returns false if unavailable.
bool set_backend(Backend b);
const char* backend_name(Backend b);

}  // namespace objectify::kernels
