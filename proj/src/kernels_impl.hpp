#pragma once

#include "objectify/kernels.hpp"

// Per-backend entry points wired up by the dispatcher in kernels.cpp.
namespace objectify::kernels::detail {

void matmul_nn_scalar(const cplx*, const cplx*, cplx*, std::size_t,
                      std::size_t, std::size_t);
void matmul_nc_scalar(const cplx*, const cplx*, cplx*, std::size_t,
                      std::size_t, std::size_t);
void matmul_cn_scalar(const cplx*, const cplx*, cplx*, std::size_t,
                      std::size_t, std::size_t);
void axpy_scalar(cplx, const cplx*, cplx*, std::size_t);
void scal_copy_scalar(cplx, const cplx*, cplx*, std::size_t);

#if defined(OBJECTIFY_HAVE_AVX2)
void matmul_nn_avx2(const cplx*, const cplx*, cplx*, std::size_t, std::size_t,
                    std::size_t);
void matmul_nc_avx2(const cplx*, const cplx*, cplx*, std::size_t, std::size_t,
                    std::size_t);
void matmul_cn_avx2(const cplx*, const cplx*, cplx*, std::size_t, std::size_t,
                    std::size_t);
void axpy_avx2(cplx, const cplx*, cplx*, std::size_t);
void scal_copy_avx2(cplx, const cplx*, cplx*, std::size_t);
#endif

}  // namespace objectify::kernels::detail
