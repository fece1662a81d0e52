#include "objectify/kernels.hpp"

#include "kernels_impl.hpp"

namespace objectify::kernels {

namespace {

struct Table {
  void (*nn)(const cplx*, const cplx*, cplx*, std::size_t, std::size_t,
             std::size_t);
  void (*nc)(const cplx*, const cplx*, cplx*, std::size_t, std::size_t,
             std::size_t);
  void (*cn)(const cplx*, const cplx*, cplx*, std::size_t, std::size_t,
             std::size_t);
  void (*axpy)(cplx, const cplx*, cplx*, std::size_t);
  void (*scal_copy)(cplx, const cplx*, cplx*, std::size_t);
};

constexpr Table kScalar{detail::matmul_nn_scalar, detail::matmul_nc_scalar,
                        detail::matmul_cn_scalar, detail::axpy_scalar,
                        detail::scal_copy_scalar};

#if defined(OBJECTIFY_HAVE_AVX2)
constexpr Table kAvx2{detail::matmul_nn_avx2, detail::matmul_nc_avx2,
                      detail::matmul_cn_avx2, detail::axpy_avx2,
                      detail::scal_copy_avx2};
#endif

bool avx2_supported() {
#if defined(OBJECTIFY_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

struct Dispatch {
  Backend backend = Backend::Scalar;
  Table table = kScalar;
  Dispatch() {
#if defined(OBJECTIFY_HAVE_AVX2)
    if (avx2_supported()) {
      backend = Backend::Avx2;
      table = kAvx2;
    }
#endif
  }
};

Dispatch& dispatch() {
  static Dispatch d;
  return d;
}

}  // namespace

void matmul_nn(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n) {
  dispatch().table.nn(a, b, c, m, k, n);
}

void matmul_nc(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n) {
  dispatch().table.nc(a, b, c, m, k, n);
}

void matmul_cn(const cplx* a, const cplx* b, cplx* c, std::size_t m,
               std::size_t k, std::size_t n) {
  dispatch().table.cn(a, b, c, m, k, n);
}

void axpy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  dispatch().table.axpy(alpha, x, y, n);
}

void scal_copy(cplx alpha, const cplx* x, cplx* y, std::size_t n) {
  dispatch().table.scal_copy(alpha, x, y, n);
}

Backend active_backend() { return dispatch().backend; }

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
      return avx2_supported();
  }
  return false;
}

bool set_backend(Backend b) {
  if (!backend_available(b)) return false;
  Dispatch& d = dispatch();
  d.backend = b;
  switch (b) {
    case Backend::Scalar:
      d.table = kScalar;
      break;
    case Backend::Avx2:
#if defined(OBJECTIFY_HAVE_AVX2)
      d.table = kAvx2;
#endif
      break;
  }
  return true;
}

const char* backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

}  // namespace objectify::kernels
