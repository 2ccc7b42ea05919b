#include "ising/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace ising::kern {

namespace {

struct Impl {
  void (*gemm)(const double*, const double*, double*, std::size_t);
  void (*axpy)(double, const double*, double*, std::size_t);
  void (*scal)(double, double*, std::size_t);
  double (*sumsq)(const double*, std::size_t);
  double (*diffsq)(const double*, const double*, std::size_t);
  const char* name;
};

constexpr Impl kScalar{scalar::gemm, scalar::axpy, scalar::scal,
                       scalar::sumsq, scalar::diffsq, "scalar"};

#ifdef ISING_HAVE_AVX2
constexpr Impl kAvx2{avx2::gemm, avx2::axpy, avx2::scal,
                     avx2::sumsq, avx2::diffsq, "avx2"};
#endif

Impl pick() {
  const char* env = std::getenv("ISING_KERNELS");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return kScalar;
#ifdef ISING_HAVE_AVX2
  if (__builtin_cpu_supports("avx2")) return kAvx2;
#endif
  return kScalar;
}

const Impl& impl() {
  static const Impl chosen = pick();
  return chosen;
}

}  // namespace

void gemm(const double* a, const double* b, double* c, std::size_t n) {
  impl().gemm(a, b, c, n);
}

void axpy(double alpha, const double* x, double* y, std::size_t n) {
  impl().axpy(alpha, x, y, n);
}

void scal(double alpha, double* x, std::size_t n) { impl().scal(alpha, x, n); }

double sumsq(const double* x, std::size_t n) { return impl().sumsq(x, n); }

double diffsq(const double* x, const double* y, std::size_t n) {
  return impl().diffsq(x, y, n);
}

std::string_view active() { return impl().name; }

}  // namespace ising::kern
