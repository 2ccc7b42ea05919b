#pragma once

#include <cstddef>
#include <string_view>

namespace ising::kern {

// Dense double-precision kernels behind the operator algebra.  Two
// implementations are provided: a scalar reference and an AVX2 variant
// (x86 only).  The exported entry points dispatch once at startup based
// on cpuid; the ISING_KERNELS environment variable ("scalar" or "avx2")
// overrides autodetection, falling back to scalar when AVX2 is missing.
//
// gemm and axpy keep the same per-element evaluation order in both
// variants (the AVX2 code vectorizes the independent column index and
// does not fuse multiply-add), so their results are bit-identical.
// The reductions sumsq/diffsq accumulate lane-wise under AVX2 and agree
// with the scalar reference only up to rounding.

/// C = A * B for row-major n x n matrices. C must not alias A or B.
void gemm(const double* a, const double* b, double* c, std::size_t n);

/// y += alpha * x over n entries.
void axpy(double alpha, const double* x, double* y, std::size_t n);

/// x *= alpha over n entries.
void scal(double alpha, double* x, std::size_t n);

/// Sum of x[i]^2.
double sumsq(const double* x, std::size_t n);

/// Sum of (x[i] - y[i])^2.
double diffsq(const double* x, const double* y, std::size_t n);

/// Name of the kernel set selected at startup: "avx2" or "scalar".
std::string_view active();

namespace scalar {
void gemm(const double* a, const double* b, double* c, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scal(double alpha, double* x, std::size_t n);
double sumsq(const double* x, std::size_t n);
double diffsq(const double* x, const double* y, std::size_t n);
}  // namespace scalar

#ifdef ISING_HAVE_AVX2
namespace avx2 {
void gemm(const double* a, const double* b, double* c, std::size_t n);
void axpy(double alpha, const double* x, double* y, std::size_t n);
void scal(double alpha, double* x, std::size_t n);
double sumsq(const double* x, std::size_t n);
double diffsq(const double* x, const double* y, std::size_t n);
}  // namespace avx2
#endif

}  // namespace ising::kern
