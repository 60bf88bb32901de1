#pragma once

#include <cstddef>

// Data-parallel reduction primitives used by the solver inner loops.
// Scalar reference implementations live in kernels::scalar and are always
// built; on x86-64 an AVX2+FMA variant is selected at runtime when the CPU
// supports it (override with SRD_FORCE_SCALAR=1).

namespace srd::kernels {

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double* dst, double a, const double* x, std::size_t n);
double sum(const double* a, std::size_t n);
double max_spread(const double* a, std::size_t n);
}  // namespace scalar

#if defined(__x86_64__)
namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
void axpy(double* dst, double a, const double* x, std::size_t n);
double sum(const double* a, std::size_t n);
double max_spread(const double* a, std::size_t n);
}  // namespace avx2
#endif

// Dispatched entry points.
double dot(const double* a, const double* b, std::size_t n);
void axpy(double* dst, double a, const double* x, std::size_t n);
double sum(const double* a, std::size_t n);
// max over i,j of a[i] - a[j]; 0 for n == 0.
double max_spread(const double* a, std::size_t n);

// Name of the backend the dispatcher picked ("avx2" or "scalar").
const char* active_backend();

}  // namespace srd::kernels
