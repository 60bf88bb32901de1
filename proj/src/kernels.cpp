#include "srd/kernels.hpp"

#include <cstdlib>

namespace srd::kernels {

namespace {

using DotFn = double (*)(const double*, const double*, std::size_t);
using AxpyFn = void (*)(double*, double, const double*, std::size_t);
using SumFn = double (*)(const double*, std::size_t);
using SpreadFn = double (*)(const double*, std::size_t);

struct Backend {
  DotFn dot;
  AxpyFn axpy;
  SumFn sum;
  SpreadFn max_spread;
  const char* name;
};

Backend pick_backend() {
  const char* force = std::getenv("SRD_FORCE_SCALAR");
  const bool forced_scalar = force != nullptr && force[0] != '\0' && force[0] != '0';
#if defined(__x86_64__)
  if (!forced_scalar && __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return {&avx2::dot, &avx2::axpy, &avx2::sum, &avx2::max_spread, "avx2"};
  }
#else
  (void)forced_scalar;
#endif
  return {&scalar::dot, &scalar::axpy, &scalar::sum, &scalar::max_spread, "scalar"};
}

const Backend& backend() {
  static const Backend b = pick_backend();
  return b;
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) { return backend().dot(a, b, n); }
void axpy(double* dst, double a, const double* x, std::size_t n) { backend().axpy(dst, a, x, n); }
double sum(const double* a, std::size_t n) { return backend().sum(a, n); }
double max_spread(const double* a, std::size_t n) { return backend().max_spread(a, n); }
const char* active_backend() { return backend().name; }

}  // namespace srd::kernels
