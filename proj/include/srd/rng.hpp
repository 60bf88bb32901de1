#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace srd {

// Seeded generator with hand-rolled sampling so results are identical across
// standard library implementations (std distributions are not portable).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Exp(1) variate.
  double exp1() { return -std::log1p(-uniform01()); }

  // Inverse-CDF draw from a pmf (need not be exactly normalized).
  std::size_t sample(std::span<const double> pmf) {
    double total = 0.0;
    for (double v : pmf) total += v;
    double u = uniform01() * total;
    for (std::size_t i = 0; i + 1 < pmf.size(); ++i) {
      u -= pmf[i];
      if (u < 0.0) return i;
    }
    return pmf.empty() ? 0 : pmf.size() - 1;
  }

  // Fills row with a Dirichlet(1,...,1) draw (uniform on the simplex).
  void dirichlet_row(std::span<double> row) {
    double total = 0.0;
    for (double& v : row) {
      v = exp1();
      total += v;
    }
    for (double& v : row) v /= total;
  }

  std::uint64_t next_u64() { return gen_(); }

 private:
  std::mt19937_64 gen_;
};

}  // namespace srd
