#pragma once

#include <cstdint>
#include <vector>

#include "srd/types.hpp"

namespace srd {

// Output chain of Theorem 2's construction: T(y|yhat) = sum_x p(x) K(y|x,yhat).
// Returned with one row per yhat.
Mat induced_output_chain(const MarkovKernel& k, const SourcePmf& p);

struct StationaryResult {
  std::vector<double> pi;
  bool converged = false;
  std::size_t iterations = 0;
};

// Fixed point of the row-stochastic chain T from the uniform start.
// Iterates the half-lazy chain (same fixed points, geometric convergence on
// periodic chains); converged when ||pi T - pi||_1 <= tol.
StationaryResult stationary_distribution(const Mat& t, double tol = 1e-10,
                                         std::size_t max_iters = 1000000);

// Number of closed communicating classes of the chain's support graph.
// More than one means the simulated time average may depend on y0.
std::size_t count_recurrent_classes(const Mat& t);

struct StationaryAnalysis {
  std::vector<double> pi_y;
  double rate_bits = 0.0;
  double distortion = 0.0;
  bool converged = false;
  std::size_t iterations = 0;
  std::size_t recurrent_classes = 1;
};

// Stationary rate H(X) + H(Y2|Y1) - H(X2,Y2|X1,Y1) and, when d is given,
// the stationary expected distortion E[d(X,Y,Yhat)].
StationaryAnalysis stationary_analysis(const MarkovKernel& k, const SourcePmf& p,
                                       const DistortionTensor* d = nullptr);

double stationary_rate(const MarkovKernel& k, const SourcePmf& p);
double stationary_distortion(const MarkovKernel& k, const SourcePmf& p,
                             const DistortionTensor& d);

struct SimulationResult {
  double empirical_distortion = 0.0;
  double std_error = 0.0;
};

// Runs the chain X_i ~ p, Y_i ~ K(.|X_i, Y_{i-1}) from the fixed initial
// symbol y0, accumulating at each step the exact one-step conditional
// expectation E[d(X,Y,y_prev)] (unbiased for Eq-(1)-style averages, and exact
// on deterministic trajectories). Standard error from 100 equal batches.
// Deterministic for a fixed seed.
SimulationResult simulate_chain(const MarkovKernel& k, const SourcePmf& p,
                                const DistortionTensor& d, std::uint64_t n, std::uint64_t seed,
                                std::size_t y0 = 0);

}  // namespace srd
