#pragma once

#include <optional>
#include <span>
#include <vector>

#include "srd/types.hpp"

namespace srd {

// Shannon entropy in bits, 0·log0 = 0. The span overload skips validation
// (solver-internal rows); the SourcePmf overload validates via construction.
double entropy_bits(std::span<const double> p);
inline double entropy(const SourcePmf& p) { return entropy_bits(p.probs); }

// I(X;Y) in bits of a validated joint pmf over X×Y.
double mutual_information(const Mat& joint);

// I(X;Y) of the joint p(x)W(y|x) without re-validating (solver hot path).
double mutual_information_of_kernel(const SourcePmf& p, const Mat& w);

// Output marginal p_Y(y) = sum_x p(x) W(y|x).
std::vector<double> output_marginal(const SourcePmf& p, const Mat& w);

// The quadratic functional: expected distortion of W under the product
// coupling Q(x,y,yhat) = p(x) W(y|x) p_Y(yhat).
double lambda_value(const MemorylessKernel& w, const SourcePmf& p, const DistortionTensor& d);
double lambda_value(const Mat& w, const SourcePmf& p, const DistortionTensor& d);

// Largest change in distortion from swapping only the memory argument:
// max over (x,y,z,t) of d(x,y,z) - d(x,y,t). Always >= 0.
double memory_span(const DistortionTensor& d);

struct ConvexityReport {
  // Populated only for binary alphabets with a uniform source.
  std::optional<double> e1;
  std::optional<double> e2;
  double hessian_min_eigenvalue = 0.0;
  bool is_convex = false;
  bool is_affine = false;
  // True when the verdict rests on the general Hessian test alone
  // (non-binary alphabet or non-uniform source).
  bool beyond_prop1_scope = false;
};

// Convexity diagnostics of the Lambda quadratic form over the free kernel
// coordinates (one column dropped per row via the simplex constraint).
ConvexityReport convexity_report(const DistortionTensor& d, const SourcePmf& p,
                                 double tol = 1e-9);

// Constant Hessian of Lambda in the free kernel coordinates, row-major,
// dimension (|X|*(|Y|-1))^2. Exposed for the finite-difference property tests.
Mat lambda_hessian_free(const DistortionTensor& d, const SourcePmf& p);

}  // namespace srd
