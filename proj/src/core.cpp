#include "srd/core.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "srd/kernels.hpp"

namespace srd {

double entropy_bits(std::span<const double> p) {
  double h = 0.0;
  for (double v : p)
    if (v > 0.0) h -= v * std::log2(v);
  return h;
}

std::vector<double> output_marginal(const SourcePmf& p, const Mat& w) {
  std::vector<double> q(w.cols, 0.0);
  for (std::size_t x = 0; x < w.rows; ++x)
    kernels::axpy(q.data(), p[x], w.row(x).data(), w.cols);
  return q;
}

double mutual_information(const Mat& joint) {
  if (joint.rows == 0 || joint.cols == 0) throw ValidationError("mutual_information: empty joint");
  double total = 0.0;
  for (double v : joint.data) {
    if (!std::isfinite(v) || v < 0.0)
      throw ValidationError("mutual_information: joint entries must be finite and nonnegative");
    total += v;
  }
  if (std::abs(total - 1.0) > kPmfTol)
    throw ValidationError("mutual_information: joint does not sum to 1 within 1e-12");

  std::vector<double> px(joint.rows, 0.0), py(joint.cols, 0.0);
  for (std::size_t x = 0; x < joint.rows; ++x)
    for (std::size_t y = 0; y < joint.cols; ++y) {
      px[x] += joint(x, y);
      py[y] += joint(x, y);
    }
  double i = 0.0;
  for (std::size_t x = 0; x < joint.rows; ++x)
    for (std::size_t y = 0; y < joint.cols; ++y) {
      const double pxy = joint(x, y);
      if (pxy > 0.0) i += pxy * std::log2(pxy / (px[x] * py[y]));
    }
  return i;
}

double mutual_information_of_kernel(const SourcePmf& p, const Mat& w) {
  const std::vector<double> q = output_marginal(p, w);
  double i = 0.0;
  for (std::size_t x = 0; x < w.rows; ++x) {
    if (p[x] == 0.0) continue;
    for (std::size_t y = 0; y < w.cols; ++y) {
      const double wv = w(x, y);
      if (wv > 0.0) i += p[x] * wv * std::log2(wv / q[y]);
    }
  }
  return i;
}

double lambda_value(const Mat& w, const SourcePmf& p, const DistortionTensor& d) {
  if (w.rows != d.x_size || w.cols != d.y_size || p.size() != d.x_size)
    throw ValidationError("lambda_value: dimension mismatch");
  const std::vector<double> py = output_marginal(p, w);
  double lam = 0.0;
  for (std::size_t x = 0; x < d.x_size; ++x) {
    if (p[x] == 0.0) continue;
    double row = 0.0;
    for (std::size_t y = 0; y < d.y_size; ++y)
      row += w(x, y) * kernels::dot(d.memory_row(x, y).data(), py.data(), d.y_size);
    lam += p[x] * row;
  }
  return lam;
}

double lambda_value(const MemorylessKernel& w, const SourcePmf& p, const DistortionTensor& d) {
  return lambda_value(w.rows, p, d);
}

double memory_span(const DistortionTensor& d) {
  double span = 0.0;
  for (std::size_t x = 0; x < d.x_size; ++x)
    for (std::size_t y = 0; y < d.y_size; ++y) {
      const double s = kernels::max_spread(d.memory_row(x, y).data(), d.y_size);
      if (s > span) span = s;
    }
  return span;
}

Mat lambda_hessian_free(const DistortionTensor& d, const SourcePmf& p) {
  const std::size_t nx = d.x_size, ny = d.y_size;
  const std::size_t n = nx * ny;
  // Lambda = w' A w over w[(x,y)] = W(y|x), A[(x,y),(x',z)] = p(x)p(x')d(x,y,z).
  Eigen::MatrixXd a(n, n);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y < ny; ++y)
      for (std::size_t xp = 0; xp < nx; ++xp)
        for (std::size_t z = 0; z < ny; ++z)
          a(static_cast<Eigen::Index>(x * ny + y), static_cast<Eigen::Index>(xp * ny + z)) =
              p[x] * p[xp] * d(x, y, z);
  Eigen::MatrixXd h = a + a.transpose();

  // Simplex reduction: drop the last column of each row, W(ny-1|x) = 1 - sum.
  const std::size_t m = nx * (ny - 1);
  if (m == 0) return Mat(0, 0);
  Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(n, m);
  for (std::size_t x = 0; x < nx; ++x)
    for (std::size_t y = 0; y + 1 < ny; ++y) {
      basis(static_cast<Eigen::Index>(x * ny + y), static_cast<Eigen::Index>(x * (ny - 1) + y)) = 1.0;
      basis(static_cast<Eigen::Index>(x * ny + ny - 1), static_cast<Eigen::Index>(x * (ny - 1) + y)) =
          -1.0;
    }
  Eigen::MatrixXd hf = basis.transpose() * h * basis;
  Mat out(m, m);
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c)
      out(r, c) = hf(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
  return out;
}

ConvexityReport convexity_report(const DistortionTensor& d, const SourcePmf& p, double tol) {
  ConvexityReport rep;
  const Mat hf = lambda_hessian_free(d, p);
  if (hf.rows == 0) {
    // |Y| = 1: a single reproduction symbol, Lambda is constant.
    rep.hessian_min_eigenvalue = 0.0;
    rep.is_convex = true;
    rep.is_affine = true;
  } else {
    Eigen::MatrixXd h(hf.rows, hf.cols);
    for (std::size_t r = 0; r < hf.rows; ++r)
      for (std::size_t c = 0; c < hf.cols; ++c)
        h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = hf(r, c);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(h);
    rep.hessian_min_eigenvalue = eig.eigenvalues().minCoeff();
    rep.is_convex = rep.hessian_min_eigenvalue >= -tol;
    rep.is_affine = h.cwiseAbs().maxCoeff() <= tol;
    if (rep.is_affine) rep.is_convex = true;
  }

  bool uniform = true;
  for (double v : p.probs)
    if (std::abs(v - 1.0 / static_cast<double>(p.size())) > kPmfTol) uniform = false;
  if (d.x_size == 2 && d.y_size == 2 && p.size() == 2 && uniform) {
    rep.e1 = d(0, 0, 0) + d(0, 1, 1) - d(0, 1, 0) - d(0, 0, 1);
    rep.e2 = d(1, 0, 0) + d(1, 1, 1) - d(1, 1, 0) - d(1, 0, 1);
  } else {
    rep.beyond_prop1_scope = true;
  }
  return rep;
}

}  // namespace srd
