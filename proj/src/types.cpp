#include "srd/types.hpp"

#include <cmath>
#include <utility>

namespace srd {

void check_pmf(std::span<const double> p, const std::string& what) {
  if (p.empty()) throw ValidationError(what + ": empty distribution");
  double total = 0.0;
  for (double v : p) {
    if (!std::isfinite(v)) throw ValidationError(what + ": non-finite entry");
    if (v < 0.0) throw ValidationError(what + ": negative probability");
    total += v;
  }
  if (std::abs(total - 1.0) > kPmfTol)
    throw ValidationError(what + ": entries sum to " + std::to_string(total) +
                          ", expected 1 within 1e-12 (not renormalizing)");
}

void check_stochastic_rows(const Mat& m, const std::string& what) {
  if (m.rows == 0 || m.cols == 0) throw ValidationError(what + ": empty matrix");
  for (std::size_t r = 0; r < m.rows; ++r) check_pmf(m.row(r), what + " row " + std::to_string(r));
}

SourcePmf::SourcePmf(std::vector<double> p) : probs(std::move(p)) {
  check_pmf(probs, "SourcePmf");
}

DistortionTensor::DistortionTensor(std::size_t xs, std::size_t ys, std::vector<double> v)
    : x_size(xs), y_size(ys), values(std::move(v)) {
  if (x_size == 0 || y_size == 0) throw ValidationError("DistortionTensor: empty alphabet");
  if (values.size() != x_size * y_size * y_size)
    throw ValidationError("DistortionTensor: size mismatch");
  for (double v2 : values)
    if (!std::isfinite(v2)) throw ValidationError("DistortionTensor: non-finite entry");
}

MemorylessKernel::MemorylessKernel(Mat w) : rows(std::move(w)) {
  check_stochastic_rows(rows, "MemorylessKernel");
}

MarkovKernel::MarkovKernel(std::size_t xs, std::size_t ys, std::vector<double> t)
    : x_size(xs), y_size(ys), table(std::move(t)) {
  if (x_size == 0 || y_size == 0) throw ValidationError("MarkovKernel: empty alphabet");
  if (table.size() != x_size * y_size * y_size) throw ValidationError("MarkovKernel: size mismatch");
  for (std::size_t x = 0; x < x_size; ++x)
    for (std::size_t yh = 0; yh < y_size; ++yh)
      check_pmf(row(x, yh), "MarkovKernel slice (x=" + std::to_string(x) +
                                ", yhat=" + std::to_string(yh) + ")");
}

MarkovKernel MarkovKernel::memoryless(const MemorylessKernel& w) {
  const std::size_t ys = w.y_size();
  std::vector<double> t(w.x_size() * ys * ys);
  for (std::size_t x = 0; x < w.x_size(); ++x)
    for (std::size_t yh = 0; yh < ys; ++yh)
      for (std::size_t y = 0; y < ys; ++y) t[(x * ys + yh) * ys + y] = w(x, y);
  return MarkovKernel(w.x_size(), ys, std::move(t));
}

}  // namespace srd
