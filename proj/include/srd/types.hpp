#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace srd {

// Thrown on malformed inputs (bad pmf, dimension mismatch, bad config).
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Thrown when an exhaustive computation would exceed its size guard.
class SizeGuardError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr double kPmfTol = 1e-12;

// Minimal row-major matrix. Enough for joints, kernels and induced chains;
// anything heavier goes through Eigen inside the .cpp files.
struct Mat {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Mat() = default;
  Mat(std::size_t r, std::size_t c, double fill = 0.0) : rows(r), cols(c), data(r * c, fill) {}

  double& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
  std::span<double> row(std::size_t r) { return {data.data() + r * cols, cols}; }
  std::span<const double> row(std::size_t r) const { return {data.data() + r * cols, cols}; }
};

// Probability distribution of the i.i.d. source X.
struct SourcePmf {
  std::vector<double> probs;

  explicit SourcePmf(std::vector<double> p);
  std::size_t size() const { return probs.size(); }
  double operator[](std::size_t i) const { return probs[i]; }
};

// d(x, y, yhat) over finite alphabets; y and yhat share the alphabet.
// Stored row-major with yhat contiguous: values[(x*y_size + y)*y_size + yhat].
struct DistortionTensor {
  std::size_t x_size = 0;
  std::size_t y_size = 0;
  std::vector<double> values;

  DistortionTensor(std::size_t xs, std::size_t ys, std::vector<double> v);
  static DistortionTensor zeros(std::size_t xs, std::size_t ys) {
    return DistortionTensor(xs, ys, std::vector<double>(xs * ys * ys, 0.0));
  }

  double operator()(std::size_t x, std::size_t y, std::size_t yhat) const {
    return values[(x * y_size + y) * y_size + yhat];
  }
  double& at(std::size_t x, std::size_t y, std::size_t yhat) {
    return values[(x * y_size + y) * y_size + yhat];
  }
  // The yhat-slice for fixed (x, y), contiguous.
  std::span<const double> memory_row(std::size_t x, std::size_t y) const {
    return {values.data() + (x * y_size + y) * y_size, y_size};
  }
};

// W(y|x): one stochastic row per source symbol.
struct MemorylessKernel {
  Mat rows;  // rows.rows = |X|, rows.cols = |Y|

  explicit MemorylessKernel(Mat w);
  std::size_t x_size() const { return rows.rows; }
  std::size_t y_size() const { return rows.cols; }
  double operator()(std::size_t x, std::size_t y) const { return rows(x, y); }
};

// W(y | x, yhat): one distribution over y per (x, yhat) pair.
// Stored with y contiguous: table[(x*y_size + yhat)*y_size + y].
struct MarkovKernel {
  std::size_t x_size = 0;
  std::size_t y_size = 0;
  std::vector<double> table;

  MarkovKernel(std::size_t xs, std::size_t ys, std::vector<double> t);
  static MarkovKernel memoryless(const MemorylessKernel& w);

  double operator()(std::size_t y, std::size_t x, std::size_t yhat) const {
    return table[(x * y_size + yhat) * y_size + y];
  }
  std::span<const double> row(std::size_t x, std::size_t yhat) const {
    return {table.data() + (x * y_size + yhat) * y_size, y_size};
  }
  std::span<double> row(std::size_t x, std::size_t yhat) {
    return {table.data() + (x * y_size + yhat) * y_size, y_size};
  }
};

// Validation helpers shared by the constructors and the io layer.
void check_pmf(std::span<const double> p, const std::string& what);
void check_stochastic_rows(const Mat& m, const std::string& what);

}  // namespace srd
