#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "kge/error.hpp"

namespace kge {

// Dense row-major matrix of doubles. Embedding tables are stored this way:
// one row per entity or relation.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  std::span<double> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  double& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }

  bool operator==(const Matrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

namespace vec {

// Small helpers on spans; the training and evaluation loops use these.

inline double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double norm2(std::span<const double> a) {
  double s = 0.0;
  for (double x : a) s += x * x;
  return s > 0.0 ? std::sqrt(s) : 0.0;
}

// Scales `a` to unit L2 norm. Zero vectors are left unchanged and reported.
inline bool normalize(std::span<double> a) {
  const double n = norm2(a);
  if (n < 1e-300) return false;
  for (double& x : a) x /= n;
  return true;
}

}  // namespace vec
}  // namespace kge
