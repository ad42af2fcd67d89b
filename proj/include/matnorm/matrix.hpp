#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "matnorm/errors.hpp"

namespace matnorm {

/// Dense row-major matrix of doubles. Constructed matrices are finite
/// everywhere; the default-constructed matrix is an empty 0x0 placeholder.
class Matrix {
 public:
  Matrix() = default;

  /// Zero-filled rows x cols matrix; both dimensions must be positive.
  Matrix(std::size_t rows, std::size_t cols);

  /// Takes entries in row-major order; every entry must be finite.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> data);

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

  bool same_shape(const Matrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  Matrix transposed() const;

  /// Exact (bitwise) equality of shape and entries.
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace matnorm
