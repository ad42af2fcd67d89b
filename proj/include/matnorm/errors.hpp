#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace matnorm {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Axis { Row, Col };

inline const char* axis_name(Axis a) { return a == Axis::Row ? "row" : "column"; }

/// A row or column has (numerically) zero spread, so standardizing it would
/// divide by zero.
class ZeroVariance : public Error {
 public:
  ZeroVariance(Axis axis, std::size_t index)
      : Error(std::string("zero variance in ") + axis_name(axis) + " " +
              std::to_string(index)),
        axis_(axis),
        index_(index) {}

  Axis axis() const { return axis_; }
  std::size_t index() const { return index_; }

 private:
  Axis axis_;
  std::size_t index_;
};

/// Iteration entry points require at least 3 rows and 3 columns.
class DimensionTooSmall : public Error {
 public:
  DimensionTooSmall(std::size_t rows, std::size_t cols)
      : Error("matrix must be at least 3x3, got " + std::to_string(rows) + "x" +
              std::to_string(cols)),
        rows_(rows),
        cols_(cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

 private:
  std::size_t rows_;
  std::size_t cols_;
};

/// NaN or infinity where a finite value is required.
class NonFiniteEntry : public Error {
 public:
  NonFiniteEntry(std::size_t row, std::size_t col)
      : Error("non-finite entry at (" + std::to_string(row) + ", " +
              std::to_string(col) + ")"),
        row_(row),
        col_(col) {}

  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// Two matrices that must share a shape do not.
class ShapeMismatch : public Error {
 public:
  ShapeMismatch(std::size_t rows_a, std::size_t cols_a, std::size_t rows_b,
                std::size_t cols_b)
      : Error("shape mismatch: " + std::to_string(rows_a) + "x" +
              std::to_string(cols_a) + " vs " + std::to_string(rows_b) + "x" +
              std::to_string(cols_b)) {}
};

/// An all-zero matrix where a nonzero norm is required.
class ZeroMatrix : public Error {
 public:
  ZeroMatrix() : Error("matrix has zero Frobenius norm") {}
};

/// Too few iteration records to fit the requested window.
class InsufficientData : public Error {
 public:
  using Error::Error;
};

/// A rate fit needs strictly positive step sizes inside the window.
class NonpositiveStep : public Error {
 public:
  explicit NonpositiveStep(std::size_t iteration)
      : Error("step at iteration " + std::to_string(iteration) +
              " is not positive; cannot fit a log-linear rate"),
        iteration_(iteration) {}

  std::size_t iteration() const { return iteration_; }

 private:
  std::size_t iteration_;
};

// File-format errors. Row and column indices refer to data cells, 0-based,
// counted after any header row.

class EmptyFile : public Error {
 public:
  explicit EmptyFile(const std::string& path)
      : Error("no data rows in " + path) {}
};

class RaggedRows : public Error {
 public:
  RaggedRows(const std::string& path, std::size_t row, std::size_t expected,
             std::size_t got)
      : Error(path + ": row " + std::to_string(row) + " has " +
              std::to_string(got) + " cells, expected " +
              std::to_string(expected)),
        row_(row) {}

  std::size_t row() const { return row_; }

 private:
  std::size_t row_;
};

class NonNumericCell : public Error {
 public:
  NonNumericCell(const std::string& path, std::size_t row, std::size_t col,
                 const std::string& cell)
      : Error(path + ": cell (" + std::to_string(row) + ", " +
              std::to_string(col) + ") is not a number: \"" + cell + "\""),
        row_(row),
        col_(col) {}

  std::size_t row() const { return row_; }
  std::size_t col() const { return col_; }

 private:
  std::size_t row_;
  std::size_t col_;
};

/// Filesystem-level failure (open, read, write).
class IoError : public Error {
 public:
  IoError(const std::string& path, const std::string& detail)
      : Error(path + ": " + detail) {}
};

}  // namespace matnorm
