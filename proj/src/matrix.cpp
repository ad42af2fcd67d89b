#include "matnorm/matrix.hpp"

#include <cmath>

namespace matnorm {

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {
  if (rows == 0 || cols == 0) throw Error("matrix dimensions must be positive");
}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (rows == 0 || cols == 0) throw Error("matrix dimensions must be positive");
  if (data_.size() != rows * cols)
    throw Error("matrix data size " + std::to_string(data_.size()) +
                " does not match " + std::to_string(rows) + "x" +
                std::to_string(cols));
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (!std::isfinite(data_[k])) throw NonFiniteEntry(k / cols_, k % cols_);
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t nr = rows.size();
  if (nr == 0) throw Error("matrix dimensions must be positive");
  const std::size_t nc = rows.begin()->size();
  std::vector<double> flat;
  flat.reserve(nr * nc);
  for (const auto& row : rows) {
    if (row.size() != nc) throw Error("rows of unequal length");
    flat.insert(flat.end(), row.begin(), row.end());
  }
  return Matrix(nr, nc, std::move(flat));
}

Matrix Matrix::transposed() const {
  Matrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

}  // namespace matnorm
