#include "matnorm/standardize.hpp"

#include <cmath>

namespace matnorm {

// Sums run left to right in plain doubles; reorderings would perturb seeded
// regression values.

AxisStats row_stats(const Matrix& m) {
  const std::size_t I = m.rows(), J = m.cols();
  AxisStats out;
  out.means.resize(I);
  out.stds.resize(I);
  for (std::size_t i = 0; i < I; ++i) {
    double sum = 0.0;
    for (std::size_t j = 0; j < J; ++j) sum += m(i, j);
    const double mean = sum / static_cast<double>(J);
    double qsum = 0.0;
    for (std::size_t j = 0; j < J; ++j) {
      const double d = m(i, j) - mean;
      qsum += d * d;
    }
    out.means[i] = mean;
    out.stds[i] = std::sqrt(qsum / static_cast<double>(J));
  }
  return out;
}

AxisStats col_stats(const Matrix& m) {
  const std::size_t I = m.rows(), J = m.cols();
  AxisStats out;
  out.means.resize(J);
  out.stds.resize(J);
  for (std::size_t j = 0; j < J; ++j) {
    double sum = 0.0;
    for (std::size_t i = 0; i < I; ++i) sum += m(i, j);
    const double mean = sum / static_cast<double>(I);
    double qsum = 0.0;
    for (std::size_t i = 0; i < I; ++i) {
      const double d = m(i, j) - mean;
      qsum += d * d;
    }
    out.means[j] = mean;
    out.stds[j] = std::sqrt(qsum / static_cast<double>(I));
  }
  return out;
}

Matrix row_standardize(const Matrix& m) {
  const AxisStats st = row_stats(m);
  for (std::size_t i = 0; i < st.stds.size(); ++i)
    if (st.stds[i] <= kZeroStdThreshold) throw ZeroVariance(Axis::Row, i);
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = (m(i, j) - st.means[i]) / st.stds[i];
  return out;
}

Matrix col_standardize(const Matrix& m) {
  const AxisStats st = col_stats(m);
  for (std::size_t j = 0; j < st.stds.size(); ++j)
    if (st.stds[j] <= kZeroStdThreshold) throw ZeroVariance(Axis::Col, j);
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = (m(i, j) - st.means[j]) / st.stds[j];
  return out;
}

double sum_of_squares(const Matrix& m) {
  double total = 0.0;
  for (const double v : m.data()) total += v * v;
  return total;
}

}  // namespace matnorm
