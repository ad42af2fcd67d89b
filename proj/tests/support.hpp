#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "matnorm/gaussian.hpp"
#include "matnorm/matrix.hpp"

namespace support {

/// Circulant 3x3 matrix that is doubly standardized to ~1e-5 and maps to
/// itself under one iteration; handy as a known near-fixed-point.
inline matnorm::Matrix fixed_point_3x3() {
  return matnorm::Matrix::from_rows({{-1.4137, 0.7407, 0.6730},
                                     {0.7407, 0.6730, -1.4137},
                                     {0.6730, -1.4137, 0.7407}});
}

inline matnorm::Matrix gaussian(std::size_t rows, std::size_t cols, double mean,
                                double variance, std::uint64_t seed) {
  matnorm::GenSpec spec;
  spec.rows = rows;
  spec.cols = cols;
  spec.mean = mean;
  spec.variance = variance;
  spec.seed = seed;
  return matnorm::generate_gaussian(spec);
}

inline double max_abs_diff(const matnorm::Matrix& a, const matnorm::Matrix& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)));
  return worst;
}

inline matnorm::Matrix scaled(const matnorm::Matrix& m, double factor) {
  matnorm::Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = factor * m(i, j);
  return out;
}

inline matnorm::Matrix negated(const matnorm::Matrix& m) { return scaled(m, -1.0); }

/// Deterministic Fisher-Yates permutation of 0..n-1 driven by SplitMix64, so
/// shuffles reproduce everywhere regardless of the platform's std::shuffle.
inline std::vector<std::size_t> random_permutation(std::size_t n,
                                                   std::uint64_t seed) {
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  matnorm::SplitMix64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(rng.next_u64() % i);
    std::swap(p[i - 1], p[j]);
  }
  return p;
}

/// out(i, j) = m(row_perm[i], col_perm[j])
inline matnorm::Matrix permuted(const matnorm::Matrix& m,
                                const std::vector<std::size_t>& row_perm,
                                const std::vector<std::size_t>& col_perm) {
  matnorm::Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      out(i, j) = m(row_perm[i], col_perm[j]);
  return out;
}

}  // namespace support
