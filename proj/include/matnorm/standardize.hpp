#pragma once

#include <vector>

#include "matnorm/matrix.hpp"

namespace matnorm {

// Standard deviations at or below this are treated as exact zeros. Genuine
// near-convergence stds sit near 1, so the cutoff only catches degenerate
// input, not mid-iteration values.
inline constexpr double kZeroStdThreshold = 1e-300;

/// Means and population standard deviations (divisor = count, positive root)
/// for one axis of a matrix.
struct AxisStats {
  std::vector<double> means;
  std::vector<double> stds;
};

/// Per-row statistics: means[i], stds[i] over the J entries of row i.
AxisStats row_stats(const Matrix& m);

/// Per-column statistics: means[j], stds[j] over the I entries of column j.
AxisStats col_stats(const Matrix& m);

/// Subtracts each row's mean and divides by its std. Throws ZeroVariance if
/// any row is (numerically) constant.
Matrix row_standardize(const Matrix& m);

/// Column counterpart of row_standardize.
Matrix col_standardize(const Matrix& m);

/// Sum of squared entries (squared Frobenius norm).
double sum_of_squares(const Matrix& m);

}  // namespace matnorm
