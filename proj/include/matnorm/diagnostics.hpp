#pragma once

#include <cstddef>
#include <optional>

#include "matnorm/drivers.hpp"
#include "matnorm/matrix.hpp"

namespace matnorm {

/// Squared Frobenius norm of a - b. Shapes must match.
double frobenius_sq_diff(const Matrix& a, const Matrix& b);

struct CertifyReport {
  bool ok = false;            // every mean and std within tol of 0 and 1
  double max_abs_mean = 0.0;  // worst |mean| over all rows and columns
  double max_std_dev = 0.0;   // worst |std - 1| over all rows and columns
};

/// Checks how close a matrix is to being doubly standardized: all row and
/// column means within tol of 0 and all stds within tol of 1.
CertifyReport certify_doubly_standardized(const Matrix& m, double tol);

struct ConvergenceReport {
  bool converged = false;
  std::size_t iterations = 0;
  double final_max_abs_mean = 0.0;
  double final_max_std_dev = 0.0;
  /// Geometric rate fitted to the step sizes: step_sq(n) ~ C * rate^n.
  std::optional<double> rate_estimate;
  std::optional<double> log_slope;  // ln(rate_estimate)
  std::size_t fit_window = 0;
  double fit_residual = 0.0;  // RMS residual of the log-linear fit
};

/// Least-squares fit of ln(step_sq) against iteration index over the last
/// `window` records of a trace. Throws InsufficientData when the trace is
/// shorter than the window or the window is below 2, and NonpositiveStep
/// when any step inside the window is not strictly positive.
ConvergenceReport estimate_rate(const Trace& trace, std::size_t window);

struct AngleCheck {
  std::size_t iteration = 0;
  double cos_direct = 0.0;    // <x, z> / (|x| |z|)
  double cos_identity = 0.0;  // 1 - |x - z|^2 / (2 I J)
  double discrepancy = 0.0;   // |cos_direct - cos_identity|
};

/// Compares the direct cosine between two matrices with the distance-based
/// expression that equals it exactly when both squared norms are I*J.
/// cos_direct is clamped to [-1, 1]; cos_identity is reported as computed.
AngleCheck angle_identity_check(const Matrix& x, const Matrix& z,
                                std::size_t iteration = 0);

}  // namespace matnorm
