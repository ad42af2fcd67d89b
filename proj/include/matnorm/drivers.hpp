#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "matnorm/matrix.hpp"

namespace matnorm {

/// Which axis gets polished first inside one full iteration.
enum class Order { ColumnFirst, RowFirst };

enum class StopReason { Tolerance, MaxIterations, ZeroVariance, Diverged };

std::string_view to_string(Order order);
std::string_view to_string(StopReason reason);

struct NormConfig {
  Order order = Order::ColumnFirst;
  /// Threshold on the squared Frobenius norm of one full iteration's step.
  double tolerance = 1e-8;
  std::size_t max_iterations = 1000;
  /// Keep every iterate in Trace::iterates (memory scales with run length).
  bool capture_iterates = false;
};

/// Diagnostics captured after each full iteration.
struct IterationRecord {
  std::size_t iteration = 0;  // 1-based
  double step_sq = 0.0;       // squared Frobenius distance from the previous iterate
  double sum_sq = 0.0;        // sum of squared entries of this iterate
  double max_abs_mean = 0.0;  // worst |mean| over all rows and columns
  double max_std_dev = 0.0;   // worst |std - 1| over all rows and columns
};

struct Trace {
  NormConfig config;
  Matrix initial;
  Matrix final;
  std::vector<IterationRecord> records;
  bool converged = false;
  StopReason stop_reason = StopReason::MaxIterations;
  /// One entry per record when config.capture_iterates, otherwise empty.
  std::vector<Matrix> iterates;
};

// A simultaneous run stops as diverged once step_sq or sum_sq passes this,
// or earlier if an update overflows to non-finite values.
inline constexpr double kDivergenceCeiling = 1e12;

/// One full iteration: mean-and-std polish of the first axis, then of the
/// second. Requires at least a 3x3 matrix.
Matrix iterate_once(const Matrix& m, Order order);

/// Iterates iterate_once until the squared step falls below
/// config.tolerance, the iteration budget runs out, or an axis loses all
/// variance. The trace keeps the last successfully computed iterate.
Trace run_successive(const Matrix& m, const NormConfig& config);

/// Contrast scheme: one step subtracts both row and column means and divides
/// by the product of row and column stds, all from the same iterate. This
/// update does not converge in general; the driver reports Diverged when it
/// blows up and MaxIterations when it merely fails to settle.
Trace run_simultaneous(const Matrix& m, const NormConfig& config);

}  // namespace matnorm
