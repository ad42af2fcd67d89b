#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "matnorm/drivers.hpp"

namespace matnorm {

// A converged 3x3 limit has mean-0, std-1 columns, so each column satisfies
// sum = 0 and sum of squares = 3 up to the run's tolerance. These bounds
// decide whether a sample is kept.
inline constexpr double kRingSumTol = 1e-4;
inline constexpr double kRingSumSqTol = 1e-3;

/// First column of one converged 3x3 limit, tagged with its source.
struct RingSample {
  std::array<double, 3> column{};
  std::uint64_t source_seed = 0;
  std::size_t iterations = 0;
};

struct RingResult {
  std::vector<RingSample> samples;
  /// Runs dropped: not converged, or converged outside the sum / sum-of-
  /// squares bounds above.
  std::size_t excluded = 0;
};

/// True when one full iteration (in the given order) moves m by at most tol
/// in squared Frobenius norm, and m certifies as doubly standardized at
/// sqrt(tol). Propagates ZeroVariance / DimensionTooSmall.
bool is_fixed_point(const Matrix& m, double tol, Order order = Order::ColumnFirst);

/// Entry values clustered by single linkage: values closer than tol to an
/// existing cluster join it; each cluster reports its running mean. Sorted
/// ascending.
std::vector<double> unique_values(const Matrix& m, double tol);

/// Runs successive standardization on `count` seeded 3x3 standard-normal
/// starts (per-sample seed = seed + index, wrapping mod 2^64) and collects
/// the first column of each converged limit. `jobs` > 1 fans the samples
/// across threads; output order follows the sample index either way.
RingResult sample_ring(std::size_t count, std::uint64_t seed,
                       const NormConfig& config, unsigned jobs = 1);

}  // namespace matnorm
