#include "matnorm/drivers.hpp"

#include <cmath>
#include <utility>

#include "matnorm/diagnostics.hpp"
#include "matnorm/standardize.hpp"

namespace matnorm {

namespace {

void require_iterable(const Matrix& m) {
  if (m.rows() < 3 || m.cols() < 3) throw DimensionTooSmall(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j))) throw NonFiniteEntry(i, j);
}

void fill_extremes(IterationRecord& rec, const Matrix& m) {
  const CertifyReport rep = certify_doubly_standardized(m, 0.0);
  rec.max_abs_mean = rep.max_abs_mean;
  rec.max_std_dev = rep.max_std_dev;
}

}  // namespace

std::string_view to_string(Order order) {
  return order == Order::ColumnFirst ? "column-first" : "row-first";
}

std::string_view to_string(StopReason reason) {
  switch (reason) {
    case StopReason::Tolerance:     return "tolerance";
    case StopReason::MaxIterations: return "max_iterations";
    case StopReason::ZeroVariance:  return "zero_variance";
    case StopReason::Diverged:      return "diverged";
  }
  return "unknown";
}

Matrix iterate_once(const Matrix& m, Order order) {
  require_iterable(m);
  if (order == Order::ColumnFirst) return row_standardize(col_standardize(m));
  return col_standardize(row_standardize(m));
}

Trace run_successive(const Matrix& m, const NormConfig& config) {
  require_iterable(m);
  Trace trace;
  trace.config = config;
  trace.initial = m;

  Matrix current = m;
  for (std::size_t n = 1; n <= config.max_iterations; ++n) {
    Matrix next;
    try {
      next = (config.order == Order::ColumnFirst)
                 ? row_standardize(col_standardize(current))
                 : col_standardize(row_standardize(current));
    } catch (const ZeroVariance&) {
      trace.stop_reason = StopReason::ZeroVariance;
      break;
    }

    IterationRecord rec;
    rec.iteration = n;
    rec.step_sq = frobenius_sq_diff(next, current);
    rec.sum_sq = sum_of_squares(next);
    fill_extremes(rec, next);
    trace.records.push_back(rec);
    if (config.capture_iterates) trace.iterates.push_back(next);

    current = std::move(next);
    if (rec.step_sq < config.tolerance) {
      trace.converged = true;
      trace.stop_reason = StopReason::Tolerance;
      break;
    }
  }

  trace.final = std::move(current);
  return trace;
}

Trace run_simultaneous(const Matrix& m, const NormConfig& config) {
  require_iterable(m);
  Trace trace;
  trace.config = config;
  trace.initial = m;

  const std::size_t I = m.rows(), J = m.cols();
  Matrix current = m;
  for (std::size_t n = 1; n <= config.max_iterations; ++n) {
    const AxisStats rs = row_stats(current);
    const AxisStats cs = col_stats(current);

    bool degenerate = false;
    for (std::size_t i = 0; i < I && !degenerate; ++i)
      degenerate = rs.stds[i] <= kZeroStdThreshold;
    for (std::size_t j = 0; j < J && !degenerate; ++j)
      degenerate = cs.stds[j] <= kZeroStdThreshold;
    if (degenerate) {
      trace.stop_reason = StopReason::ZeroVariance;
      break;
    }

    Matrix next(I, J);
    bool finite = true;
    for (std::size_t i = 0; i < I && finite; ++i) {
      for (std::size_t j = 0; j < J; ++j) {
        const double v =
            (current(i, j) - rs.means[i] - cs.means[j]) / (rs.stds[i] * cs.stds[j]);
        if (!std::isfinite(v)) {
          finite = false;
          break;
        }
        next(i, j) = v;
      }
    }
    if (!finite) {
      trace.stop_reason = StopReason::Diverged;
      break;
    }

    IterationRecord rec;
    rec.iteration = n;
    rec.step_sq = frobenius_sq_diff(next, current);
    rec.sum_sq = sum_of_squares(next);
    fill_extremes(rec, next);
    trace.records.push_back(rec);
    if (config.capture_iterates) trace.iterates.push_back(next);

    current = std::move(next);
    if (rec.step_sq < config.tolerance) {
      trace.converged = true;
      trace.stop_reason = StopReason::Tolerance;
      break;
    }
    if (rec.step_sq > kDivergenceCeiling || rec.sum_sq > kDivergenceCeiling) {
      trace.stop_reason = StopReason::Diverged;
      break;
    }
  }

  trace.final = std::move(current);
  return trace;
}

}  // namespace matnorm
