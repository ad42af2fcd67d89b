#include "matnorm/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "matnorm/standardize.hpp"

namespace matnorm {

double frobenius_sq_diff(const Matrix& a, const Matrix& b) {
  if (!a.same_shape(b))
    throw ShapeMismatch(a.rows(), a.cols(), b.rows(), b.cols());
  double total = 0.0;
  const auto da = a.data();
  const auto db = b.data();
  for (std::size_t k = 0; k < da.size(); ++k) {
    const double d = da[k] - db[k];
    total += d * d;
  }
  return total;
}

CertifyReport certify_doubly_standardized(const Matrix& m, double tol) {
  const AxisStats rs = row_stats(m);
  const AxisStats cs = col_stats(m);
  CertifyReport rep;
  for (std::size_t i = 0; i < rs.means.size(); ++i) {
    rep.max_abs_mean = std::max(rep.max_abs_mean, std::abs(rs.means[i]));
    rep.max_std_dev = std::max(rep.max_std_dev, std::abs(rs.stds[i] - 1.0));
  }
  for (std::size_t j = 0; j < cs.means.size(); ++j) {
    rep.max_abs_mean = std::max(rep.max_abs_mean, std::abs(cs.means[j]));
    rep.max_std_dev = std::max(rep.max_std_dev, std::abs(cs.stds[j] - 1.0));
  }
  rep.ok = rep.max_abs_mean <= tol && rep.max_std_dev <= tol;
  return rep;
}

ConvergenceReport estimate_rate(const Trace& trace, std::size_t window) {
  if (window < 2) throw InsufficientData("rate fit needs a window of at least 2");
  if (trace.records.size() < window)
    throw InsufficientData("trace has " + std::to_string(trace.records.size()) +
                           " records, need " + std::to_string(window));

  const std::size_t begin = trace.records.size() - window;
  for (std::size_t k = begin; k < trace.records.size(); ++k)
    if (!(trace.records[k].step_sq > 0.0))
      throw NonpositiveStep(trace.records[k].iteration);

  // Ordinary least squares of ln(step_sq) on the iteration index.
  const double n = static_cast<double>(window);
  double mx = 0.0, my = 0.0;
  for (std::size_t k = begin; k < trace.records.size(); ++k) {
    mx += static_cast<double>(trace.records[k].iteration);
    my += std::log(trace.records[k].step_sq);
  }
  mx /= n;
  my /= n;

  double sxx = 0.0, sxy = 0.0;
  for (std::size_t k = begin; k < trace.records.size(); ++k) {
    const double dx = static_cast<double>(trace.records[k].iteration) - mx;
    const double dy = std::log(trace.records[k].step_sq) - my;
    sxx += dx * dx;
    sxy += dx * dy;
  }
  const double slope = sxy / sxx;
  const double intercept = my - slope * mx;

  double rss = 0.0;
  for (std::size_t k = begin; k < trace.records.size(); ++k) {
    const double x = static_cast<double>(trace.records[k].iteration);
    const double r = std::log(trace.records[k].step_sq) - (slope * x + intercept);
    rss += r * r;
  }

  ConvergenceReport rep;
  rep.converged = trace.converged;
  rep.iterations = trace.records.size();
  if (!trace.records.empty()) {
    rep.final_max_abs_mean = trace.records.back().max_abs_mean;
    rep.final_max_std_dev = trace.records.back().max_std_dev;
  }
  rep.log_slope = slope;
  rep.rate_estimate = std::exp(slope);
  rep.fit_window = window;
  rep.fit_residual = std::sqrt(rss / n);
  return rep;
}

AngleCheck angle_identity_check(const Matrix& x, const Matrix& z,
                                std::size_t iteration) {
  if (!x.same_shape(z))
    throw ShapeMismatch(x.rows(), x.cols(), z.rows(), z.cols());
  const double xx = sum_of_squares(x);
  const double zz = sum_of_squares(z);
  if (xx == 0.0 || zz == 0.0) throw ZeroMatrix();

  double dot = 0.0;
  const auto dx = x.data();
  const auto dz = z.data();
  for (std::size_t k = 0; k < dx.size(); ++k) dot += dx[k] * dz[k];

  AngleCheck check;
  check.iteration = iteration;
  check.cos_direct = std::clamp(dot / (std::sqrt(xx) * std::sqrt(zz)), -1.0, 1.0);
  const double ij = static_cast<double>(x.rows() * x.cols());
  check.cos_identity = 1.0 - frobenius_sq_diff(x, z) / (2.0 * ij);
  check.discrepancy = std::abs(check.cos_direct - check.cos_identity);
  return check;
}

}  // namespace matnorm
