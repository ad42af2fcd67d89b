#include <cmath>
#include <limits>
#include <vector>

#include "doctest.h"
#include "matnorm/diagnostics.hpp"
#include "matnorm/drivers.hpp"
#include "matnorm/standardize.hpp"
#include "support.hpp"

using namespace matnorm;

namespace {

// Straight-line reference for one column-first iteration, written without
// the library kernels.
Matrix reference_iteration(const Matrix& m) {
  const std::size_t I = m.rows(), J = m.cols();
  Matrix a(I, J);
  for (std::size_t j = 0; j < J; ++j) {
    long double sum = 0.0L;
    for (std::size_t i = 0; i < I; ++i) sum += m(i, j);
    const long double mu = sum / static_cast<long double>(I);
    long double q = 0.0L;
    for (std::size_t i = 0; i < I; ++i) q += (m(i, j) - mu) * (m(i, j) - mu);
    const long double sd = std::sqrt(q / static_cast<long double>(I));
    for (std::size_t i = 0; i < I; ++i)
      a(i, j) = static_cast<double>((m(i, j) - mu) / sd);
  }
  Matrix b(I, J);
  for (std::size_t i = 0; i < I; ++i) {
    long double sum = 0.0L;
    for (std::size_t j = 0; j < J; ++j) sum += a(i, j);
    const long double mu = sum / static_cast<long double>(J);
    long double q = 0.0L;
    for (std::size_t j = 0; j < J; ++j) q += (a(i, j) - mu) * (a(i, j) - mu);
    const long double sd = std::sqrt(q / static_cast<long double>(J));
    for (std::size_t j = 0; j < J; ++j)
      b(i, j) = static_cast<double>((a(i, j) - mu) / sd);
  }
  return b;
}

NormConfig config_with(double tol, std::size_t max_iter,
                       Order order = Order::ColumnFirst, bool capture = false) {
  NormConfig c;
  c.order = order;
  c.tolerance = tol;
  c.max_iterations = max_iter;
  c.capture_iterates = capture;
  return c;
}

}  // namespace

TEST_CASE("one iteration matches an independent reference") {
  CHECK(support::max_abs_diff(
            iterate_once(Matrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}),
                         Order::ColumnFirst),
            reference_iteration(
                Matrix::from_rows({{1, 2, 3}, {4, 5, 6}, {7, 8, 10}}))) <= 1e-12);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Matrix m = support::gaussian(5, 7, 2.0, 4.0, seed);
    CHECK(support::max_abs_diff(iterate_once(m, Order::ColumnFirst),
                                reference_iteration(m)) <= 1e-12);
  }
}

TEST_CASE("the known 3x3 fixed point barely moves under either order") {
  const Matrix fp = support::fixed_point_3x3();
  CHECK(frobenius_sq_diff(iterate_once(fp, Order::ColumnFirst), fp) <= 1e-5);
  CHECK(frobenius_sq_diff(iterate_once(fp, Order::RowFirst), fp) <= 1e-5);
}

TEST_CASE("iteration entry points reject matrices smaller than 3x3") {
  const Matrix m22 = Matrix::from_rows({{0.0, 1.0}, {2.0, 5.0}});
  const Matrix m23 = Matrix::from_rows({{0.0, 1.0, 2.0}, {2.0, 5.0, 1.0}});
  CHECK_THROWS_AS(iterate_once(m22, Order::ColumnFirst), DimensionTooSmall);
  CHECK_THROWS_AS(iterate_once(m23, Order::RowFirst), DimensionTooSmall);
  CHECK_THROWS_AS(iterate_once(m23.transposed(), Order::ColumnFirst),
                  DimensionTooSmall);
  CHECK_THROWS_AS(run_successive(m22, NormConfig{}), DimensionTooSmall);
  CHECK_THROWS_AS(run_simultaneous(m22, NormConfig{}), DimensionTooSmall);
  try {
    run_successive(m23, NormConfig{});
  } catch (const DimensionTooSmall& e) {
    CHECK(e.rows() == 2);
    CHECK(e.cols() == 3);
  }
}

TEST_CASE("non-finite entries cannot enter a matrix at all") {
  CHECK_THROWS_AS(
      Matrix(2, 2, {1.0, std::numeric_limits<double>::infinity(), 0.0, 1.0}),
      NonFiniteEntry);
  try {
    Matrix(2, 2, {1.0, 2.0, std::nan(""), 1.0});
  } catch (const NonFiniteEntry& e) {
    CHECK(e.row() == 1);
    CHECK(e.col() == 0);
  }
}

TEST_CASE("seeded 5x5 regression run") {
  const Trace t =
      run_successive(support::gaussian(5, 5, 2.0, 4.0, 42), config_with(1e-8, 1000));
  CHECK(t.converged);
  CHECK(t.stop_reason == StopReason::Tolerance);
  CHECK(t.records.size() == 60);
  CHECK(t.records.back().step_sq < 1e-8);
  CHECK(std::abs(t.records.back().sum_sq - 25.0) <= 1e-9 * 25.0);
  CHECK(certify_doubly_standardized(t.final, 1e-4).ok);
  // Step numbering starts at 1 and counts full iterations.
  CHECK(t.records.front().iteration == 1);
  CHECK(t.records.back().iteration == t.records.size());
}

TEST_CASE("the known fixed point converges in a single iteration") {
  const Trace t = run_successive(support::fixed_point_3x3(), config_with(1e-8, 1000));
  CHECK(t.converged);
  REQUIRE(t.records.size() == 1);
  CHECK(std::abs(t.records[0].step_sq - 3.2023676929435415e-09) <= 3.3e-18);
  CHECK(std::abs(t.records[0].sum_sq - 9.0) <= 1e-12 * 9.0);
}

TEST_CASE("every seeded start converges and conserves the squared norm") {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    const Trace t =
        run_successive(support::gaussian(5, 5, 2.0, 4.0, seed), config_with(1e-8, 500));
    CHECK(t.converged);
    CHECK(t.records.size() <= 250);
    for (const IterationRecord& r : t.records)
      CHECK(std::abs(r.sum_sq - 25.0) <= 1e-9 * 25.0);
    // A squared step below 1e-8 leaves means and stds within ~1e-4 of ideal.
    CHECK(t.records.back().max_abs_mean <= 1e-3);
    CHECK(t.records.back().max_std_dev <= 1e-3);
  }
}

TEST_CASE("step sizes decrease strictly per iteration in the tail") {
  const auto tail_monotone = [](const Trace& t, std::size_t window) {
    REQUIRE(t.records.size() >= window);
    for (std::size_t k = t.records.size() - window + 1; k < t.records.size(); ++k)
      CHECK(t.records[k].step_sq < t.records[k - 1].step_sq);
  };
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    // Short 3x3 runs keep the rough opening steps near the tail, so the
    // window is tighter there.
    tail_monotone(run_successive(support::gaussian(3, 3, 2.0, 4.0, seed),
                                 config_with(1e-8, 500)),
                  5);
    tail_monotone(run_successive(support::gaussian(5, 5, 2.0, 4.0, seed),
                                 config_with(1e-8, 500)),
                  10);
    tail_monotone(run_successive(support::gaussian(10, 7, 2.0, 4.0, seed),
                                 config_with(1e-8, 500)),
                  10);
  }
}

TEST_CASE("column-first on m equals row-first on the transpose") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    const Matrix m = support::gaussian(5, 7, 2.0, 4.0, seed);
    const Trace a = run_successive(m, config_with(1e-8, 500, Order::ColumnFirst));
    const Trace b = run_successive(m.transposed(),
                                   config_with(1e-8, 500, Order::RowFirst));
    CHECK(a.converged == b.converged);
    REQUIRE(a.records.size() == b.records.size());
    for (std::size_t k = 0; k < a.records.size(); ++k) {
      CHECK(std::abs(a.records[k].step_sq - b.records[k].step_sq) <=
            1e-12 * (1.0 + a.records[k].step_sq));
      CHECK(std::abs(a.records[k].sum_sq - b.records[k].sum_sq) <= 1e-9 * 35.0);
    }
    CHECK(support::max_abs_diff(a.final, b.final.transposed()) <= 1e-12);
  }
}

TEST_CASE("a column that loses variance stops the run without a record") {
  const Matrix m = Matrix::from_rows(
      {{1.0, 1.0, 2.0}, {2.0, 1.0, 3.0}, {3.0, 1.0, 7.0}});
  const Trace t = run_successive(m, NormConfig{});
  CHECK_FALSE(t.converged);
  CHECK(t.stop_reason == StopReason::ZeroVariance);
  CHECK(t.records.empty());
  CHECK(t.final == t.initial);

  const Trace s = run_simultaneous(m, NormConfig{});
  CHECK_FALSE(s.converged);
  CHECK(s.stop_reason == StopReason::ZeroVariance);
  CHECK(s.records.empty());
}

TEST_CASE("captured iterates line up with the records") {
  const Trace t = run_successive(support::gaussian(3, 4, 0.0, 1.0, 3),
                                 config_with(1e-8, 500, Order::ColumnFirst, true));
  CHECK(t.converged);
  REQUIRE(t.iterates.size() == t.records.size());
  CHECK(t.iterates.back() == t.final);
  for (std::size_t k = 0; k < t.records.size(); ++k)
    CHECK(sum_of_squares(t.iterates[k]) == t.records[k].sum_sq);
  const Trace bare = run_successive(support::gaussian(3, 4, 0.0, 1.0, 3),
                                    config_with(1e-8, 500));
  CHECK(bare.iterates.empty());
  CHECK(bare.final == t.final);
}

TEST_CASE("simultaneous runs never reach tolerance on Gaussian input") {
  std::size_t qualifying = 0;
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const Trace t = run_simultaneous(support::gaussian(5, 5, 2.0, 4.0, seed),
                                     config_with(1e-8, 1000));
    CHECK_FALSE(t.converged);
    CHECK(t.stop_reason != StopReason::Tolerance);
    bool qualifies = t.stop_reason == StopReason::Diverged;
    if (!qualifies && t.records.size() >= 10)
      for (std::size_t k = t.records.size() - 9; k < t.records.size(); ++k)
        if (t.records[k].step_sq >= t.records[k - 1].step_sq) qualifies = true;
    if (qualifies) ++qualifying;
  }
  CHECK(qualifying == 20);
}

TEST_CASE("a simultaneous run that crosses the ceiling stops as diverged") {
  const Trace t = run_simultaneous(support::gaussian(5, 5, 2.0, 4.0, 11),
                                   config_with(1e-8, 1000));
  CHECK_FALSE(t.converged);
  CHECK(t.stop_reason == StopReason::Diverged);
  REQUIRE(!t.records.empty());
  const IterationRecord& last = t.records.back();
  CHECK((last.step_sq > kDivergenceCeiling || last.sum_sq > kDivergenceCeiling));
  CHECK(t.records.size() < 1000);
}

TEST_CASE("one simultaneous step matches its definition") {
  const Matrix m = support::fixed_point_3x3();
  const Trace t = run_simultaneous(m, config_with(1e-30, 1));
  REQUIRE(t.records.size() == 1);

  const AxisStats rs = row_stats(m);
  const AxisStats cs = col_stats(m);
  Matrix expect(3, 3);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      expect(i, j) =
          (m(i, j) - rs.means[i] - cs.means[j]) / (rs.stds[i] * cs.stds[j]);
  CHECK(support::max_abs_diff(t.final, expect) <= 1e-15);
  CHECK(std::abs(t.records[0].step_sq - frobenius_sq_diff(expect, m)) <= 1e-20);
}

TEST_CASE("simultaneous steps do not conserve the squared norm") {
  // Scale the near-fixed-point so row and column stds sit near 1.1: the
  // simultaneous update divides by ~1.21 squared and shrinks the norm, while
  // the successive update restores it to rows*cols regardless of scale.
  const Matrix x0 = support::scaled(support::fixed_point_3x3(), 1.1);
  const double before = sum_of_squares(x0);
  CHECK(std::abs(before - 10.89) <= 1e-2);

  const Trace sim = run_simultaneous(x0, config_with(1e-30, 1));
  REQUIRE(sim.records.size() == 1);
  CHECK(std::abs(sim.records[0].sum_sq - before) > 0.1);

  CHECK(std::abs(sum_of_squares(iterate_once(x0, Order::ColumnFirst)) - 9.0) <=
        1e-9 * 9.0);
}

TEST_CASE("stop reasons and orders have stable names") {
  CHECK(to_string(Order::ColumnFirst) == "column-first");
  CHECK(to_string(Order::RowFirst) == "row-first");
  CHECK(to_string(StopReason::Tolerance) == "tolerance");
  CHECK(to_string(StopReason::MaxIterations) == "max_iterations");
  CHECK(to_string(StopReason::ZeroVariance) == "zero_variance");
  CHECK(to_string(StopReason::Diverged) == "diverged");
}

TEST_CASE("iteration budget of zero returns the input unchanged") {
  const Matrix m = support::gaussian(3, 3, 0.0, 1.0, 5);
  const Trace t = run_successive(m, config_with(1e-8, 0));
  CHECK_FALSE(t.converged);
  CHECK(t.stop_reason == StopReason::MaxIterations);
  CHECK(t.records.empty());
  CHECK(t.final == m);
}
