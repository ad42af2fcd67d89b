#include "matnorm/fixedpoint.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <optional>
#include <thread>

#include "matnorm/diagnostics.hpp"
#include "matnorm/gaussian.hpp"

namespace matnorm {

bool is_fixed_point(const Matrix& m, double tol, Order order) {
  return frobenius_sq_diff(iterate_once(m, order), m) <= tol &&
         certify_doubly_standardized(m, std::sqrt(tol)).ok;
}

std::vector<double> unique_values(const Matrix& m, double tol) {
  struct Cluster {
    double sum;
    std::size_t count;
    double mean() const { return sum / static_cast<double>(count); }
  };
  std::vector<Cluster> clusters;
  for (const double v : m.data()) {
    bool placed = false;
    for (Cluster& c : clusters) {
      if (std::abs(v - c.mean()) <= tol) {
        c.sum += v;
        ++c.count;
        placed = true;
        break;
      }
    }
    if (!placed) clusters.push_back({v, 1});
  }
  std::vector<double> out;
  out.reserve(clusters.size());
  for (const Cluster& c : clusters) out.push_back(c.mean());
  std::sort(out.begin(), out.end());
  return out;
}

RingResult sample_ring(std::size_t count, std::uint64_t seed,
                       const NormConfig& config, unsigned jobs) {
  std::vector<std::optional<RingSample>> slots(count);

  auto process = [&](std::size_t index) {
    GenSpec gen;
    gen.rows = 3;
    gen.cols = 3;
    gen.mean = 0.0;
    gen.variance = 1.0;
    gen.seed = seed + static_cast<std::uint64_t>(index);
    const Trace trace = run_successive(generate_gaussian(gen), config);
    if (!trace.converged) return;

    RingSample s;
    s.column = {trace.final(0, 0), trace.final(1, 0), trace.final(2, 0)};
    s.source_seed = gen.seed;
    s.iterations = trace.records.size();

    const double sum = s.column[0] + s.column[1] + s.column[2];
    const double sum_sq =
        s.column[0] * s.column[0] + s.column[1] * s.column[1] + s.column[2] * s.column[2];
    if (std::abs(sum) > kRingSumTol) return;
    if (std::abs(sum_sq - 3.0) > kRingSumSqTol) return;
    slots[index] = s;
  };

  if (jobs <= 1) {
    for (std::size_t i = 0; i < count; ++i) process(i);
  } else {
    std::atomic<std::size_t> cursor{0};
    auto worker = [&] {
      for (;;) {
        const std::size_t i = cursor.fetch_add(1);
        if (i >= count) return;
        process(i);
      }
    };
    std::vector<std::thread> pool;
    const unsigned n = std::min<unsigned>(jobs, std::thread::hardware_concurrency() > 0
                                                    ? 4 * std::thread::hardware_concurrency()
                                                    : jobs);
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }

  RingResult result;
  result.samples.reserve(count);
  for (const auto& slot : slots) {
    if (slot)
      result.samples.push_back(*slot);
    else
      ++result.excluded;
  }
  return result;
}

}  // namespace matnorm
