#include "matnorm/gaussian.hpp"

#include <cmath>
#include <numbers>

namespace matnorm {

std::uint64_t SplitMix64::next_u64() {
  state_ += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

double SplitMix64::next_uniform() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

Matrix generate_gaussian(const GenSpec& spec) {
  if (spec.rows == 0 || spec.cols == 0)
    throw Error("generation requires positive dimensions");
  if (!(spec.variance >= 0.0))
    throw Error("generation requires variance >= 0");

  Matrix out(spec.rows, spec.cols);
  SplitMix64 rng(spec.seed);
  const double sd = std::sqrt(spec.variance);
  const double two_pi = 2.0 * std::numbers::pi;

  auto flat = out.data();
  const std::size_t n = flat.size();
  std::size_t k = 0;
  while (k < n) {
    const double u1 = rng.next_uniform();
    const double u2 = rng.next_uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    flat[k++] = spec.mean + sd * (r * std::cos(two_pi * u2));
    if (k < n) flat[k++] = spec.mean + sd * (r * std::sin(two_pi * u2));
  }
  return out;
}

}  // namespace matnorm
