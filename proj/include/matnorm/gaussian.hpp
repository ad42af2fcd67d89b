#pragma once

#include <cstdint>

#include "matnorm/matrix.hpp"

namespace matnorm {

/// SplitMix64 generator (reference mixing constants). Fast, tiny state,
/// and trivially reproducible from a single 64-bit seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();

  /// Uniform double in (0, 1]: ((next_u64() >> 11) + 1) * 2^-53. The shifted
  /// value never maps to 0, so it is safe under log().
  double next_uniform();

 private:
  std::uint64_t state_;
};

/// Recipe for a seeded Gaussian matrix. Entries are filled row-major from a
/// SplitMix64 stream: consecutive uniforms (u1, u2) go through Box-Muller as
/// r = sqrt(-2 ln u1), z = (r cos(2 pi u2), r sin(2 pi u2)), each entry is
/// mean + sqrt(variance) * z, and the sine draw of an odd-length tail is
/// discarded. Same spec, same matrix, on every run.
struct GenSpec {
  std::size_t rows = 0;
  std::size_t cols = 0;
  double mean = 0.0;
  double variance = 1.0;
  std::uint64_t seed = 0;
};

Matrix generate_gaussian(const GenSpec& spec);

}  // namespace matnorm
