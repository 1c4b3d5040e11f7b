#pragma once

#include <cstdint>
#include <limits>
#include <random>

#include "slocc/arith/matrix.hpp"

namespace slocc {

/// Seeded integer source with a platform-independent output stream.
/// std::mt19937_64 is fully specified by the standard; the range mapping is
/// done here by rejection because std::uniform_int_distribution is not.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % span + 1) % span;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x > limit);
    return lo + static_cast<std::int64_t>(x % span);
  }

 private:
  std::mt19937_64 engine_;
};

/// d x d integer matrix with entries in [-bound, bound] and nonzero
/// determinant, drawn by rejection from a seeded stream.
inline Matrix<Rational> random_invertible(std::size_t d, std::int64_t bound, std::uint64_t seed) {
  if (d == 0 || bound < 1) throw std::invalid_argument("random_invertible: need d >= 1, bound >= 1");
  Sampler rng(seed);
  for (;;) {
    Matrix<Rational> m(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) m(i, j) = Rational(static_cast<long>(rng.uniform(-bound, bound)));
    if (!is_zero(determinant(m))) return m;
  }
}

}  // namespace slocc
