#pragma once

// Shared generators and brute-force oracles for the test suites.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "slocc/slocc.hpp"

namespace slocc::testing {

/// First `count` random states of format (n, d) whose exact verdict is
/// SmoothGeneric, scanning seeds upward from `seed`.
inline std::vector<Tensor> smooth_corpus(std::size_t n, std::size_t d, std::size_t count, std::uint64_t seed = 1,
                                         std::int64_t bound = 5) {
  std::vector<Tensor> out;
  for (; out.size() < count; ++seed) {
    Tensor t = random_state(n, d, bound, seed);
    if (classify(t, {}).status == Status::SmoothGeneric) out.push_back(std::move(t));
  }
  return out;
}

/// Points of Y_eta(F_p) found by testing every tuple of projective points
/// against every column of the flattening, evaluated straight from the
/// tensor. Valid whenever the flattening keeps its rank mod p.
inline std::vector<ProjPoint> brute_force_points(const Tensor& t, std::uint32_t p) {
  const std::size_t groups = t.n() - 1;
  const std::size_t d = t.d();
  const auto pn = projective_space_points(d, p);
  const FpTensor tp = reduce_mod_p(t, p);
  std::vector<ProjPoint> out;
  std::vector<std::size_t> choice(groups, 0);
  for (;;) {
    bool on = true;
    for (std::size_t k = 0; k < d && on; ++k) {
      Fp acc = Fp::zero(p);
      for (std::size_t r = 0; r < int_pow(d, groups); ++r) {
        Fp term = tp[r * d + k];
        std::size_t rest = r;
        for (std::size_t a = groups; a-- > 0;) {
          term *= Fp(pn[choice[a]][rest % d], p);
          rest /= d;
        }
        acc += term;
      }
      on = is_zero(acc);
    }
    if (on) {
      ProjPoint pt{p, {}};
      for (auto c : choice) pt.coords.push_back(pn[c]);
      out.push_back(std::move(pt));
    }
    std::size_t a = groups;
    while (a > 0 && ++choice[a - 1] == pn.size()) choice[--a] = 0;
    if (a == 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// (N - p - 1)^2 <= 4p, the exact form of the Hasse bound.
inline bool within_hasse(std::size_t count, std::uint32_t p) {
  const long long e = static_cast<long long>(count) - static_cast<long long>(p) - 1;
  return e * e <= 4LL * p;
}

inline Matrix<Rational> random_matrix(std::size_t rows, std::size_t cols, std::int64_t bound, Sampler& rng) {
  Matrix<Rational> m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = Rational(static_cast<long>(rng.uniform(-bound, bound)));
  return m;
}

}  // namespace slocc::testing
