#pragma once

#include <initializer_list>

#include "slocc/states/tensor.hpp"

namespace slocc::states {

/// |0...0> + |1...1> + ... + |d-1 ... d-1>
inline Tensor ghz(std::size_t n, std::size_t d) {
  Tensor t(n, d);
  std::vector<std::size_t> idx(n);
  for (std::size_t k = 0; k < d; ++k) {
    std::fill(idx.begin(), idx.end(), k);
    t.at(idx) = 1;
  }
  return t;
}

/// Qubit W state: sum of basis vectors with exactly one excitation.
inline Tensor w_state(std::size_t n) {
  Tensor t(n, 2);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    idx[a] = 1;
    t.at(idx) = 1;
    idx[a] = 0;
  }
  return t;
}

/// The product state e_0 (x) ... (x) e_0.
inline Tensor separable(std::size_t n, std::size_t d) {
  Tensor t(n, d);
  t[0] = 1;
  return t;
}

/// a(|0000>+|1111>) + b(|0011>+|1100>) + c(|0101>+|1010>) + d(|0110>+|1001>)
inline Tensor four_qubit_family(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  Tensor t(4, 2);
  auto set = [&](std::initializer_list<std::size_t> i, std::initializer_list<std::size_t> j, const Rational& v) {
    t.at(i) += v;
    t.at(j) += v;
  };
  set({0, 0, 0, 0}, {1, 1, 1, 1}, a);
  set({0, 0, 1, 1}, {1, 1, 0, 0}, b);
  set({0, 1, 0, 1}, {1, 0, 1, 0}, c);
  set({0, 1, 1, 0}, {1, 0, 0, 1}, d);
  return t;
}

/// 4-qubit state antisymmetric in factors 0 and 1 whose defining forms are
/// (x0 y1 - x1 y0) * l_k(z) for the rows l_k of `z_part` (2 x 2, invertible).
/// The (x, y)-projection of its model is the diagonal of P^1 x P^1.
inline Tensor diagonal_pair_state(const Matrix<Rational>& z_part) {
  Tensor t(4, 2);
  for (std::size_t l = 0; l < 2; ++l)
    for (std::size_t k = 0; k < 2; ++k) {
      t.at({0, 1, k, l}) += z_part(l, k);
      t.at({1, 0, k, l}) -= z_part(l, k);
    }
  return t;
}

}  // namespace slocc::states
