#pragma once

#include <cstddef>
#include <cstdint>
#include <numeric>
#include <span>
#include <stdexcept>
#include <vector>

#include "slocc/arith/matrix.hpp"
#include "slocc/arith/random.hpp"
#include "slocc/arith/reduce.hpp"

namespace slocc {

/// Dense n-way array with every local dimension equal to d. Coefficients are
/// stored row-major, last index fastest; the last factor is the one the
/// flattening distinguishes.
template <class T>
class BasicTensor {
 public:
  BasicTensor() = default;
  BasicTensor(std::size_t n, std::size_t d, T zero = T{}) : n_(n), d_(d), zero_(zero_like(zero)) {
    if (n < 2 || d < 2) throw std::invalid_argument("tensor needs n >= 2 and d >= 2");
    std::size_t size = 1;
    for (std::size_t i = 0; i < n; ++i) size *= d;
    coeffs_.assign(size, zero_);
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t d() const noexcept { return d_; }
  std::size_t size() const noexcept { return coeffs_.size(); }
  const T& zero() const noexcept { return zero_; }

  std::span<const T> coeffs() const noexcept { return coeffs_; }
  T& operator[](std::size_t flat) { return coeffs_[flat]; }
  const T& operator[](std::size_t flat) const { return coeffs_[flat]; }

  std::size_t flat_index(std::span<const std::size_t> idx) const {
    if (idx.size() != n_) throw std::invalid_argument("index arity mismatch");
    std::size_t f = 0;
    for (auto i : idx) {
      if (i >= d_) throw std::out_of_range("tensor index out of range");
      f = f * d_ + i;
    }
    return f;
  }

  std::vector<std::size_t> multi_index(std::size_t flat) const {
    std::vector<std::size_t> idx(n_);
    for (std::size_t a = n_; a-- > 0;) {
      idx[a] = flat % d_;
      flat /= d_;
    }
    return idx;
  }

  T& at(std::span<const std::size_t> idx) { return coeffs_[flat_index(idx)]; }
  const T& at(std::span<const std::size_t> idx) const { return coeffs_[flat_index(idx)]; }
  T& at(std::initializer_list<std::size_t> idx) { return at(std::span<const std::size_t>(idx.begin(), idx.size())); }
  const T& at(std::initializer_list<std::size_t> idx) const {
    return at(std::span<const std::size_t>(idx.begin(), idx.size()));
  }

  bool is_zero_tensor() const {
    for (const auto& c : coeffs_)
      if (!is_zero(c)) return false;
    return true;
  }

  friend BasicTensor operator+(BasicTensor a, const BasicTensor& b) {
    if (a.n_ != b.n_ || a.d_ != b.d_) throw std::invalid_argument("tensor sum: format mismatch");
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k) a.coeffs_[k] += b.coeffs_[k];
    return a;
  }
  friend BasicTensor operator*(const T& s, BasicTensor a) {
    for (auto& c : a.coeffs_) c *= s;
    return a;
  }
  friend bool operator==(const BasicTensor& a, const BasicTensor& b) {
    return a.n_ == b.n_ && a.d_ == b.d_ && a.coeffs_ == b.coeffs_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t d_ = 0;
  T zero_{};
  std::vector<T> coeffs_;
};

using Tensor = BasicTensor<Rational>;
using FpTensor = BasicTensor<Fp>;

inline std::size_t int_pow(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  while (exp--) r *= base;
  return r;
}

/// eta as a map V_n^dual -> V_1 (x) ... (x) V_{n-1}: a d^{n-1} x d matrix whose
/// column k is the slice eta[..., k].
template <class T>
Matrix<T> flatten_last(const BasicTensor<T>& t) {
  const std::size_t d = t.d();
  const std::size_t rows = t.size() / d;
  Matrix<T> m(rows, d, t.zero());
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t k = 0; k < d; ++k) m(r, k) = t[r * d + k];
  return m;
}

/// Image of the last-factor flattening, a subspace of dimension at most d.
template <class T>
Subspace<T> v_eta(const BasicTensor<T>& t) {
  return Subspace<T>::column_span(flatten_last(t));
}

/// Reorders tensor factors: factor a of the result is factor perm[a] of t.
template <class T>
BasicTensor<T> permute_factors(const BasicTensor<T>& t, std::span<const std::size_t> perm) {
  const std::size_t n = t.n();
  if (perm.size() != n) throw std::invalid_argument("permutation arity mismatch");
  std::vector<bool> seen(n, false);
  for (auto a : perm) {
    if (a >= n || seen[a]) throw std::invalid_argument("not a permutation");
    seen[a] = true;
  }
  BasicTensor<T> out(n, t.d(), t.zero());
  std::vector<std::size_t> src(n);
  for (std::size_t f = 0; f < t.size(); ++f) {
    const auto idx = out.multi_index(f);
    for (std::size_t a = 0; a < n; ++a) src[perm[a]] = idx[a];
    out[f] = t.at(src);
  }
  return out;
}

/// Cyclic rotation: factor a of the result is factor (a + shift) mod n of t.
template <class T>
BasicTensor<T> rotate_factors(const BasicTensor<T>& t, std::size_t shift) {
  std::vector<std::size_t> perm(t.n());
  for (std::size_t a = 0; a < t.n(); ++a) perm[a] = (a + shift) % t.n();
  return permute_factors(t, perm);
}

/// Multiplies factor `axis` by the d x d matrix a (mode product).
template <class T>
BasicTensor<T> apply_on_factor(const BasicTensor<T>& t, std::size_t axis, const Matrix<T>& a) {
  const std::size_t d = t.d();
  if (a.rows() != d || a.cols() != d) throw std::invalid_argument("factor matrix must be d x d");
  const std::size_t inner = int_pow(d, t.n() - 1 - axis);
  const std::size_t outer = t.size() / (inner * d);
  BasicTensor<T> out(t.n(), d, t.zero());
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) {
        const T& aij = a(i, j);
        if (is_zero(aij)) continue;
        for (std::size_t r = 0; r < inner; ++r) out[(o * d + i) * inner + r] += aij * t[(o * d + j) * inner + r];
      }
  return out;
}

/// i.i.d. integer coefficients in [-bound, bound].
inline Tensor random_state(std::size_t n, std::size_t d, std::int64_t bound, std::uint64_t seed) {
  if (bound < 1) throw std::invalid_argument("random_state: bound must be >= 1");
  Tensor t(n, d);
  Sampler rng(seed);
  for (std::size_t f = 0; f < t.size(); ++f) t[f] = Rational(static_cast<long>(rng.uniform(-bound, bound)));
  return t;
}

inline FpTensor reduce_mod_p(const Tensor& t, std::uint32_t p) {
  FpTensor out(t.n(), t.d(), Fp::zero(p));
  for (std::size_t f = 0; f < t.size(); ++f) out[f] = reduce_mod_p(t[f], p);
  return out;
}

}  // namespace slocc
